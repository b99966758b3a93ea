#include "fbelos/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fbelos {

namespace {

void write(const nlohmann::json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      // nlohmann::json objects are std::map backed, so iteration is sorted.
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(it.key()).dump() + ": ";
        write(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write(j[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_real(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

CheckReport CheckReport::compare(std::string name, double lhs, double rhs, double tol,
                                 std::string notes) {
  return residual(std::move(name), lhs, rhs, std::fabs(lhs - rhs), tol, std::move(notes));
}

CheckReport CheckReport::residual(std::string name, double lhs, double rhs, double abs_err,
                                  double tol, std::string notes) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = abs_err;
  r.tol = tol;
  r.pass = abs_err <= tol;
  r.notes = std::move(notes);
  return r;
}

CheckReport CheckReport::skip(std::string name, std::string reason) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = r.rhs = r.abs_err = r.tol = NAN;
  r.skipped = true;
  r.notes = std::move(reason);
  return r;
}

std::string CheckReport::status() const {
  if (skipped) return "skipped: " + notes;
  return pass ? "pass" : "fail";
}

void AnalysisReport::sort() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
}

const CheckReport* AnalysisReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool AnalysisReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.skipped || c.pass; });
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["lhs"] = number_or_null(r.lhs);
  j["rhs"] = number_or_null(r.rhs);
  j["abs_err"] = number_or_null(r.abs_err);
  j["tol"] = number_or_null(r.tol);
  j["pass"] = r.skipped ? nlohmann::json(nullptr) : nlohmann::json(r.pass);
  j["status"] = r.status();
  j["notes"] = r.notes;
  return j;
}

nlohmann::json to_json(const AnalysisReport& r) {
  AnalysisReport sorted = r;
  sorted.sort();
  nlohmann::json j;
  j["profile"] = sorted.profile;
  j["expression"] = sorted.expression;
  j["p"] = sorted.p;
  j["nested"] = sorted.nested;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : sorted.checks) j["checks"].push_back(to_json(c));
  return j;
}

std::string dump_json(const nlohmann::json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace fbelos
