#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fbelos {

/// One named numerical check. For evaluated checks pass <=> abs_err <= tol.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string notes;

  /// abs_err = |lhs - rhs|.
  static CheckReport compare(std::string name, double lhs, double rhs, double tol,
                             std::string notes = {});
  /// Caller-supplied residual.
  static CheckReport residual(std::string name, double lhs, double rhs, double abs_err, double tol,
                              std::string notes = {});
  static CheckReport skip(std::string name, std::string reason);

  /// "pass", "fail" or "skipped: <reason>".
  std::string status() const;
};

struct AnalysisReport {
  std::string profile;
  std::string expression;
  double p = 0.0;
  bool nested = true;
  std::vector<CheckReport> checks;

  /// Orders checks by name.
  void sort();
  const CheckReport* find(const std::string& name) const;
  /// True when no evaluated check failed; skipped checks are ignored.
  bool all_passed() const;
};

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const AnalysisReport& r);

/// Deterministic text: object keys sorted, two-space indent, floating
/// values with 15 significant digits, non-finite values as null.
std::string dump_json(const nlohmann::json& j);

/// Printf-style %.15g.
std::string format_real(double v);

}  // namespace fbelos
