#include "fbelos/profile.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "fbelos/errors.hpp"

namespace fbelos {

namespace {

std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string literal(double v) { return v < 0 ? "(" + shortest(v) + ")" : shortest(v); }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_real(const std::string& text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    throw BadParameter("not a number: '" + text + "'");
  return v;
}

struct PresetInfo {
  std::string_view name;
  std::vector<std::string_view> params;
};

const std::vector<PresetInfo>& preset_table() {
  static const std::vector<PresetInfo> table{
      {"arbelos", {}}, {"parbelos", {}}, {"parabola", {"k"}}, {"sine", {}}, {"cubic", {"a", "b"}},
  };
  return table;
}

const PresetInfo& find_preset(std::string_view name) {
  for (const auto& p : preset_table())
    if (p.name == name) return p;
  throw UnknownPreset("unknown preset '" + std::string(name) +
                      "' (expected arbelos, parbelos, parabola, sine or cubic)");
}

void require_range(double a, double b, double lo, double hi) {
  constexpr double slack = 1e-15;
  if (!(a < b) || a < lo - slack || b > hi + slack)
    throw BadParameter("interval must satisfy " + std::to_string(lo) + " <= a < b <= " +
                       std::to_string(hi));
}


}  // namespace

// ---------------------------------------------------------------------------

double Profile::slope(double x) const {
  if (derivative_) return expr::eval(*derivative_, x);
  return numerics::fd_derivative([this](double t) { return value(t); }, x,
                                 numerics::Side::Central);
}

long double Profile::slope(long double x) const {
  if (derivative_) return expr::eval_extended(*derivative_, x);
  return slope(static_cast<double>(x));
}

Profile build_profile(expr::ProfileExpr e, std::string name) {
  using Kind = AdmissibilityViolation::Kind;
  std::vector<AdmissibilityViolation> violations;

  for (double x : {0.0, 1.0}) {
    try {
      const double v = expr::eval(e, x);
      if (std::fabs(v) > kEndpointZeroTol) violations.push_back({Kind::EndpointNonzero, x, v});
    } catch (const DomainError&) {
      violations.push_back({Kind::NotEvaluable, x, std::numeric_limits<double>::quiet_NaN()});
    }
  }

  const auto xs = kernels::interior_grid(0.0, 1.0, kAdmissibilitySamples);
  struct Sample {
    double value = 0;
    bool ok = false;
  };
  const auto samples = kernels::map_indexed<Sample>(xs.size(), [&](std::size_t i) {
    try {
      return Sample{expr::eval(e, xs[i]), true};
    } catch (const DomainError&) {
      return Sample{std::numeric_limits<double>::quiet_NaN(), false};
    }
  });
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!samples[i].ok)
      violations.push_back({Kind::NotEvaluable, xs[i], samples[i].value});
    else if (!(samples[i].value > 0))
      violations.push_back({Kind::NonPositive, xs[i], samples[i].value});
  }
  if (!violations.empty()) throw NotAdmissible(std::move(violations));

  std::optional<expr::ProfileExpr> derivative;
  try {
    derivative = expr::differentiate(e);
  } catch (const NonDifferentiable&) {
  }
  return Profile(std::move(e), std::move(derivative), std::move(name));
}

PresetSpec parse_preset_spec(std::string_view text) {
  PresetSpec spec;
  const auto colon = text.find(':');
  spec.name = trim(text.substr(0, colon));
  const PresetInfo& info = find_preset(spec.name);
  if (colon == std::string_view::npos) return spec;

  std::vector<std::optional<double>> slots(info.params.size());
  std::size_t positional = 0;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) throw BadParameter("empty preset parameter in '" + std::string(text) + "'");

    const auto eq = item.find('=');
    std::size_t slot = 0;
    double value = 0;
    if (eq == std::string::npos) {
      slot = positional++;
      value = parse_real(item);
    } else {
      const std::string key = trim(std::string_view(item).substr(0, eq));
      value = parse_real(trim(std::string_view(item).substr(eq + 1)));
      slot = info.params.size();
      for (std::size_t i = 0; i < info.params.size(); ++i)
        if (info.params[i] == key) slot = i;
      if (slot == info.params.size())
        throw BadParameter("preset " + spec.name + " has no parameter '" + key + "'");
    }
    if (slot >= slots.size())
      throw BadParameter("too many parameters for preset " + spec.name);
    slots[slot] = value;
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i])
      throw BadParameter("preset " + spec.name + " is missing parameter '" +
                         std::string(info.params[i]) + "'");
    spec.params.push_back(*slots[i]);
  }
  return spec;
}

Profile preset(const PresetSpec& spec) { return preset(spec.name, spec.params); }

Profile preset(std::string_view name, std::span<const double> params) {
  const PresetInfo& info = find_preset(name);
  if (params.size() != info.params.size())
    throw BadParameter("preset " + std::string(name) + " takes " +
                       std::to_string(info.params.size()) + " parameter(s)");

  std::string source;
  std::string label(name);
  if (name == "arbelos") {
    source = "sqrt(x - x^2)";
  } else if (name == "parbelos") {
    source = "x - x^2";
  } else if (name == "sine") {
    source = "sin(pi*x)/pi";
  } else if (name == "parabola") {
    const double k = params[0];
    if (!(k > 0)) throw NotAdmissible("parabola requires k > 0");
    source = literal(k) + "*(x - x^2)";
    label += ":k=" + shortest(k);
  } else {
    const double a = params[0];
    const double b = params[1];
    source = "x*(1 - x)*(" + literal(a) + " + " + literal(b) + "*x)";
    label += ":a=" + shortest(a) + ",b=" + shortest(b);
  }
  return build_profile(expr::parse(source), label);
}

// ---------------------------------------------------------------------------

PlacedProfile::PlacedProfile(Profile base, double scale, double offset)
    : base_(std::move(base)), scale_(scale), offset_(offset) {
  if (!(scale > 0) || !(offset >= 0)) throw BadParameter("placement needs scale > 0, offset >= 0");
}

long double PlacedProfile::slope(long double x) const {
  const long double start = offset_;
  const long double end = static_cast<long double>(offset_) + scale_;
  const long double from_start = x - start;
  const long double from_end = end - x;
  long double u = from_start <= from_end ? from_start / scale_ : 1 - from_end / scale_;
  if (u <= 0) u = std::numeric_limits<long double>::denorm_min();
  if (u >= 1) u = std::nextafter(1.0L, 0.0L);
  return base_.slope(u);
}

PlacedProfile PlacedProfile::place(double scale, double offset) const {
  return PlacedProfile(base_, scale_ * scale, offset + scale * offset_);
}

std::pair<PlacedProfile, PlacedProfile> lower_profiles(const Profile& f, double p) {
  if (!(p > kCuspMargin && p < 1 - kCuspMargin))
    throw BadCusp("cusp p must lie strictly inside (0, 1), got " + std::to_string(p));
  return {PlacedProfile(f, p, 0.0), PlacedProfile(f, 1 - p, p)};
}

double nesting_excess(const Profile& f, double p, kernels::Policy policy) {
  const auto [g, h] = lower_profiles(f, p);
  const auto left = kernels::uniform_grid(0.0, p, kNestingSamples);
  const auto right = kernels::uniform_grid(p, 1.0, kNestingSamples);
  const std::size_t n = left.size();
  const auto excess = kernels::map_indexed<double>(
      2 * n,
      [&](std::size_t i) {
        if (i < n) return g.value(left[i]) - f.value(left[i]);
        return h.value(right[i - n]) - f.value(right[i - n]);
      },
      policy);
  return kernels::max_element(excess, policy).value;
}

bool nesting_check(const Profile& f, double p, kernels::Policy policy) {
  return nesting_excess(f, p, policy) <= kNestingTol;
}

EndpointSlopes endpoint_slopes(const Profile& f) {
  auto one = [&](double x, numerics::Side side) -> std::optional<double> {
    if (f.derivative_expr()) {
      try {
        const double s = expr::eval(*f.derivative_expr(), x);
        if (!numerics::is_infinite_slope(s)) return s;
      } catch (const DomainError&) {
      }
    }
    const double s = numerics::fd_derivative([&](double t) { return f.value(t); }, x, side);
    if (numerics::is_infinite_slope(s)) return std::nullopt;
    return s;
  };
  return {one(0.0, numerics::Side::Right), one(1.0, numerics::Side::Left)};
}

double arc_length(const Profile& f, double a, double b, double rel_tol) {
  return arc_length(PlacedProfile(f, 1.0, 0.0), a, b, rel_tol);
}

double arc_length(const PlacedProfile& g, double a, double b, double rel_tol) {
  require_range(a, b, g.start(), g.end());
  // Integrate in the local coordinate of the base profile, where the
  // endpoints 0 and 1 are exact and singular slopes stay resolvable.
  const long double scale = g.scale();
  const long double u0 = a <= g.start() ? 0.0L : std::clamp((a - g.offset()) / scale, 0.0L, 1.0L);
  const long double u1 = b >= g.end() ? 1.0L : std::clamp((b - g.offset()) / scale, 0.0L, 1.0L);
  if (!(u0 < u1)) return 0.0;
  const Profile& f = g.base();
  const auto integrand = [&](long double u) { return std::hypot(1.0L, f.slope(u)); };
  return static_cast<double>(scale * numerics::integrate(integrand, u0, u1, rel_tol).value);
}

double arc_length(const PlacedProfile& g, double rel_tol) {
  return arc_length(g, g.start(), g.end(), rel_tol);
}

double area_under(const Profile& f, double rel_tol) {
  return numerics::integrate([&](double x) { return f.value(x); }, 0.0, 1.0, rel_tol).value;
}

double area_under(const PlacedProfile& g, double rel_tol) {
  return numerics::integrate([&](double x) { return g.value(x); }, g.start(), g.end(), rel_tol)
      .value;
}

}  // namespace fbelos
