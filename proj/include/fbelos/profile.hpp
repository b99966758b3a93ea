#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbelos/expr.hpp"
#include "fbelos/kernels.hpp"
#include "fbelos/numerics.hpp"

namespace fbelos {

inline constexpr double kEndpointZeroTol = 1e-12;
inline constexpr std::size_t kAdmissibilitySamples = 2049;
inline constexpr std::size_t kNestingSamples = 2049;
inline constexpr double kNestingTol = 1e-12;
inline constexpr double kCuspMargin = 1e-9;

/// An admissible profile f on [0, 1]: f(0) = f(1) = 0 and f > 0 inside.
/// Immutable; copies share the expression trees.
class Profile {
 public:
  const expr::ProfileExpr& expr() const noexcept { return expr_; }
  /// Symbolic derivative, or nullopt when only finite differences apply.
  const std::optional<expr::ProfileExpr>& derivative_expr() const noexcept { return derivative_; }
  const std::string& name() const noexcept { return name_; }

  double value(double x) const { return expr::eval(expr_, x); }
  long double value(long double x) const { return expr::eval_extended(expr_, x); }

  /// f'(x) for interior x.
  double slope(double x) const;
  long double slope(long double x) const;

 private:
  Profile(expr::ProfileExpr e, std::optional<expr::ProfileExpr> d, std::string name)
      : expr_(std::move(e)), derivative_(std::move(d)), name_(std::move(name)) {}

  friend Profile build_profile(expr::ProfileExpr, std::string);

  expr::ProfileExpr expr_;
  std::optional<expr::ProfileExpr> derivative_;
  std::string name_;
};

/// Checks |f(0)|, |f(1)| <= 1e-12 and f > 0 at 2049 interior samples; throws
/// NotAdmissible listing every violation.
Profile build_profile(expr::ProfileExpr e, std::string name = "custom");

/// Named profiles: arbelos, parbelos, parabola(k), sine, cubic(a, b).
Profile preset(std::string_view name, std::span<const double> params = {});

/// A preset reference as written on the command line, e.g. `parabola:k=2`
/// or `cubic:a=2,b=-1.5`. Bare values are taken positionally.
struct PresetSpec {
  std::string name;
  std::vector<double> params;
};

PresetSpec parse_preset_spec(std::string_view text);
Profile preset(const PresetSpec& spec);

/// x -> scale * f((x - offset) / scale) on [offset, offset + scale].
class PlacedProfile {
 public:
  PlacedProfile(Profile base, double scale, double offset);

  const Profile& base() const noexcept { return base_; }
  double scale() const noexcept { return scale_; }
  double offset() const noexcept { return offset_; }
  double start() const noexcept { return offset_; }
  double end() const noexcept { return offset_ + scale_; }

  double local(double x) const { return (x - offset_) / scale_; }
  double value(double x) const { return scale_ * base_.value(local(x)); }
  double slope(double x) const { return base_.slope(local(x)); }
  /// Slope with the local coordinate measured from the nearer end of the
  /// interval and kept strictly inside (0, 1).
  long double slope(long double x) const;

  /// The image of this curve under x -> offset + scale * x, y -> scale * y.
  PlacedProfile place(double scale, double offset) const;

 private:
  Profile base_;
  double scale_;
  double offset_;
};

/// g = (scale p, offset 0) and h = (scale 1 - p, offset p). Throws BadCusp
/// unless p lies in (1e-9, 1 - 1e-9).
std::pair<PlacedProfile, PlacedProfile> lower_profiles(const Profile& f, double p);

/// Largest excess of g over f on [0, p] and of h over f on [p, 1], sampled.
double nesting_excess(const Profile& f, double p,
                      kernels::Policy policy = kernels::Policy::Parallel);

/// True iff g <= f + 1e-12 and h <= f + 1e-12 at 2049 samples of each side.
bool nesting_check(const Profile& f, double p,
                   kernels::Policy policy = kernels::Policy::Parallel);

/// f'(0) and f'(1); nullopt marks a vertical tangent.
struct EndpointSlopes {
  std::optional<double> at0;
  std::optional<double> at1;

  bool finite() const noexcept { return at0.has_value() && at1.has_value(); }
};

EndpointSlopes endpoint_slopes(const Profile& f);

/// Length of the graph over [a, b] by quadrature of sqrt(1 + f'^2).
double arc_length(const Profile& f, double a, double b,
                  double rel_tol = numerics::kDefaultRelTol);
double arc_length(const PlacedProfile& g, double a, double b,
                  double rel_tol = numerics::kDefaultRelTol);
double arc_length(const PlacedProfile& g, double rel_tol = numerics::kDefaultRelTol);

/// Integral of f over [0, 1].
double area_under(const Profile& f, double rel_tol = numerics::kDefaultRelTol);
double area_under(const PlacedProfile& g, double rel_tol = numerics::kDefaultRelTol);

}  // namespace fbelos
