#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "fbelos/errors.hpp"

namespace fbelos::numerics {

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr int kMaxLevels = 12;

/// Slopes larger than this in magnitude are treated as vertical tangents.
inline constexpr double kInfiniteSlope = 1e8;

inline bool is_infinite_slope(double slope) {
  return !std::isfinite(slope) || std::fabs(slope) > kInfiniteSlope;
}

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

template <std::floating_point Real>
constexpr Real tanh_sinh_extent() {
  // Largest t whose node still lies at a normal distance from the endpoint.
  return std::numeric_limits<Real>::max_exponent > 2000 ? Real(8) : Real(6);
}

}  // namespace detail

/// Tanh-sinh quadrature of `fn` over (a, b). `fn` is never evaluated at the
/// endpoints, so integrable endpoint singularities are allowed. Abscissae are
/// formed in `Real`; pass long double bounds to resolve singularities more
/// closely than double allows near an endpoint of magnitude ~1.
///
/// Each level halves the step and reuses every previous node. Convergence is
/// declared from level 3 on when two successive estimates differ by at most
/// rel_tol*|value| + 1e-15; after kMaxLevels halvings NoConvergence is thrown
/// carrying the best estimate.
template <std::floating_point Real, class Fn>
QuadratureResult integrate(Fn&& fn, Real a, Real b, double rel_tol = kDefaultRelTol) {
  if (!(a < b)) throw BadParameter("integrate requires a < b");
  if (!(rel_tol > 0)) throw BadParameter("integrate requires rel_tol > 0");

  constexpr Real half_pi = std::numbers::pi_v<Real> / 2;
  const Real half = (b - a) / 2;
  const Real t_max = detail::tanh_sinh_extent<Real>();
  std::size_t evaluations = 0;

  auto sample = [&](Real x) -> Real {
    ++evaluations;
    const Real y = static_cast<Real>(fn(x));
    if (!std::isfinite(y))
      throw DomainError("integrand", static_cast<double>(x), "non-finite integrand value");
    return y;
  };

  // Sum of w(t)*(f(left node) + f(right node)) for t = first, first+stride, ...
  auto sweep = [&](Real first, Real stride) -> Real {
    Real sum = 0;
    for (Real t = first; t <= t_max; t += stride) {
      const Real u = half_pi * std::sinh(t);
      const Real q = std::exp(-2 * u);
      const Real offset = half * (2 * q / (1 + q));  // distance to the nearer endpoint
      const Real weight = half_pi * std::cosh(t) * 4 * q / ((1 + q) * (1 + q));
      const Real left = a + offset;
      const Real right = b - offset;
      const bool left_inside = left > a;
      const bool right_inside = right < b;
      if (weight == 0 || (!left_inside && !right_inside)) break;
      if (left_inside) sum += weight * sample(left);
      if (right_inside) sum += weight * sample(right);
    }
    return sum;
  };

  Real step = 1;
  Real total = half_pi * sample(a + half) + sweep(step, step);
  Real estimate = half * step * total;
  Real error = std::numeric_limits<Real>::infinity();

  for (int level = 1; level <= kMaxLevels; ++level) {
    step /= 2;
    total += sweep(step, 2 * step);
    const Real next = half * step * total;
    error = std::fabs(next - estimate);
    estimate = next;
    if (level >= 3 && error <= static_cast<Real>(rel_tol) * std::fabs(estimate) + Real(1e-15)) {
      return {static_cast<double>(estimate), static_cast<double>(error), evaluations};
    }
  }
  throw NoConvergence(static_cast<double>(estimate), static_cast<double>(error), evaluations);
}

/// Bisection on [lo, hi] until hi - lo <= tol; returns the midpoint.
/// Throws NoBracket when fn(lo) and fn(hi) share a strict sign.
double find_root(const std::function<double(double)>& fn, double lo, double hi, double tol);

enum class Side { Central, Right, Left };

/// Richardson-extrapolated difference quotient (h0 = 1e-4, two levels).
/// When the extrapolation is inconsistent across step sizes the quotient is
/// probed at shrinking steps; a quotient beyond kInfiniteSlope is returned
/// as is, and geometric growth up to the smallest representable step yields
/// a signed infinity.
double fd_derivative(const std::function<double(double)>& fn, double x, Side side);

}  // namespace fbelos::numerics
