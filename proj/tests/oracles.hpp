#pragma once

// Reference values and helpers computed independently of the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// Arc length of x - x^2 on [0, 1]: (sqrt(2) + asinh(1)) / 2.
inline const double parbelos_length = (std::sqrt(2.0) + std::asinh(1.0)) / 2;
inline constexpr double arbelos_length = pi / 2;
inline constexpr double parbelos_area = 1.0 / 6;
inline constexpr double arbelos_area = pi / 8;

// Arc length of sin(pi x)/pi on [0, 1] (mpmath, 30 digits).
inline constexpr double sine_length = 1.21600672342497978;
// Arc length of x(1-x)(2 - 1.5x) on [0, 1] (mpmath).
inline constexpr double cubic_length = 1.24947551431625198;
// Arc length of 2(x - x^2) on [0, 1]: (2 sqrt(5) + asinh(2)) / 4.
inline const double parabola2_length = (2 * std::sqrt(5.0) + std::asinh(2.0)) / 4;

// Smallest root of x - x^2 = 1/6.
inline const double parbelos_mean_point = (1 - std::sqrt(1.0 / 3)) / 2;
// Smallest root of sqrt(x - x^2) = pi/8.
inline const double arbelos_mean_point = (1 - std::sqrt(1 - pi * pi / 16)) / 2;

// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
  return s * h / 3;
}

// Central difference at step h and h/2 combined by one Richardson step.
inline double richardson_derivative(const std::function<double(double)>& f, double x,
                                    double h = 1e-5) {
  auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2 * s); };
  return (4 * d(h / 2) - d(h)) / 3;
}

}  // namespace oracle
