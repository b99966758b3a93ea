#include "fbelos/numerics.hpp"

#include <array>
#include <vector>

namespace fbelos::numerics {

namespace {

constexpr double kInitialStep = 1e-4;

double quotient(const std::function<double(double)>& fn, double x, double h, Side side) {
  switch (side) {
    case Side::Central: return (fn(x + h) - fn(x - h)) / (2 * h);
    case Side::Right: return (fn(x + h) - fn(x)) / h;
    case Side::Left: return (fn(x) - fn(x - h)) / h;
  }
  return 0.0;
}

// Two Richardson levels over steps h, h/2, h/4.
double richardson(const std::function<double(double)>& fn, double x, double h, Side side) {
  const std::array<double, 3> d{quotient(fn, x, h, side), quotient(fn, x, h / 2, side),
                                quotient(fn, x, h / 4, side)};
  // Central error expands in h^2, one-sided in h.
  const double r1 = side == Side::Central ? 4.0 : 2.0;
  const double r2 = r1 * r1;
  const double e0 = (r1 * d[1] - d[0]) / (r1 - 1);
  const double e1 = (r1 * d[2] - d[1]) / (r1 - 1);
  return (r2 * e1 - e0) / (r2 - 1);
}

}  // namespace

double find_root(const std::function<double(double)>& fn, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw BadParameter("find_root requires lo <= hi");
  double flo = fn(lo);
  const double fhi = fn(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw NoBracket("function does not change sign on the bracket");
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double fmid = fn(mid);
    if (fmid == 0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

double fd_derivative(const std::function<double(double)>& fn, double x, Side side) {
  const double coarse = richardson(fn, x, kInitialStep, side);
  const double fine = richardson(fn, x, kInitialStep / 16, side);
  if (std::fabs(coarse - fine) <= 1e-6 * (1 + std::fabs(coarse))) return coarse;

  std::vector<double> seen;
  double step = kInitialStep;
  for (int k = 0; k < 64; ++k, step /= 10) {
    // Use the step actually representable around x.
    double h = 0;
    switch (side) {
      case Side::Central:
      case Side::Right: h = (x + step) - x; break;
      case Side::Left: h = x - (x - step); break;
    }
    if (h <= 0) break;
    const double q = quotient(fn, x, h, side);
    if (std::fabs(q) > kInfiniteSlope) return q;
    seen.push_back(q);
  }

  constexpr std::size_t kGrowthRun = 4;
  if (seen.size() > kGrowthRun) {
    bool growing = true;
    for (std::size_t i = seen.size() - kGrowthRun; i < seen.size(); ++i) {
      const double prev = seen[i - 1];
      const double cur = seen[i];
      if ((prev < 0) != (cur < 0) || std::fabs(cur) < 1.5 * std::fabs(prev)) {
        growing = false;
        break;
      }
    }
    if (growing) return std::copysign(std::numeric_limits<double>::infinity(), seen.back());
  }
  return coarse;
}

}  // namespace fbelos::numerics
