#include "fbelos/kernels.hpp"

#include "fbelos/errors.hpp"

namespace fbelos::kernels {

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  if (n < 2) throw BadParameter("uniform_grid needs at least two points");
  std::vector<double> xs(n);
  const double span = b - a;
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = a + span * static_cast<double>(i) / static_cast<double>(n - 1);
  xs.back() = b;
  return xs;
}

std::vector<double> interior_grid(double a, double b, std::size_t n) {
  std::vector<double> xs(n);
  const double span = b - a;
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = a + span * static_cast<double>(i + 1) / static_cast<double>(n + 1);
  return xs;
}

}  // namespace fbelos::kernels
