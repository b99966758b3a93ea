#include "fbelos/geometry.hpp"

#include "fbelos/errors.hpp"

namespace fbelos {

std::optional<Point2> intersect(const Line2& l, const Line2& m) {
  const double det = l.a * m.b - m.a * l.b;
  if (det == 0) return std::nullopt;
  return Point2{(l.b * m.c - m.b * l.c) / det, (m.a * l.c - l.a * m.c) / det};
}

double Parallelogram::area() const {
  double twice = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) twice += cross(v_[i], v_[(i + 1) % v_.size()]);
  return std::fabs(twice) / 2;
}

double Parallelogram::rectangle_defect() const {
  const Point2 side1 = v_[0] - v_[1];
  const Point2 side2 = v_[2] - v_[1];
  const double n1 = norm(side1);
  const double n2 = norm(side2);
  if (n1 < 1e-14 || n2 < 1e-14) throw DegenerateParallelogram("parallelogram has a degenerate side");
  return std::fabs(dot(side1, side2)) / (n1 * n2);
}

}  // namespace fbelos
