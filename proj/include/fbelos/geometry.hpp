#pragma once

#include <array>
#include <cmath>
#include <optional>

namespace fbelos {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2, Point2) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 midpoint(Point2 a, Point2 b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

/// a*x + b*y + c = 0
struct Line2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  /// The line y = slope * (x - x0).
  static Line2 through_axis_point(double x0, double slope) { return {slope, -1.0, -slope * x0}; }
  static Line2 through(Point2 p, Point2 q) {
    return {q.y - p.y, p.x - q.x, cross(q, p)};
  }

  double evaluate(Point2 p) const { return a * p.x + b * p.y + c; }
};

/// Nullopt for parallel (or coincident) lines.
std::optional<Point2> intersect(const Line2& l, const Line2& m);

struct Circle {
  Point2 center;
  double radius = 0.0;

  /// Distance from p to the circle.
  double deviation(Point2 p) const { return std::fabs(distance(p, center) - radius); }
};

/// Four ordered vertices V1 V2 V3 V4 with V2->V1 equal to V3->V4.
class Parallelogram {
 public:
  Parallelogram() = default;
  explicit Parallelogram(std::array<Point2, 4> vertices) : v_(vertices) {}

  const std::array<Point2, 4>& vertices() const noexcept { return v_; }
  Point2 operator[](std::size_t i) const { return v_[i]; }

  /// Shoelace area.
  double area() const;

  /// |V2V1 - V3V4|; zero for an exact parallelogram.
  double law_residual() const { return norm((v_[0] - v_[1]) - (v_[3] - v_[2])); }

  /// |cos| of the angle at V2, zero exactly for rectangles. Throws
  /// DegenerateParallelogram when a side is shorter than 1e-14.
  double rectangle_defect() const;

  /// Diagonal V1V3 and diagonal V2V4.
  std::array<Point2, 2> diagonal13() const { return {v_[0], v_[2]}; }
  std::array<Point2, 2> diagonal24() const { return {v_[1], v_[3]}; }

 private:
  std::array<Point2, 4> v_{};
};

}  // namespace fbelos
