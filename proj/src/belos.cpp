#include "fbelos/belos.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fbelos/errors.hpp"

namespace fbelos {

namespace {

std::string fmt(double v) { return format_real(v); }

void require_interior(double x0) {
  if (!(x0 > 0 && x0 < 1)) throw BadParameter("x0 must lie strictly inside (0, 1)");
}

double slope0_squared_plus_one(double m0) { return 1 + m0 * m0; }

}  // namespace

FBelos construct(const Profile& f, double p, NestingPolicy nesting, kernels::Policy policy) {
  auto [g, h] = lower_profiles(f, p);
  const double excess = nesting_excess(f, p, policy);
  const bool nested = excess <= kNestingTol;
  if (!nested && nesting == NestingPolicy::Require) {
    throw NestingViolation("lower arcs rise above f by up to " + fmt(excess) + " at p = " + fmt(p));
  }
  return FBelos(f, p, std::move(g), std::move(h), nested, endpoint_slopes(f));
}

// ---------------------------------------------------------------------------

BoundaryLengths boundary_lengths(const FBelos& b, double rel_tol) {
  return {arc_length(b.f(), 0.0, 1.0, rel_tol), arc_length(b.g(), rel_tol),
          arc_length(b.h(), rel_tol)};
}

CheckReport check_boundary_lengths(const BoundaryLengths& L) {
  std::ostringstream notes;
  notes << "L_f=" << fmt(L.upper) << " L_g=" << fmt(L.left) << " L_h=" << fmt(L.right);
  return CheckReport::compare("prop1_equal_boundary_lengths", L.left + L.right, L.upper,
                              1e-8 * L.upper, notes.str());
}

PlatoSection plato_section(double a, double b, double c) {
  if (!(a < c && c < b)) throw BadSection("plato_section requires a < c < b");
  const double part = (c - a) * (b - c) / (b - a);
  return {c - part, c + part};
}

MiddleArcs middle_arcs(const FBelos& b, double rel_tol) {
  const double p = b.p();
  // The lower arcs of the copy under g, in g's frame, are f placed by
  // (p, 0) and (1 - p, p); map them through g (and likewise through h).
  PlacedProfile left = PlacedProfile(b.f(), 1 - p, p).place(b.g().scale(), b.g().offset());
  PlacedProfile right = PlacedProfile(b.f(), p, 0.0).place(b.h().scale(), b.h().offset());
  const double left_length = arc_length(left, rel_tol);
  const double right_length = arc_length(right, rel_tol);
  return {std::move(left), std::move(right), left_length, right_length};
}

// ---------------------------------------------------------------------------

Parallelogram point_parallelogram(const FBelos& b, double x0) {
  require_interior(x0);
  const double p = b.p();
  const double y0 = b.f().value(x0);
  return Parallelogram({Point2{x0, y0}, Point2{p * x0, p * y0}, b.cusp(),
                        Point2{(1 - p) * x0 + p, (1 - p) * y0}});
}

double fbelos_area(const FBelos& b, double rel_tol) {
  const double p = b.p();
  return 2 * p * (1 - p) * area_under(b.f(), rel_tol);
}

double region_area(const FBelos& b, double rel_tol) {
  const Profile& f = b.f();
  const auto left = numerics::integrate(
      [&](double x) { return f.value(x) - b.g().value(x); }, 0.0, b.p(), rel_tol);
  const auto right = numerics::integrate(
      [&](double x) { return f.value(x) - b.h().value(x); }, b.p(), 1.0, rel_tol);
  return left.value + right.value;
}

MeanParallelogram mean_parallelogram(const FBelos& b, double rel_tol) {
  const Profile& f = b.f();
  const double mean = area_under(f, rel_tol);
  const auto xs = kernels::uniform_grid(0.0, 1.0, kMeanValueGrid);
  const auto gap = kernels::map_indexed<double>(
      xs.size(), [&](std::size_t i) { return f.value(xs[i]) - mean; });

  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (gap[i] < 0) continue;
    const double c =
        numerics::find_root([&](double x) { return f.value(x) - mean; }, xs[i - 1], xs[i], 1e-15);
    return {c, mean, point_parallelogram(b, c)};
  }
  throw NoMeanValuePoint("f never reaches its mean value on the scan grid");
}

// ---------------------------------------------------------------------------

std::pair<double, double> tangent_slopes(const FBelos& b) {
  const EndpointSlopes& s = b.slopes();
  if (!s.finite()) throw InfiniteSlope("f has a vertical tangent at an endpoint");
  if (std::fabs(*s.at0 - *s.at1) <= kParallelTol)
    throw ParallelTangents("f'(0) equals f'(1); the tangent lines are parallel");
  return {*s.at0, *s.at1};
}

Parallelogram tangent_parallelogram(const FBelos& b) {
  const auto [m0, m1] = tangent_slopes(b);
  const double p = b.p();
  const Line2 start = Line2::through_axis_point(0.0, m0);
  const Line2 cusp0 = Line2::through_axis_point(p, m0);
  const Line2 cusp1 = Line2::through_axis_point(p, m1);
  const Line2 end = Line2::through_axis_point(1.0, m1);
  const auto t1 = intersect(start, cusp1);
  const auto t2 = intersect(start, end);
  const auto t3 = intersect(cusp0, end);
  if (!t1 || !t2 || !t3) throw ParallelTangents("tangent lines do not intersect");
  return Parallelogram({*t1, *t2, *t3, b.cusp()});
}

double tangent_area_formula(const FBelos& b) {
  const auto [m0, m1] = tangent_slopes(b);
  const double p = b.p();
  return p * (1 - p) * std::fabs(m0 * m1 / (m0 - m1));
}

CheckReport check_tangent_area(const FBelos& b, double tol) {
  return CheckReport::compare("prop5_tangent_area", tangent_parallelogram(b).area(),
                              tangent_area_formula(b), tol, "shoelace area vs closed form");
}

bool is_tangent_rectangle(const FBelos& b) {
  const auto [m0, m1] = tangent_slopes(b);
  return std::fabs(m0 * m1 + 1) <= kRectangleTol;
}

double tangent_rectangle_area(const FBelos& b) {
  if (!is_tangent_rectangle(b)) throw NotARectangle("f'(0) f'(1) != -1");
  const double m0 = tangent_slopes(b).first;
  if (!(m0 > 0)) throw BadParameter("rectangle area form needs f'(0) > 0");
  const double p = b.p();
  return p * (1 - p) * m0 / slope0_squared_plus_one(m0);
}

CheckReport tangent_rectangle_check(const FBelos& b, double tol) {
  const auto [m0, m1] = tangent_slopes(b);
  const Parallelogram t = tangent_parallelogram(b);
  const double condition = std::fabs(m0 * m1 + 1);
  const std::string cond = "|f'(0)f'(1)+1|=" + fmt(condition);
  if (condition <= kRectangleTol) {
    const double area = tangent_rectangle_area(b);
    const double defect = t.rectangle_defect();
    return CheckReport::residual("prop6_tangent_rectangle", area, t.area(),
                                 std::max(std::fabs(area - t.area()), defect), tol,
                                 "rectangle; " + cond + "; rectangle area form vs shoelace");
  }
  const double predicted = condition / std::sqrt((1 + m0 * m0) * (1 + m1 * m1));
  return CheckReport::compare("prop6_tangent_rectangle", t.rectangle_defect(), predicted, tol,
                              "not a rectangle; " + cond + "; geometric defect vs slope form");
}

CheckReport prop7_check(const FBelos& b, double rel_tol) {
  const std::string name = "prop7_inequality";
  if (!b.slopes().finite()) return CheckReport::skip(name, "infinite endpoint slope");
  if (!is_tangent_rectangle(b)) return CheckReport::skip(name, "tangent parallelogram is not a rectangle");
  const MeanParallelogram mean = mean_parallelogram(b, rel_tol);
  const double lhs = mean.shape.area();
  const double fc = b.f().value(mean.c);
  const double rhs = 2 * fc * tangent_parallelogram(b).area();
  const bool equal = std::fabs(lhs - rhs) <= kEqualityTol;
  std::string notes = equal ? "equality" : "strict inequality";
  notes += "; lhs/rhs=" + fmt(lhs / rhs) + "; f'(0)=" + fmt(tangent_slopes(b).first);
  return CheckReport::residual(name, lhs, rhs, std::max(0.0, rhs - lhs), kInequalitySlack, notes);
}

Circumcircle circumcircle(const FBelos& b) {
  if (!is_tangent_rectangle(b)) throw NotARectangle("circumcircle needs f'(0) f'(1) = -1");
  const double m0 = tangent_slopes(b).first;
  const double p = b.p();
  const double q = slope0_squared_plus_one(m0);
  const Point2 center{(p + 1 + p * m0 * m0) / (2 * q), m0 / (2 * q)};
  const double radius = distance(center, b.cusp());
  const double second = 1 / q;
  return {Circle{center, radius}, {p, second}, std::fabs(second - p) <= kConditionTol};
}

CheckReport circumcircle_check(const FBelos& b, double tol) {
  const std::string name = "prop8_circumcircle";
  if (!b.slopes().finite()) return CheckReport::skip(name, "infinite endpoint slope");
  if (!is_tangent_rectangle(b)) return CheckReport::skip(name, "tangent parallelogram is not a rectangle");
  const Circumcircle cc = circumcircle(b);
  const Parallelogram t = tangent_parallelogram(b);
  double worst = distance(cc.circle.center, midpoint(t[0], t[2]));
  double farthest = 0;
  for (const Point2& v : t.vertices()) {
    worst = std::max(worst, cc.circle.deviation(v));
    farthest = std::max(farthest, distance(v, cc.circle.center));
  }
  for (double x : cc.axis_points) worst = std::max(worst, cc.circle.deviation({x, 0.0}));
  std::string notes = "axis points " + fmt(cc.axis_points[0]) + ", " + fmt(cc.axis_points[1]);
  if (cc.tangent_to_axis) notes += "; tangent to OX";
  return CheckReport::residual(name, farthest, cc.circle.radius, worst, tol, notes);
}

Line2 diagonal_line(const FBelos& b) {
  const auto [m0, m1] = tangent_slopes(b);
  const double p = b.p();
  return {(1 - 2 * p) * m0 * m1, p * m0 - (1 - p) * m1, p * p * m0 * m1};
}

CheckReport diagonal_line_check(const FBelos& b, double tol) {
  const Line2 line = diagonal_line(b);
  const Parallelogram t = tangent_parallelogram(b);
  const double r1 = std::fabs(line.evaluate(t[0]));
  const double r3 = std::fabs(line.evaluate(t[2]));
  return CheckReport::residual("diagonal_line", r1, r3, std::max(r1, r3), tol,
                               "T1 and T3 on the closed-form diagonal");
}

std::pair<CheckReport, CheckReport> diagonal_conditions(const FBelos& b) {
  const auto [m0, m1] = tangent_slopes(b);
  const double p = b.p();
  const double den = p * m0 - (1 - p) * m1;
  if (std::fabs(den) < kDenominatorTol)
    throw DegenerateDenominator("p f'(0) - (1-p) f'(1) vanishes");
  const double height = p * (p - 1) * m0 * m1 / den;
  const double slope = (2 * p - 1) * m0 * m1 / den;
  const double fp = b.f().value(p);
  const double dfp = b.f().slope(p);
  return {CheckReport::compare("prop9_incidence_condition", fp, height, kConditionTol,
                               "f(p) vs p(p-1)f'(0)f'(1)/D"),
          CheckReport::compare("prop9_tangency_condition", dfp, slope, kConditionTol,
                               "f'(p) vs (2p-1)f'(0)f'(1)/D")};
}

// ---------------------------------------------------------------------------

Characterization characterization_residual(const Profile& f, std::size_t grid_size,
                                           kernels::Policy policy) {
  const EndpointSlopes s = endpoint_slopes(f);
  if (!s.finite()) throw InfiniteSlope("f has a vertical tangent at an endpoint");
  const double m0 = *s.at0;
  const double m1 = *s.at1;
  if (m0 == 0 || m1 == 0) throw DegenerateDenominator("an endpoint slope vanishes");

  const auto xs = kernels::uniform_grid(0.0, 1.0, grid_size);
  const auto residual = kernels::map_indexed<double>(
      xs.size(),
      [&](std::size_t i) {
        const double x = xs[i];
        const double den = x * m0 - (1 - x) * m1;
        if (std::fabs(den) < kDenominatorTol)
          throw DegenerateDenominator("x f'(0) - (1-x) f'(1) vanishes on the grid");
        return std::fabs(f.value(x) - x * (x - 1) * m0 * m1 / den);
      },
      policy);

  Characterization out;
  out.sup_residual = kernels::max_element(residual, policy).value;
  out.symmetry_defect = std::fabs(m0 + m1);
  out.parabola_class = out.sup_residual <= kParabolaClassTol && out.symmetry_defect <= kParabolaClassTol;
  if (out.parabola_class) out.implied_k = m0;
  return out;
}

}  // namespace fbelos
