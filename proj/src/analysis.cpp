#include "fbelos/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "fbelos/errors.hpp"

namespace fbelos {

namespace {

constexpr double kSimilarityTol = 1e-8;
constexpr double kCongruenceTol = 1e-10;
constexpr double kHarmonicTol = 1e-8;
constexpr double kLawTol = 1e-14;
constexpr double kRegionTol = 1e-7;
constexpr double kRectangleDefectTol = 1e-10;

void lengths_checks(const FBelos& b, const AnalysisOptions& o, AnalysisReport& out) {
  const double p = b.p();
  const BoundaryLengths L = boundary_lengths(b, o.rel_tol);
  out.checks.push_back(check_boundary_lengths(L));
  const double similarity =
      std::max(std::fabs(L.left - p * L.upper), std::fabs(L.right - (1 - p) * L.upper));
  out.checks.push_back(CheckReport::residual("prop1_similarity_scaling", L.left / L.upper, p,
                                             similarity, kSimilarityTol,
                                             "L_g/L_f vs p; max deviation from p L_f, (1-p) L_f"));

  const MiddleArcs arcs = middle_arcs(b, o.rel_tol);
  out.checks.push_back(CheckReport::compare("prop2_middle_arcs_congruent", arcs.left_length,
                                            arcs.right_length, kCongruenceTol));
  const double half_harmonic = L.left * L.right / (L.left + L.right);
  out.checks.push_back(CheckReport::compare(
      "prop2_half_harmonic_mean", arcs.left_length, half_harmonic, kHarmonicTol,
      "p(1-p)L_f=" + format_real(p * (1 - p) * L.upper)));

  const PlatoSection section = plato_section(0.0, 1.0, p);
  const double dc = p - section.d;
  const double ce = section.e - p;
  const double placement = std::max(std::fabs(section.d - arcs.left.start()),
                                     std::fabs(section.e - arcs.right.end()));
  out.checks.push_back(CheckReport::residual(
      "lemma_plato_section", dc, ce,
      std::max({std::fabs(dc - ce), std::fabs(dc - p * (1 - p)), placement}), o.tol,
      "|DC| vs |CE|; D, E match the middle arc ends"));
}

void point_parallelogram_checks(const FBelos& b, const AnalysisOptions& o, AnalysisReport& out) {
  const double p = b.p();
  const auto xs = kernels::interior_grid(0.0, 1.0, o.grid);
  struct Row {
    double law = 0, area = 0, dot = 0;
    bool rectangle = false;
    bool condition = false;
  };
  const auto rows = kernels::map_indexed<Row>(
      xs.size(),
      [&](std::size_t i) {
        const double x0 = xs[i];
        const Parallelogram q = point_parallelogram(b, x0);
        const double y0 = q[0].y;
        const double closed = p * (1 - p) * (x0 * (1 - x0) - y0 * y0);
        return Row{q.law_residual(), std::fabs(q.area() - p * (1 - p) * y0),
                   std::fabs(dot(q[2] - q[1], q[0] - q[1]) - closed),
                   q.rectangle_defect() <= kRectangleDefectTol,
                   std::fabs(x0 * (1 - x0) - y0 * y0) <= kRectangleDefectTol};
      },
      o.policy);

  double law = 0, area = 0, dotres = 0;
  std::size_t rectangles = 0, agree = 0;
  for (const Row& r : rows) {
    law = std::max(law, r.law);
    area = std::max(area, r.area);
    dotres = std::max(dotres, r.dot);
    rectangles += r.rectangle;
    agree += r.rectangle == r.condition;
  }
  const std::string sampled = std::to_string(xs.size()) + " sampled x0";
  out.checks.push_back(CheckReport::residual("sec4_parallelogram_law", law, 0.0, law, kLawTol,
                                             "max |P2P1 - PP3| over " + sampled));
  out.checks.push_back(CheckReport::residual("sec4_point_parallelogram_area", area, 0.0, area,
                                             o.tol, "max |area - p(1-p)f(x0)| over " + sampled));
  out.checks.push_back(CheckReport::residual(
      "prop3_rectangle_condition", dotres, 0.0, dotres, o.tol,
      "max |P2P.P2P1 - p(1-p)(x0-x0^2-f^2)|; rectangles at " + std::to_string(rectangles) + "/" +
          std::to_string(xs.size()) + " x0; defect and condition agree at " +
          std::to_string(agree)));
}

void area_checks(const FBelos& b, const AnalysisOptions& o, AnalysisReport& out) {
  const double area = fbelos_area(b, o.rel_tol);
  const MeanParallelogram mean = mean_parallelogram(b, o.rel_tol);
  const std::string ratio =
      "area/area(P(1/2))=" + format_real(area / point_parallelogram(b, 0.5).area());
  out.checks.push_back(CheckReport::compare(
      "prop4_area_identity", area, 2 * mean.shape.area(), o.tol,
      "c=" + format_real(mean.c) + " mean=" + format_real(mean.mean) + " " + ratio));
  out.checks.push_back(CheckReport::compare("prop4_region_quadrature", region_area(b, o.rel_tol),
                                            area, kRegionTol, ratio));
}

std::optional<std::string> tangent_unavailable(const FBelos& b) {
  const EndpointSlopes& s = b.slopes();
  if (!s.finite()) return std::string("infinite endpoint slope");
  if (std::fabs(*s.at0 - *s.at1) <= kParallelTol) return std::string("parallel endpoint tangents");
  return std::nullopt;
}

void diagonal_identity_checks(const FBelos& b, const AnalysisOptions& o, AnalysisReport& out) {
  const auto [m0, m1] = tangent_slopes(b);
  const double p = b.p();
  const double den = p * m0 - (1 - p) * m1;
  if (std::fabs(den) < kDenominatorTol) {
    out.checks.push_back(CheckReport::skip("prop9_incidence", "vertical diagonal"));
    out.checks.push_back(CheckReport::skip("prop9_tangency", "vertical diagonal"));
    return;
  }
  const Parallelogram t = tangent_parallelogram(b);
  const Point2 t1 = t[0];
  const Point2 t3 = t[2];
  const double vertex_slope = (t3.y - t1.y) / (t3.x - t1.x);
  const double line_at_p = t1.y + vertex_slope * (p - t1.x);
  const double fp = b.f().value(p);
  const double dfp = b.f().slope(p);
  const auto [incidence, tangency] = diagonal_conditions(b);

  auto verdict = [](const CheckReport& c) {
    return (c.pass ? "condition holds" : "condition does not hold") + std::string("; residual ") +
           format_real(c.abs_err);
  };
  out.checks.push_back(CheckReport::compare("prop9_incidence", fp - line_at_p, fp - incidence.rhs,
                                            o.tol, "vertex diagonal vs closed form; " +
                                                       verdict(incidence)));
  out.checks.push_back(CheckReport::compare("prop9_tangency", dfp - vertex_slope,
                                            dfp - tangency.rhs, o.tol,
                                            "vertex diagonal vs closed form; " + verdict(tangency)));
}

void tangent_checks(const FBelos& b, const AnalysisOptions& o, AnalysisReport& out) {
  static const char* names[] = {"diagonal_line",   "prop5_tangent_area", "prop6_tangent_rectangle",
                                "prop7_inequality", "prop8_circumcircle", "prop9_incidence",
                                "prop9_tangency"};
  if (const auto reason = tangent_unavailable(b)) {
    for (const char* n : names) out.checks.push_back(CheckReport::skip(n, *reason));
    return;
  }
  out.checks.push_back(check_tangent_area(b, o.tol));
  out.checks.push_back(tangent_rectangle_check(b, o.tol));
  out.checks.push_back(prop7_check(b, o.rel_tol));
  out.checks.push_back(circumcircle_check(b, o.tol));
  out.checks.push_back(diagonal_line_check(b, o.tol));
  diagonal_identity_checks(b, o, out);
}

}  // namespace

AnalysisReport analyze(const FBelos& b, const AnalysisOptions& options) {
  AnalysisReport out;
  out.profile = b.f().name();
  out.expression = b.f().expr().source_text();
  out.p = b.p();
  out.nested = b.nested();
  lengths_checks(b, options, out);
  point_parallelogram_checks(b, options, out);
  area_checks(b, options, out);
  tangent_checks(b, options, out);
  out.sort();
  return out;
}

std::vector<AnalysisReport> analyze_sweep(const std::vector<SweepCell>& cells,
                                          const AnalysisOptions& options,
                                          kernels::Policy policy) {
  AnalysisOptions inner = options;
  inner.policy = kernels::Policy::Serial;
  return kernels::map_indexed<AnalysisReport>(
      cells.size(),
      [&](std::size_t i) {
        const FBelos b =
            construct(cells[i].profile, cells[i].p, NestingPolicy::Report, kernels::Policy::Serial);
        return analyze(b, inner);
      },
      policy);
}

}  // namespace fbelos
