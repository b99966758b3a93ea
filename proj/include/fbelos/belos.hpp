#pragma once

// The f-belos: the region between an admissible profile f on [0, 1] and its
// two homothetic copies g(x) = p f(x/p) and h(x) = (1-p) f((x-p)/(1-p))
// meeting at the cusp P = (p, 0), together with the constructions built on
// it (point and tangent parallelograms, circumcircle, diagonal).

#include <array>
#include <optional>
#include <utility>

#include "fbelos/geometry.hpp"
#include "fbelos/kernels.hpp"
#include "fbelos/profile.hpp"
#include "fbelos/report.hpp"

namespace fbelos {

inline constexpr double kRectangleTol = 1e-9;       // |f'(0) f'(1) + 1|
inline constexpr double kParallelTol = 1e-12;       // |f'(0) - f'(1)|
inline constexpr double kDenominatorTol = 1e-12;
inline constexpr double kConditionTol = 1e-10;      // diagonal incidence/tangency
inline constexpr double kInequalitySlack = 1e-12;
inline constexpr double kEqualityTol = 1e-10;
inline constexpr double kParabolaClassTol = 1e-9;
inline constexpr std::size_t kMeanValueGrid = 1024;

enum class NestingPolicy {
  Require,  // construct throws NestingViolation
  Report,   // construct records the verdict in FBelos::nested()
};

class FBelos {
 public:
  const Profile& f() const noexcept { return f_; }
  double p() const noexcept { return p_; }
  const PlacedProfile& g() const noexcept { return g_; }
  const PlacedProfile& h() const noexcept { return h_; }
  bool nested() const noexcept { return nested_; }
  /// Endpoint slopes of f, fixed at construction.
  const EndpointSlopes& slopes() const noexcept { return slopes_; }

  Point2 origin() const noexcept { return {0.0, 0.0}; }
  Point2 cusp() const noexcept { return {p_, 0.0}; }
  Point2 unit() const noexcept { return {1.0, 0.0}; }

 private:
  FBelos(Profile f, double p, PlacedProfile g, PlacedProfile h, bool nested, EndpointSlopes s)
      : f_(std::move(f)), p_(p), g_(std::move(g)), h_(std::move(h)), nested_(nested),
        slopes_(s) {}

  friend FBelos construct(const Profile&, double, NestingPolicy, kernels::Policy);

  Profile f_;
  double p_;
  PlacedProfile g_;
  PlacedProfile h_;
  bool nested_;
  EndpointSlopes slopes_;
};

/// Throws BadCusp, or NestingViolation under NestingPolicy::Require.
FBelos construct(const Profile& f, double p, NestingPolicy nesting = NestingPolicy::Require,
                 kernels::Policy policy = kernels::Policy::Parallel);

// --- Boundary lengths -------------------------------------------------------

struct BoundaryLengths {
  double upper = 0.0;  // L_f
  double left = 0.0;   // L_g
  double right = 0.0;  // L_h
};

BoundaryLengths boundary_lengths(const FBelos& b, double rel_tol = numerics::kDefaultRelTol);

/// Upper boundary against the sum of the lower arcs, tolerance 1e-8 * L_f.
CheckReport check_boundary_lengths(const BoundaryLengths& lengths);

struct PlatoSection {
  double d = 0.0;
  double e = 0.0;
};

/// For A = a < C = c < B = b, the points D on AC and E on CB dividing each
/// part in the ratio AC:CB. |DC| = |CE| = |AC||CB|/|AB|. Throws BadSection.
PlatoSection plato_section(double a, double b, double c);

/// Middle two lower arcs after nesting a similar f-belos (sub-cusp at the
/// same relative position p) under each of g and h.
struct MiddleArcs {
  PlacedProfile left;   // right lower arc of the copy under g
  PlacedProfile right;  // left lower arc of the copy under h
  double left_length = 0.0;
  double right_length = 0.0;
};

MiddleArcs middle_arcs(const FBelos& b, double rel_tol = numerics::kDefaultRelTol);

// --- Point parallelogram ----------------------------------------------------

/// Vertices (P1, P2, P, P3) with P1 = (x0, f(x0)) on f and P2, P3 the
/// corresponding points on g and h. Throws BadParameter unless 0 < x0 < 1.
Parallelogram point_parallelogram(const FBelos& b, double x0);

/// 2 p (1 - p) times the area under f.
double fbelos_area(const FBelos& b, double rel_tol = numerics::kDefaultRelTol);

/// Region area by direct quadrature of f - g on [0, p] and f - h on [p, 1].
double region_area(const FBelos& b, double rel_tol = numerics::kDefaultRelTol);

struct MeanParallelogram {
  double c = 0.0;     // smallest x with f(x) equal to the mean of f
  double mean = 0.0;  // area under f
  Parallelogram shape;
};

/// Throws NoMeanValuePoint when the grid scan finds no crossing.
MeanParallelogram mean_parallelogram(const FBelos& b, double rel_tol = numerics::kDefaultRelTol);

// --- Tangent parallelogram --------------------------------------------------

/// Slopes (f'(0), f'(1)); throws InfiniteSlope or ParallelTangents.
std::pair<double, double> tangent_slopes(const FBelos& b);

/// Vertices (T1, T2, T3, P) cut out by y = f'(0) x, y = f'(0)(x - p),
/// y = f'(1)(x - p) and y = f'(1)(x - 1).
Parallelogram tangent_parallelogram(const FBelos& b);

/// p (1 - p) |f'(0) f'(1) / (f'(0) - f'(1))|.
double tangent_area_formula(const FBelos& b);

/// Shoelace area of T against the closed form.
CheckReport check_tangent_area(const FBelos& b, double tol = kConditionTol);

bool is_tangent_rectangle(const FBelos& b);

/// p (1 - p) f'(0) / (1 + f'(0)^2). Throws NotARectangle, or BadParameter
/// when f'(0) <= 0.
double tangent_rectangle_area(const FBelos& b);

/// Rectangle case: the rectangle area form against the shoelace area.
/// Otherwise: the geometric rectangle defect of T against the slope form
/// |1 + f'(0) f'(1)| / sqrt((1 + f'(0)^2)(1 + f'(1)^2)).
CheckReport tangent_rectangle_check(const FBelos& b, double tol = kConditionTol);

/// area(P(c)) >= 2 f(c) area(T) when T is a rectangle; skipped otherwise.
/// abs_err is the violation max(0, rhs - lhs).
CheckReport prop7_check(const FBelos& b, double rel_tol = numerics::kDefaultRelTol);

struct Circumcircle {
  Circle circle;
  std::array<double, 2> axis_points{};  // {p, 1 / (1 + f'(0)^2)}
  bool tangent_to_axis = false;
};

/// Throws NotARectangle.
Circumcircle circumcircle(const FBelos& b);

/// Vertices of T and both axis points on the circle; centre at mid T1T3.
CheckReport circumcircle_check(const FBelos& b, double tol = kConditionTol);

/// Line T1T3 as ((1-2p) f'(0) f'(1)) x + (p f'(0) - (1-p) f'(1)) y + p^2 f'(0) f'(1) = 0.
Line2 diagonal_line(const FBelos& b);

/// T1 and T3 on the closed-form diagonal.
CheckReport diagonal_line_check(const FBelos& b, double tol = kConditionTol);

/// (incidence, tangency): |f(p) - p(p-1) f'(0) f'(1) / D| and
/// |f'(p) - (2p-1) f'(0) f'(1) / D| with D = p f'(0) - (1-p) f'(1); each
/// passes at 1e-10. Throws DegenerateDenominator when |D| < 1e-12.
std::pair<CheckReport, CheckReport> diagonal_conditions(const FBelos& b);

// --- Parabola characterization ----------------------------------------------

struct Characterization {
  double sup_residual = 0.0;
  double symmetry_defect = 0.0;  // |f'(0) + f'(1)|
  std::optional<double> implied_k;
  bool parabola_class = false;
};

/// Sup over a uniform grid on [0, 1] of
/// |f(x) - x(x-1) f'(0) f'(1) / (x f'(0) - (1-x) f'(1))|.
Characterization characterization_residual(const Profile& f, std::size_t grid_size,
                                           kernels::Policy policy = kernels::Policy::Parallel);

}  // namespace fbelos
