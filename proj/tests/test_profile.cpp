#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fbelos/errors.hpp"
#include "fbelos/expr.hpp"
#include "fbelos/profile.hpp"
#include "oracles.hpp"

using namespace fbelos;

namespace {

Profile custom(const std::string& text) { return build_profile(expr::parse(text)); }

std::vector<Profile> all_presets() {
  return {preset("arbelos"), preset("parbelos"), preset("parabola", std::vector<double>{2}),
          preset("sine"), preset("cubic", std::vector<double>{2, -1.5})};
}

// Brute-force check of p f(x/p) <= f(x) and (1-p) f((x-p)/(1-p)) <= f(x).
double brute_excess(const Profile& f, double p, int n) {
  double worst = -1;
  for (int i = 1; i < n; ++i) {
    const double x = p * i / n;
    worst = std::max(worst, p * f.value(x / p) - f.value(x));
    const double y = p + (1 - p) * i / n;
    worst = std::max(worst, (1 - p) * f.value((y - p) / (1 - p)) - f.value(y));
  }
  return worst;
}

}  // namespace

TEST_CASE("admissibility") {
  CHECK_NOTHROW(custom("x - x^2"));
  CHECK_NOTHROW(custom("sqrt(x - x^2)"));
  try {
    custom("x");
    FAIL("expected NotAdmissible");
  } catch (const NotAdmissible& e) {
    REQUIRE(e.violations().size() == 1);
    CHECK(e.violations()[0].kind == AdmissibilityViolation::Kind::EndpointNonzero);
    CHECK(e.violations()[0].x == 1.0);
  }
  try {
    custom("x*(x - 0.5)*(x - 1)");
    FAIL("expected NotAdmissible");
  } catch (const NotAdmissible& e) {
    CHECK(e.violations().size() > 100);
  }
  CHECK_THROWS_AS(custom("log(x)*(1 - x)"), NotAdmissible);
  CHECK_THROWS_AS(custom("1/(x - 0.5)*x*(1 - x)"), NotAdmissible);
}

TEST_CASE("presets") {
  const Profile a = preset("parabola", std::vector<double>{1});
  const Profile b = custom("x - x^2");
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    CHECK(a.value(x) == b.value(x));
  }
  const Profile c = preset("cubic", std::vector<double>{2, -1.5});
  const EndpointSlopes s = endpoint_slopes(c);
  REQUIRE(s.finite());
  CHECK(*s.at0 == 2.0);
  CHECK(*s.at1 == -0.5);
  CHECK_THROWS_AS(preset("cubic", std::vector<double>{-1, 0}), NotAdmissible);
  CHECK_THROWS_AS(preset("parabola", std::vector<double>{-2}), NotAdmissible);
  CHECK_THROWS_AS(preset("ellipse"), UnknownPreset);
  CHECK_THROWS_AS(preset("parabola", std::vector<double>{1, 2}), BadParameter);
}

TEST_CASE("preset specs from the command line") {
  CHECK(preset(parse_preset_spec("parabola:k=2")).value(0.5) == 0.5);
  CHECK(preset(parse_preset_spec("cubic:a=2,b=-1.5")).value(0.5) == doctest::Approx(0.3125));
  CHECK(preset(parse_preset_spec("cubic:2,-1.5")).value(0.5) == doctest::Approx(0.3125));
  CHECK(preset(parse_preset_spec("parbelos")).name() == "parbelos");
  CHECK_THROWS_AS(preset(parse_preset_spec("parabola:q=2")), BadParameter);
  CHECK_THROWS_AS(parse_preset_spec("parabola:k=two"), BadParameter);
}

TEST_CASE("lower profiles") {
  const Profile f = preset("parbelos");
  const auto [g, h] = lower_profiles(f, 0.5);
  CHECK(g.value(0.25) == 0.125);
  CHECK(h.value(0.75) == 0.125);
  for (const Profile& any : all_presets()) {
    const auto [g3, h3] = lower_profiles(any, 0.3);
    CHECK(std::fabs(g3.value(0.3)) <= 1e-12);
    CHECK(std::fabs(h3.value(0.3)) <= 1e-12);
  }
  CHECK_THROWS_AS(lower_profiles(f, 1.0), BadCusp);
  CHECK_THROWS_AS(lower_profiles(f, 0.0), BadCusp);
  CHECK_THROWS_AS(lower_profiles(f, -0.2), BadCusp);
}

TEST_CASE("nesting") {
  const Profile par = preset("parbelos");
  for (int i = 1; i <= 9; ++i) CHECK(nesting_check(par, i / 10.0));
  CHECK(nesting_check(preset("arbelos"), 0.5));

  const Profile bump = custom("x*(1-x)*((x-0.5)^2+0.01)");
  CHECK_FALSE(nesting_check(bump, 0.6));
  CHECK(brute_excess(bump, 0.6, 4000) > 1e-4);

  const Profile cubic = preset("cubic", std::vector<double>{2, -1.5});
  for (double p : {0.1, 0.5, 0.9}) {
    CHECK_FALSE(nesting_check(cubic, p));
    CHECK(nesting_excess(cubic, p) == doctest::Approx(brute_excess(cubic, p, 2048)).epsilon(1e-3));
  }
}

TEST_CASE("randomized search finds a non-nesting profile") {
  // Profiles x(1-x)(a + b (x - c)^2) with a > 0 are admissible; search for
  // one whose lower copy rises above it, confirming with brute force.
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> ua(0.005, 0.2), ub(0.5, 4), uc(0.2, 0.8), up(0.1, 0.9);
  bool found = false;
  for (int trial = 0; trial < 200 && !found; ++trial) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "x*(1-x)*(%.4f + %.4f*(x - %.4f)^2)", ua(rng), ub(rng), uc(rng));
    const Profile f = custom(buf);
    const double p = up(rng);
    if (!nesting_check(f, p)) {
      CAPTURE(buf);
      CHECK(brute_excess(f, p, 4096) > 0);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("endpoint slopes") {
  const EndpointSlopes par = endpoint_slopes(preset("parbelos"));
  CHECK(*par.at0 == 1.0);
  CHECK(*par.at1 == -1.0);
  for (double k : {0.5, 1.0, 2.0, 7.25}) {
    const EndpointSlopes s = endpoint_slopes(preset("parabola", std::vector<double>{k}));
    CHECK(*s.at0 == k);
    CHECK(*s.at1 == -k);
  }
  const EndpointSlopes arb = endpoint_slopes(preset("arbelos"));
  CHECK_FALSE(arb.at0.has_value());
  CHECK_FALSE(arb.at1.has_value());
  CHECK_FALSE(arb.finite());
  const EndpointSlopes sine = endpoint_slopes(preset("sine"));
  CHECK(*sine.at0 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(*sine.at1 == doctest::Approx(-1.0).epsilon(1e-15));
  // Only finite differences apply to abs.
  const EndpointSlopes fd = endpoint_slopes(custom("x*(1-x)*(1 + abs(x - 0.5))"));
  CHECK(*fd.at0 == doctest::Approx(1.5).epsilon(1e-7));
  CHECK(*fd.at1 == doctest::Approx(-1.5).epsilon(1e-7));
}

TEST_CASE("arc lengths") {
  CHECK(std::fabs(arc_length(preset("arbelos"), 0.0, 1.0) - oracle::arbelos_length) <= 1e-9);
  CHECK(std::fabs(arc_length(preset("parbelos"), 0.0, 1.0) - oracle::parbelos_length) <= 1e-12);
  CHECK(std::fabs(arc_length(preset("sine"), 0.0, 1.0) - oracle::sine_length) <= 1e-11);
  CHECK(std::fabs(arc_length(preset("cubic", std::vector<double>{2, -1.5}), 0.0, 1.0) -
                  oracle::cubic_length) <= 1e-11);
  CHECK(std::fabs(arc_length(preset("parabola", std::vector<double>{2}), 0.0, 1.0) -
                  oracle::parabola2_length) <= 1e-11);
  const auto [g, h] = lower_profiles(preset("parbelos"), 0.5);
  CHECK(std::fabs(arc_length(g, 0.0, 0.5) - 0.5 * oracle::parbelos_length) <= 1e-12);
  // Partial arcs add up.
  const Profile sine = preset("sine");
  CHECK(std::fabs(arc_length(sine, 0.0, 0.3) + arc_length(sine, 0.3, 1.0) - oracle::sine_length) <=
        1e-11);
  CHECK_THROWS_AS(arc_length(sine, 0.5, 0.2), BadParameter);
  CHECK_THROWS_AS(arc_length(sine, 0.0, 1.5), BadParameter);
}

TEST_CASE("arc length of a profile with only a numeric derivative") {
  // x(1-x)(1.5-x) on [0, 1/2] and x(1-x)(0.5+x) on [1/2, 1] (mpmath).
  const Profile f = custom("x*(1-x)*(1 + abs(x - 0.5))");
  CHECK_FALSE(f.derivative_expr().has_value());
  const double L = arc_length(f, 0.0, 0.5) + arc_length(f, 0.5, 1.0);
  // Central differences straddle the kink within one step of x = 1/2.
  CHECK(std::fabs(L - 1.20523799177760756) <= 1e-6);
}

TEST_CASE("areas") {
  CHECK(std::fabs(area_under(preset("parbelos")) - 1.0 / 6) <= 1e-14);
  CHECK(std::fabs(area_under(preset("arbelos")) - oracle::arbelos_area) <= 1e-11);
  CHECK(std::fabs(area_under(preset("parabola", std::vector<double>{2})) - 1.0 / 3) <= 1e-14);
  CHECK(std::fabs(area_under(preset("sine")) - 2 / (oracle::pi * oracle::pi)) <= 1e-14);
}

TEST_CASE("similarity laws") {
  for (const Profile& f : all_presets()) {
    const double L = arc_length(f, 0.0, 1.0);
    const double A = area_under(f);
    for (double p : {0.2, 0.5, 0.8}) {
      CAPTURE(f.name());
      CAPTURE(p);
      const auto [g, h] = lower_profiles(f, p);
      CHECK(std::fabs(arc_length(g) - p * L) <= 1e-8);
      CHECK(std::fabs(arc_length(h) - (1 - p) * L) <= 1e-8);
      CHECK(std::fabs(area_under(g) - p * p * A) <= 1e-9);
      CHECK(std::fabs(area_under(h) - (1 - p) * (1 - p) * A) <= 1e-9);
    }
  }
}

TEST_CASE("placed profiles compose") {
  const Profile f = preset("sine");
  const PlacedProfile inner(f, 0.4, 0.6);
  const PlacedProfile twice = inner.place(0.5, 0.1);
  CHECK(twice.scale() == doctest::Approx(0.2));
  CHECK(twice.offset() == doctest::Approx(0.4));
  for (double u : {0.1, 0.5, 0.9}) {
    const double x = 0.6 + 0.4 * u;
    CHECK(twice.value(0.1 + 0.5 * x) == doctest::Approx(0.5 * inner.value(x)).epsilon(1e-14));
  }
}
