#include <doctest.h>

#include <cmath>
#include <regex>
#include <string>
#include <vector>

#include "fbelos/errors.hpp"
#include "fbelos/render.hpp"

using namespace fbelos;
using namespace fbelos::render;

namespace {

Scene scene(const char* name, double p, Overlays o = {}) {
  return Scene{construct(preset(parse_preset_spec(name)), p), o, 512, {}};
}

std::vector<Point2> polygon_points(const std::string& svg, const std::string& cls) {
  const std::regex re("<polygon class=\"" + cls + "\" points=\"([^\"]*)\"");
  std::smatch m;
  std::vector<Point2> out;
  if (!std::regex_search(svg, m, re)) return out;
  const std::string pts = m[1];
  const std::regex pair("(-?[0-9.]+),(-?[0-9.]+)");
  for (auto it = std::sregex_iterator(pts.begin(), pts.end(), pair); it != std::sregex_iterator(); ++it)
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2])});
  return out;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("arbelos figure") {
  const std::string svg = render_svg(scene("arbelos", 0.3));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("viewBox=\"0 0 800.000 480.000\"") != std::string::npos);
  CHECK(count(svg, "<polyline") == 3);
  CHECK(svg.find("<!-- transform: X = ") != std::string::npos);
  for (const char* label : {">O<", ">P<", ">I<"}) CHECK(svg.find(label) != std::string::npos);
  // 512 uniform samples plus two refinement points at each vertical end.
  const std::regex poly("<polyline class=\"upper\" points=\"([^\"]*)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, poly));
  const std::string pts = m[1];
  CHECK(count(pts, ",") == 516);
  CHECK(svg.find("nan") == std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  Overlays o;
  o.tangent_parallelogram = true;
  o.circumcircle = true;
  o.point_parallelogram = 0.3;
  o.mean_parallelogram = true;
  o.diagonal = true;
  o.labels = true;
  const Scene s = scene("parbelos", 0.5, o);
  CHECK(render_svg(s) == render_svg(s));
  CHECK(render_svg(s) == render_svg(scene("parbelos", 0.5, o)));
}

TEST_CASE("circumcircle touches the baseline at the cusp") {
  Overlays o;
  o.tangent_parallelogram = true;
  o.circumcircle = true;
  const Scene s = scene("parbelos", 0.5, o);
  const std::string svg = render_svg(s);
  const Transform t = fit(s);
  const std::regex re("<circle class=\"circle\" cx=\"([0-9.]+)\" cy=\"([0-9.]+)\" r=\"([0-9.]+)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, re));
  const Point2 cusp = t.apply({0.5, 0.0});
  CHECK(std::fabs(std::stod(m[1]) - cusp.x) <= 0.0015);
  CHECK(std::fabs(std::stod(m[2]) + std::stod(m[3]) - cusp.y) <= 0.003);
}

TEST_CASE("overlay vertices lie within half a pixel of exact positions") {
  for (double p : {0.2, 0.5, 0.8}) {
    for (double x0 : {0.1, 0.5, 0.9}) {
      Overlays o;
      o.tangent_parallelogram = true;
      o.point_parallelogram = x0;
      o.mean_parallelogram = true;
      const Scene s = scene("sine", p, o);
      const std::string svg = render_svg(s);
      const Transform t = fit(s);
      const FBelos& b = s.fbelos;
      const std::pair<const char*, Parallelogram> shapes[] = {
          {"tangent-par", tangent_parallelogram(b)},
          {"point-par", point_parallelogram(b, x0)},
          {"mean-par", mean_parallelogram(b).shape}};
      for (const auto& [cls, q] : shapes) {
        const auto drawn = polygon_points(svg, cls);
        REQUIRE(drawn.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
          const Point2 exact = t.apply(q[i]);
          CHECK(distance(drawn[i], exact) <= 0.5);
        }
      }
    }
  }
}

TEST_CASE("everything fits inside the canvas") {
  Overlays o;
  o.tangent_parallelogram = true;
  o.circumcircle = true;
  const Scene s = scene("parbelos", 0.3, o);
  const Transform t = fit(s);
  for (const Point2& v : tangent_parallelogram(s.fbelos).vertices()) {
    const Point2 q = t.apply(v);
    CHECK(q.x >= 24 - 1e-9);
    CHECK(q.x <= 776 + 1e-9);
    CHECK(q.y >= 24 - 1e-9);
    CHECK(q.y <= 456 + 1e-9);
  }
}

TEST_CASE("unavailable overlays and bad scenes") {
  Overlays tangent;
  tangent.tangent_parallelogram = true;
  CHECK_THROWS_AS(render_svg(scene("arbelos", 0.3, tangent)), OverlayUnavailable);
  Overlays circle;
  circle.circumcircle = true;
  try {
    render_svg(scene("parabola:k=2", 0.3, circle));
    FAIL("expected OverlayUnavailable");
  } catch (const OverlayUnavailable& e) {
    CHECK(std::string(e.what()).find("circumcircle") != std::string::npos);
  }
  Scene few = scene("parbelos", 0.5);
  few.samples_per_arc = 15;
  CHECK_THROWS_AS(render_svg(few), BadParameter);
  Scene flat = scene("parbelos", 0.5);
  flat.canvas.height = 0;
  CHECK_THROWS_AS(render_svg(flat), BadParameter);
}

TEST_CASE("overlay lists") {
  const Overlays o = parse_overlays("tangent, circumcircle,point=0.3,labels");
  CHECK(o.tangent_parallelogram);
  CHECK(o.circumcircle);
  CHECK(o.labels);
  CHECK_FALSE(o.diagonal);
  REQUIRE(o.point_parallelogram);
  CHECK(*o.point_parallelogram == 0.3);
  CHECK_THROWS_AS(parse_overlays("sparkles"), BadParameter);
  CHECK_THROWS_AS(parse_overlays("point=abc"), BadParameter);
  CHECK_FALSE(parse_overlays("").tangent_parallelogram);
}
