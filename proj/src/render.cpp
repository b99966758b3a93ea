#include "fbelos/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>
#include <vector>

#include "fbelos/errors.hpp"

namespace fbelos::render {

namespace {

struct Style {
  std::string_view selector;
  std::string_view rules;
};

constexpr std::array<Style, 9> kStyles{{
    {".axis", "stroke:#9e9e9e;stroke-width:1;fill:none"},
    {".upper", "stroke:#1f3b73;stroke-width:2;fill:none"},
    {".lower", "stroke:#2f6f9f;stroke-width:2;fill:none"},
    {".point-par", "stroke:#b5402a;stroke-width:1.5;fill:#b5402a;fill-opacity:0.12"},
    {".mean-par", "stroke:#7a4fa3;stroke-width:1.5;fill:#7a4fa3;fill-opacity:0.12"},
    {".tangent-par", "stroke:#2e7d32;stroke-width:1.5;fill:#2e7d32;fill-opacity:0.10"},
    {".circle", "stroke:#c77700;stroke-width:1.5;fill:none"},
    {".diagonal", "stroke:#2e7d32;stroke-width:1.5;stroke-dasharray:6 4;fill:none"},
    {".label", "font-family:sans-serif;font-size:14px;fill:#212121"},
}};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Drawing {
  std::vector<Point2> upper;
  std::vector<Point2> left;
  std::vector<Point2> right;
  std::optional<Parallelogram> point_par;
  std::optional<Parallelogram> mean_par;
  std::optional<Parallelogram> tangent_par;
  std::optional<Circle> circle;
  std::optional<std::array<Point2, 2>> diagonal;
};

// Uniform local parameters in [0, 1], with two geometric refinement points
// added next to an endpoint that has a vertical tangent.
std::vector<double> local_parameters(std::size_t samples, bool refine_start, bool refine_end) {
  std::vector<double> us = kernels::uniform_grid(0.0, 1.0, samples);
  const double step = 1.0 / static_cast<double>(samples - 1);
  if (refine_start) us.insert(us.end(), {step / 16, step / 4});
  if (refine_end) us.insert(us.end(), {1 - step / 4, 1 - step / 16});
  std::sort(us.begin(), us.end());
  return us;
}

std::vector<Point2> sample_arc(const PlacedProfile& arc, const std::vector<double>& us) {
  std::vector<Point2> pts;
  pts.reserve(us.size());
  for (double u : us) {
    const double x = arc.offset() + arc.scale() * u;
    pts.push_back({x, arc.scale() * arc.base().value(u)});
  }
  return pts;
}

template <class Fn>
auto overlay(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const OverlayUnavailable&) {
    throw;
  } catch (const Error& e) {
    throw OverlayUnavailable(std::string(what) + " unavailable: " + e.what());
  }
}

Drawing build(const Scene& scene) {
  const Canvas& c = scene.canvas;
  if (scene.samples_per_arc < 16) throw BadParameter("samples_per_arc must be at least 16");
  if (!(c.width > 0) || !(c.height > 0) || !(c.margin >= 0) || 2 * c.margin >= c.width ||
      2 * c.margin >= c.height)
    throw BadParameter("canvas dimensions must be positive and exceed twice the margin");

  const FBelos& b = scene.fbelos;
  const auto us = local_parameters(scene.samples_per_arc, !b.slopes().at0, !b.slopes().at1);
  Drawing d;
  d.upper = sample_arc(PlacedProfile(b.f(), 1.0, 0.0), us);
  d.left = sample_arc(b.g(), us);
  d.right = sample_arc(b.h(), us);

  const Overlays& o = scene.overlays;
  if (o.point_parallelogram) {
    d.point_par = overlay("point_parallelogram",
                          [&] { return point_parallelogram(b, *o.point_parallelogram); });
  }
  if (o.mean_parallelogram)
    d.mean_par = overlay("mean_parallelogram", [&] { return mean_parallelogram(b).shape; });
  if (o.tangent_parallelogram || o.diagonal || o.circumcircle) {
    const Parallelogram t = overlay("tangent_parallelogram", [&] { return tangent_parallelogram(b); });
    if (o.tangent_parallelogram) d.tangent_par = t;
    if (o.diagonal) d.diagonal = t.diagonal13();
  }
  if (o.circumcircle) d.circle = overlay("circumcircle", [&] { return circumcircle(b).circle; });
  return d;
}

void extend(double& lo, double& hi, double v) {
  lo = std::min(lo, v);
  hi = std::max(hi, v);
}

Transform fit_drawing(const Scene& scene, const Drawing& d) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 0;
  auto add = [&](Point2 p) {
    extend(x0, x1, p.x);
    extend(y0, y1, p.y);
  };
  for (const auto* arc : {&d.upper, &d.left, &d.right})
    for (Point2 p : *arc) add(p);
  for (const auto* par : {&d.point_par, &d.mean_par, &d.tangent_par})
    if (*par)
      for (Point2 p : (*par)->vertices()) add(p);
  if (d.circle) {
    add(d.circle->center - Point2{d.circle->radius, d.circle->radius});
    add(d.circle->center + Point2{d.circle->radius, d.circle->radius});
  }

  const Canvas& c = scene.canvas;
  const double inner_w = c.width - 2 * c.margin;
  const double inner_h = c.height - 2 * c.margin;
  const double span_x = x1 - x0;
  const double span_y = std::max(y1 - y0, 1e-12);
  Transform t;
  t.scale = std::min(inner_w / span_x, inner_h / span_y);
  t.tx = c.margin + (inner_w - span_x * t.scale) / 2 - x0 * t.scale;
  t.ty = c.margin + (inner_h - span_y * t.scale) / 2 + y1 * t.scale;
  return t;
}

std::string points_attr(const Transform& t, const std::vector<Point2>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point2 q = t.apply(pts[i]);
    if (i) out += ' ';
    out += num(q.x) + "," + num(q.y);
  }
  return out;
}

void polygon(std::ostream& os, const Transform& t, const char* cls, const Parallelogram& q) {
  const auto& v = q.vertices();
  os << "  <polygon class=\"" << cls << "\" points=\""
     << points_attr(t, std::vector<Point2>(v.begin(), v.end())) << "\"/>\n";
}

void label(std::ostream& os, const Transform& t, Point2 at, const std::string& text) {
  const Point2 q = t.apply(at);
  os << "  <circle class=\"upper\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"2\"/>\n";
  os << "  <text class=\"label\" x=\"" << num(q.x + 4) << "\" y=\"" << num(q.y + 16) << "\">"
     << text << "</text>\n";
}

}  // namespace

Transform fit(const Scene& scene) { return fit_drawing(scene, build(scene)); }

std::string render_svg(const Scene& scene) {
  const Drawing d = build(scene);
  const Transform t = fit_drawing(scene, d);
  const Canvas& c = scene.canvas;
  const FBelos& b = scene.fbelos;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(c.width)
     << "\" height=\"" << num(c.height) << "\" viewBox=\"0 0 " << num(c.width) << " "
     << num(c.height) << "\">\n";
  os << "  <!-- f-belos of " << b.f().name() << " at p = " << format_real(b.p()) << " -->\n";
  os << "  <!-- transform: X = " << format_real(t.tx) << " + " << format_real(t.scale)
     << " * x, Y = " << format_real(t.ty) << " - " << format_real(t.scale) << " * y -->\n";
  os << "  <style>\n";
  for (const Style& s : kStyles) os << "    " << s.selector << " { " << s.rules << " }\n";
  os << "  </style>\n";

  const Point2 a0 = t.apply({0, 0});
  const Point2 a1 = t.apply({1, 0});
  os << "  <line class=\"axis\" x1=\"" << num(a0.x) << "\" y1=\"" << num(a0.y) << "\" x2=\""
     << num(a1.x) << "\" y2=\"" << num(a1.y) << "\"/>\n";

  if (d.tangent_par) polygon(os, t, "tangent-par", *d.tangent_par);
  if (d.mean_par) polygon(os, t, "mean-par", *d.mean_par);
  if (d.point_par) polygon(os, t, "point-par", *d.point_par);

  os << "  <polyline class=\"upper\" points=\"" << points_attr(t, d.upper) << "\"/>\n";
  os << "  <polyline class=\"lower\" points=\"" << points_attr(t, d.left) << "\"/>\n";
  os << "  <polyline class=\"lower\" points=\"" << points_attr(t, d.right) << "\"/>\n";

  if (d.circle) {
    const Point2 q = t.apply(d.circle->center);
    os << "  <circle class=\"circle\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\""
       << num(d.circle->radius * t.scale) << "\"/>\n";
  }
  if (d.diagonal) {
    const Point2 p = t.apply((*d.diagonal)[0]);
    const Point2 q = t.apply((*d.diagonal)[1]);
    os << "  <line class=\"diagonal\" x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\""
       << num(q.x) << "\" y2=\"" << num(q.y) << "\"/>\n";
  }

  label(os, t, b.origin(), "O");
  label(os, t, b.cusp(), "P");
  label(os, t, b.unit(), "I");
  if (scene.overlays.labels) {
    if (d.point_par) {
      label(os, t, (*d.point_par)[0], "P1");
      label(os, t, (*d.point_par)[1], "P2");
      label(os, t, (*d.point_par)[3], "P3");
    }
    if (d.tangent_par) {
      label(os, t, (*d.tangent_par)[0], "T1");
      label(os, t, (*d.tangent_par)[1], "T2");
      label(os, t, (*d.tangent_par)[2], "T3");
    }
    if (d.circle) label(os, t, d.circle->center, "C");
  }
  os << "</svg>\n";
  return os.str();
}

Overlays parse_overlays(const std::string& list) {
  Overlays o;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    if (item.rfind("point=", 0) == 0 || item.rfind("point:", 0) == 0) {
      const std::string value = item.substr(6);
      std::size_t used = 0;
      double x0 = 0;
      try {
        x0 = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value.size()) throw BadParameter("bad overlay x0 '" + value + "'");
      o.point_parallelogram = x0;
    } else if (item == "mean") {
      o.mean_parallelogram = true;
    } else if (item == "tangent") {
      o.tangent_parallelogram = true;
    } else if (item == "circumcircle") {
      o.circumcircle = true;
    } else if (item == "diagonal") {
      o.diagonal = true;
    } else if (item == "labels") {
      o.labels = true;
    } else {
      throw BadParameter("unknown overlay '" + item +
                         "' (expected point=<x0>, mean, tangent, circumcircle, diagonal, labels)");
    }
  }
  return o;
}

}  // namespace fbelos::render
