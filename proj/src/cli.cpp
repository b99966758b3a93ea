#include "fbelos/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <vector>

#include "fbelos/analysis.hpp"
#include "fbelos/errors.hpp"
#include "fbelos/expr.hpp"
#include "fbelos/render.hpp"

namespace fbelos::cli {

namespace {

Profile load_profile(const RunConfig& c) {
  if (c.preset) return preset(parse_preset_spec(*c.preset));
  return build_profile(expr::parse(*c.profile));
}

double require_p(const RunConfig& c) {
  if (!c.p) throw BadParameter("--p is required for this command");
  return *c.p;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw Error("failed writing '" + path + "'");
}

const char* kind_name(AdmissibilityViolation::Kind k) {
  switch (k) {
    case AdmissibilityViolation::Kind::EndpointNonzero: return "endpoint value is not zero";
    case AdmissibilityViolation::Kind::NonPositive: return "not positive";
    case AdmissibilityViolation::Kind::NotEvaluable: return "not evaluable";
  }
  return "";
}

int validate(const RunConfig& c, std::ostream& out) {
  std::optional<Profile> f;
  try {
    f = load_profile(c);
  } catch (const NotAdmissible& e) {
    out << "admissible: no\n";
    if (e.violations().empty()) out << "  " << e.what() << '\n';
    constexpr std::size_t shown = 5;
    const auto& vs = e.violations();
    for (std::size_t i = 0; i < vs.size() && i < shown; ++i)
      out << "  x=" << format_real(vs[i].x) << ": " << kind_name(vs[i].kind)
          << " (value " << format_real(vs[i].value) << ")\n";
    if (vs.size() > shown) out << "  ... " << vs.size() - shown << " more violations\n";
    return kExitCheckFailed;
  }
  out << "profile: " << f->name() << '\n';
  out << "expression: " << f->expr().source_text() << '\n';
  out << "admissible: yes\n";

  std::vector<double> ps;
  if (c.p) {
    ps.push_back(*c.p);
  } else {
    for (int i = 1; i <= 9; ++i) ps.push_back(i / 10.0);
  }
  bool all_nested = true;
  for (double p : ps) {
    lower_profiles(*f, p);
    const double excess = nesting_excess(*f, p);
    const bool nested = excess <= kNestingTol;
    all_nested = all_nested && nested;
    out << "nesting p=" << format_real(p) << ": " << (nested ? "yes" : "no")
        << " (max excess " << format_real(excess) << ")\n";
  }
  return all_nested || c.allow_non_nesting ? kExitOk : kExitCheckFailed;
}

FBelos build_fbelos(const RunConfig& c) {
  return construct(load_profile(c), require_p(c),
                   c.allow_non_nesting ? NestingPolicy::Report : NestingPolicy::Require);
}

int analyze_command(const RunConfig& c, std::ostream& out) {
  const FBelos b = build_fbelos(c);
  AnalysisOptions opts;
  opts.rel_tol = c.rel_tol;
  opts.tol = c.tol;
  opts.grid = c.grid;
  const AnalysisReport report = analyze(b, opts);
  if (c.json_path) write_text(*c.json_path, dump_json(to_json(report)), out);
  if (!c.json_path || *c.json_path != "-") {
    out << "profile: " << report.profile << "  p=" << format_real(report.p)
        << (report.nested ? "" : "  (not nested)") << '\n';
    for (const CheckReport& r : report.checks) {
      out << "  " << r.name << ": " << r.status();
      if (!r.skipped) out << " (abs_err " << format_real(r.abs_err) << ", tol " << format_real(r.tol) << ")";
      out << '\n';
    }
  }
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int render_command(const RunConfig& c, std::ostream& out) {
  render::Scene scene{build_fbelos(c), render::parse_overlays(c.overlays), 512, {}};
  write_text(c.svg_path.value_or("-"), render::render_svg(scene), out);
  return kExitOk;
}

int characterize_command(const RunConfig& c, std::ostream& out) {
  const Profile f = load_profile(c);
  out << "profile: " << f.name() << '\n';
  Characterization ch;
  try {
    ch = characterization_residual(f, c.grid);
  } catch (const InfiniteSlope& e) {
    out << "verdict: not applicable (" << e.what() << ")\n";
    return kExitOk;
  } catch (const DegenerateDenominator& e) {
    out << "verdict: not applicable (" << e.what() << ")\n";
    return kExitOk;
  }
  out << "sup_residual: " << format_real(ch.sup_residual) << '\n';
  out << "symmetry_defect: " << format_real(ch.symmetry_defect) << '\n';
  if (ch.parabola_class)
    out << "verdict: parabola k(x - x^2) with k = " << format_real(*ch.implied_k) << '\n';
  else
    out << "verdict: not of the form k(x - x^2)\n";
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.preset.has_value() == config.profile.has_value())
      throw BadParameter("exactly one of --preset and --profile is required");
    switch (config.command) {
      case Command::Validate: return validate(config, out);
      case Command::Analyze: return analyze_command(config, out);
      case Command::Render: return render_command(config, out);
      case Command::Characterize: return characterize_command(config, out);
    }
  } catch (const NestingViolation& e) {
    err << "error: " << e.what() << " (use --allow-non-nesting to analyze anyway)\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"f-belos construction, verification and rendering"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App* sub, bool needs_p) {
    auto* pre = sub->add_option("--preset", config.preset,
                                "arbelos, parbelos, sine, parabola:k=<k>, cubic:a=<a>,b=<b>");
    auto* pro = sub->add_option("--profile", config.profile, "profile expression in x");
    pre->excludes(pro);
    pro->excludes(pre);
    auto* p = sub->add_option("--p", config.p, "cusp parameter in (0, 1)");
    if (needs_p) p->required();
    sub->add_option("--tol", config.tol, "identity check tolerance")->capture_default_str();
    sub->add_option("--rel-tol", config.rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    sub->add_option("--grid", config.grid, "sample count")->capture_default_str();
    sub->add_flag("--allow-non-nesting", config.allow_non_nesting,
                  "analyze even when g or h rises above f");
  };

  auto* validate_cmd = app.add_subcommand("validate", "admissibility and nesting verdicts");
  common(validate_cmd, false);
  auto* analyze_cmd = app.add_subcommand("analyze", "run every applicable check");
  common(analyze_cmd, true);
  analyze_cmd->add_option("--json", config.json_path, "write the JSON report here ('-' for stdout)");
  auto* render_cmd = app.add_subcommand("render", "write an SVG figure");
  common(render_cmd, true);
  render_cmd->add_option("--svg", config.svg_path, "output path (default stdout)");
  render_cmd->add_option("--overlay", config.overlays,
                         "point=<x0>,mean,tangent,circumcircle,diagonal,labels");
  auto* characterize_cmd = app.add_subcommand("characterize", "parabola characterization");
  common(characterize_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  if (validate_cmd->parsed()) config.command = Command::Validate;
  else if (analyze_cmd->parsed()) config.command = Command::Analyze;
  else if (render_cmd->parsed()) config.command = Command::Render;
  else config.command = Command::Characterize;
  return run(config, out, err);
}

}  // namespace fbelos::cli
