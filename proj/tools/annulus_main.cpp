// Command-line surface: conformal welding, annulus multiplication, chart
// transforms, the verification suite and SVG rendering. Exit codes:
// 0 success, 1 invariant failure, 2 solver non-convergence, 3 invalid input.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "annulus/charts.hpp"
#include "annulus/fixtures.hpp"
#include "annulus/json_io.hpp"
#include "annulus/svg.hpp"
#include "annulus/verify.hpp"
#include "annulus/welding.hpp"

using namespace annulus;

namespace {

void write_output(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(1) << "\n";
  } else {
    save_json_file(path, j);
  }
}

RunConfig load_env_config() {
  RunConfig cfg;
  const char* p = std::getenv("ANNULUS_CONFIG");
  if (!p) return cfg;
  const Json j = load_json_file(p);
  if (j.contains("grid_n")) cfg.grid_n = j["grid_n"].get<int>();
  if (j.contains("trunc_m")) cfg.trunc_m = j["trunc_m"].get<int>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("delta_touch"))
    cfg.delta_touch = j["delta_touch"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("output_dir"))
    cfg.output_dir = j["output_dir"].get<std::string>();
  return cfg;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::invalid_input: return 3;
    case ErrorKind::non_convergence: return 2;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"annulus: conformal welding and the semigroup of rigged annuli"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  RunConfig cfg = load_env_config();
  app.add_option("--grid-n", cfg.grid_n, "sample grid size (power of two)");
  app.add_option("--trunc-m", cfg.trunc_m, "series truncation order");
  app.add_option("--tol", cfg.tol, "solver tolerance");
  app.add_option("--delta-touch", cfg.delta_touch,
                 "classification touch threshold");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");

  // weld
  auto* weld_cmd = app.add_subcommand("weld", "solve a conformal welding problem");
  std::string phi_path, out_path;
  double a_re = 1.0, a_im = 0.0;
  weld_cmd->add_option("--phi", phi_path, "circle_homeo JSON")->required();
  weld_cmd->add_option("--a-re", a_re, "Re of the normalization a");
  weld_cmd->add_option("--a-im", a_im, "Im of the normalization a");
  weld_cmd->add_option("--m", cfg.trunc_m, "series truncation order");
  weld_cmd->add_option("--n", cfg.grid_n, "grid size");
  weld_cmd->add_option("-o,--output", out_path, "output path");

  // multiply
  auto* mul_cmd = app.add_subcommand("multiply", "multiply two rigged annuli");
  std::vector<std::string> mul_paths;
  mul_cmd->add_option("inputs", mul_paths, "two rigged_annulus JSON files")
      ->expected(2);
  mul_cmd->add_option("-o,--output", out_path, "output path");

  // compose-e
  auto* ce_cmd =
      app.add_subcommand("compose-e", "compose two bounded-univalent annuli");
  std::vector<std::string> ce_paths;
  ce_cmd->add_option("inputs", ce_paths, "two rigged_annulus JSON files")
      ->expected(2);
  ce_cmd->add_option("-o,--output", out_path, "output path");

  // from-qs
  auto* fq_cmd = app.add_subcommand(
      "from-qs", "welding pair of a quasisymmetric homeomorphism");
  std::string fq_path;
  fq_cmd->add_option("phi", fq_path, "circle_homeo JSON")->required();
  fq_cmd->add_option("-o,--output", out_path, "output path");

  // chart
  auto* chart_cmd =
      app.add_subcommand("chart", "chart coordinates of a rigged annulus");
  std::string chart_path;
  chart_cmd->add_option("input", chart_path, "rigged_annulus JSON")->required();
  chart_cmd->add_option("-o,--output", out_path, "output path");

  // chart-inv
  auto* ci_cmd = app.add_subcommand("chart-inv", "disk map from chart data");
  std::string ci_path;
  double q_re = 1.0, q_im = 0.0;
  ci_cmd->add_option("input", ci_path, "series or chart_point JSON")
      ->required();
  ci_cmd->add_option("--q-re", q_re, "Re of f'(0)");
  ci_cmd->add_option("--q-im", q_im, "Im of f'(0)");
  ci_cmd->add_option("-o,--output", out_path, "output path");

  // classify
  auto* cl_cmd = app.add_subcommand("classify", "class flags of an annulus");
  std::string cl_path;
  cl_cmd->add_option("input", cl_path, "rigged_annulus JSON")->required();
  cl_cmd->add_option("-o,--output", out_path, "output path");

  // verify
  auto* v_cmd = app.add_subcommand("verify", "run the verification suite");
  std::string suite = "all";
  v_cmd->add_option("--suite", suite, "welding | semigroup | charts | all");
  v_cmd->add_option("-o,--output", out_path, "report path");

  // render
  auto* r_cmd = app.add_subcommand("render", "render objects to SVG");
  std::vector<std::string> render_paths;
  std::string svg_out = "out.svg";
  r_cmd->add_option("inputs", render_paths, "curve/annulus JSON files")
      ->required();
  r_cmd->add_option("-o,--output", svg_out, "SVG output path");
  SvgStyle style;
  r_cmd->add_option("--width", style.width, "canvas width in pixels");
  r_cmd->add_option("--samples", style.samples, "boundary samples per curve");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.validate();

    if (*weld_cmd) {
      const CircleHomeo phi =
          circle_homeo_from_json(load_json_file(phi_path));
      WeldResult wr =
          weld({phi, Cx(a_re, a_im), cfg.trunc_m, cfg.grid_n, cfg.tol, 50, 3});
      RiggedAnnulus x = make_annulus(std::move(wr.F), std::move(wr.G), cfg);
      Json j = to_json(x);
      j["residual"] = wr.diag.residual;
      write_output(out_path, j);
      std::cerr << "weld residual " << wr.diag.residual << "\n";
    } else if (*mul_cmd) {
      const RiggedAnnulus x =
          annulus_from_json(load_json_file(mul_paths[0]), cfg);
      const RiggedAnnulus y =
          annulus_from_json(load_json_file(mul_paths[1]), cfg);
      write_output(out_path, to_json(multiply(x, y, cfg)));
    } else if (*ce_cmd) {
      const RiggedAnnulus x =
          annulus_from_json(load_json_file(ce_paths[0]), cfg);
      const RiggedAnnulus y =
          annulus_from_json(load_json_file(ce_paths[1]), cfg);
      write_output(out_path, to_json(compose_e(x, y, cfg)));
    } else if (*fq_cmd) {
      const CircleHomeo phi = circle_homeo_from_json(load_json_file(fq_path));
      write_output(out_path, to_json(from_qs(phi, cfg)));
    } else if (*chart_cmd) {
      const RiggedAnnulus x =
          annulus_from_json(load_json_file(chart_path), cfg);
      write_output(out_path, to_json(big_chart(x, cfg)));
    } else if (*ci_cmd) {
      const Json j = load_json_file(ci_path);
      TaylorSeries u;
      Cx q(q_re, q_im);
      if (json_kind(j) == "chart_point") {
        const ChartPoint p = chart_point_from_json(j);
        u = p.u0;
        q = p.q0;
      } else {
        u = series_from_json(j);
      }
      write_output(out_path, to_json(chi_inverse(u, q, cfg.trunc_m)));
    } else if (*cl_cmd) {
      const RiggedAnnulus x = annulus_from_json(load_json_file(cl_path), cfg);
      Json flags = Json::array();
      for (const auto& f : x.flags) flags.push_back(flag_name(f));
      write_output(out_path, Json{{"kind", "classification"},
                                  {"flags", flags},
                                  {"tag", tag_name(x.tag)}});
    } else if (*v_cmd) {
      const VerifyReport rep = run_verify(cfg, suite);
      const Json j = report_to_json(rep);
      if (!out_path.empty()) save_json_file(out_path, j);
      std::cout << report_human(rep);
      return rep.pass ? 0 : 1;
    } else if (*r_cmd) {
      std::vector<Json> objs;
      for (const auto& p : render_paths) objs.push_back(load_json_file(p));
      style.height = style.width;
      const std::string svg = render_svg(objs, style);
      std::ofstream out(svg_out);
      if (!out) throw InvalidInput("cannot open " + svg_out + " for writing");
      out << svg;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
