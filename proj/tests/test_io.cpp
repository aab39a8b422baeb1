#include <doctest.h>

#include <random>

#include "annulus/fixtures.hpp"
#include "annulus/json_io.hpp"
#include "annulus/svg.hpp"
#include "annulus/verify.hpp"

using namespace annulus;

TEST_CASE("JSON round trips are lossless") {
  const RunConfig cfg;
  std::mt19937_64 rng(41);

  const auto phi = mobius_boundary(Cx(0.23, -0.11), 0.37, 256);
  const auto phi2 = circle_homeo_from_json(Json::parse(to_json(phi).dump()));
  REQUIRE(phi2.n() == phi.n());
  for (int j = 0; j < phi.n(); ++j) CHECK(phi2.lift()[j] == phi.lift()[j]);

  const auto f = fixtures::random_bounded_univalent(rng, 0.6, 32);
  const auto f2 = disk_map_from_json(Json::parse(to_json(f).dump()));
  REQUIRE(f2.order() == f.order());
  for (int k = 0; k < f.order(); ++k) CHECK(f2.a[k] == f.a[k]);

  ExteriorMap g = ExteriorMap::identity(16);
  g.lead = Cx(1.25, -0.5);
  g.c0 = Cx(0.1, 0.7);
  g.b[3] = Cx(-0.02, 0.013);
  const auto g2 = exterior_map_from_json(Json::parse(to_json(g).dump()));
  CHECK(g2.lead == g.lead);
  CHECK(g2.c0 == g.c0);
  for (int k = 0; k < g.order(); ++k) CHECK(g2.b[k] == g.b[k]);

  const auto x = fixtures::mobius_welding_pair(Cx(0.3, 0.0), cfg);
  const auto x2 = annulus_from_json(Json::parse(to_json(x).dump()), cfg);
  CHECK(x2.tag == x.tag);
  CHECK(x2.flags == x.flags);
  for (int k = 0; k < x.f.order(); ++k) CHECK(x2.f.a[k] == x.f.a[k]);

  const auto cp = big_chart(x, cfg);
  const auto cp2 = chart_point_from_json(Json::parse(to_json(cp).dump()));
  CHECK(cp2.q0 == cp.q0);
  CHECK(cp2.qinf == cp.qinf);
  for (int k = 0; k < cp.u0.size(); ++k) CHECK(cp2.u0.c[k] == cp.u0.c[k]);

  JordanCurveSamples curve(fixtures::ellipse_points(1.1, 0.9, 64));
  const auto curve2 = curve_from_json(Json::parse(to_json(curve).dump()));
  for (size_t j = 0; j < curve.points.size(); ++j)
    CHECK(curve2.points[j] == curve.points[j]);
}

TEST_CASE("lift serialization is normalized into [0, 2pi)") {
  const auto j = to_json(CircleHomeo::rotation(-3.0, 64));
  const double first = j["lift"][0].get<double>();
  CHECK(first >= 0.0);
  CHECK(first < kTwoPi);
}

TEST_CASE("malformed JSON is rejected with InvalidInput") {
  CHECK_THROWS_AS(circle_homeo_from_json(Json{{"kind", "disk_map"}}),
                  InvalidInput);
  CHECK_THROWS_AS(disk_map_from_json(Json{{"kind", "disk_map"}}),
                  InvalidInput);
  CHECK_THROWS_AS(
      disk_map_from_json(Json{{"kind", "disk_map"},
                              {"m", 3},
                              {"coeffs", Json::array({Json::array({1.0, 0.0})})}}),
      InvalidInput);
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), InvalidInput);
}

TEST_CASE("SVG rendering is deterministic and covers the object kinds") {
  const RunConfig cfg;
  const auto x = fixtures::mobius_welding_pair(Cx(0.3, 0.0), cfg);
  std::mt19937_64 rng(4);
  const auto e = fixtures::random_a0_annulus(rng, cfg);
  JordanCurveSamples curve(fixtures::ellipse_points(1.4, 0.8, 128));

  const std::vector<Json> objs{to_json(curve), to_json(x), to_json(e)};
  const std::string svg1 = render_svg(objs);
  const std::string svg2 = render_svg(objs);
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") != std::string::npos);
  CHECK(svg1.find("</svg>") != std::string::npos);
  // the welding pair renders its seam
  CHECK(svg1.find("#d62728") != std::string::npos);
  // the strictly nested pair gets a shaded ring
  CHECK(svg1.find("fill-rule=\"evenodd\"") != std::string::npos);

  CHECK_THROWS_AS(render_svg({Json{{"kind", "verify_report"}}}), InvalidInput);
}

TEST_CASE("verify reports are deterministic and sorted") {
  RunConfig cfg;
  cfg.seed = 7;
  const auto r1 = run_verify(cfg, "welding");
  const auto r2 = run_verify(cfg, "welding");
  CHECK(report_to_json(r1).dump(1) == report_to_json(r2).dump(1));
  CHECK(report_human(r1) == report_human(r2));
  CHECK(r1.pass);
  for (size_t i = 1; i < r1.cases.size(); ++i)
    CHECK(r1.cases[i - 1].name < r1.cases[i].name);
  CHECK_THROWS_AS(run_verify(cfg, "nonsense"), InvalidParameter);
}
