#include <doctest.h>

#include <cmath>

#include "annulus/fixtures.hpp"
#include "annulus/welding.hpp"

using namespace annulus;

namespace {

double pair_dev(const WeldResult& wr, const DiskMap& F, const ExteriorMap& G) {
  double d = std::max(std::abs(wr.G.lead - G.lead), std::abs(wr.G.c0 - G.c0));
  for (int k = 0; k < F.order(); ++k)
    d = std::max(d, std::abs(wr.F.a[k] - F.a[k]));
  for (int k = 0; k < G.order(); ++k)
    d = std::max(d, std::abs(wr.G.b[k] - G.b[k]));
  return d;
}

}  // namespace

TEST_CASE("identity welding returns the identity pair") {
  const int n = 1024, m = 64;
  const auto wr = weld({CircleHomeo::identity(n), Cx(1.0, 0.0), m, n, 1e-9, 50, 1});
  CHECK(pair_dev(wr, DiskMap::identity(m), ExteriorMap::identity(m)) < 1e-12);
  CHECK(wr.diag.residual < 1e-12);
}

TEST_CASE("rotation welding returns (e^{ia} z, w)") {
  const int n = 1024, m = 64;
  const double alpha = 0.8;
  const auto wr =
      weld({CircleHomeo::rotation(alpha, n), Cx(1.0, 0.0), m, n, 1e-9, 50, 1});
  CHECK(std::abs(wr.F.a[0] - std::polar(1.0, alpha)) < 1e-12);
  for (int k = 1; k < m; ++k) CHECK(std::abs(wr.F.a[k]) < 1e-12);
  CHECK(std::abs(wr.G.lead - 1.0) < 1e-13);
  CHECK(std::abs(wr.G.c0) < 1e-12);
}

TEST_CASE("Mobius welding closed form at c = 0.3") {
  const int n = 1024, m = 64;
  const Cx c(0.3, 0.0);
  const auto wr = weld({mobius_boundary(c, 0.0, n), Cx(1.0, 0.0), m, n, 1e-9, 50, 1});
  CHECK(pair_dev(wr, fixtures::mobius_welding_F(c, m),
                 fixtures::mobius_welding_G(c, m)) < 1e-8);
}

TEST_CASE("weld_residual diagnostics") {
  const int n = 1024, m = 64;
  CHECK(weld_residual(DiskMap::identity(m), ExteriorMap::identity(m),
                      CircleHomeo::identity(n)) < 1e-14);

  // deliberate mismatch: residual is |e^{ia} - 1| for the identity pair
  const double alpha = 0.6;
  const double r = weld_residual(DiskMap::identity(m), ExteriorMap::identity(m),
                                 CircleHomeo::rotation(alpha, n));
  CHECK(r == doctest::Approx(std::abs(std::polar(1.0, alpha) - 1.0)).epsilon(1e-10));

  const Cx c(0.3, 0.0);
  CHECK(weld_residual(fixtures::mobius_welding_F(c, m),
                      fixtures::mobius_welding_G(c, m),
                      mobius_boundary(c, 0.0, n)) < 1e-8);
}

TEST_CASE("normalization equivariance in a") {
  const int n = 1024, m = 64;
  const auto phi = mobius_boundary(Cx(0.2, 0.1), 0.0, n);
  const Cx lam(1.7, -0.4);
  const auto w1 = weld({phi, Cx(1.0, 0.0), m, n, 1e-9, 50, 1});
  const auto w2 = weld({phi, lam, m, n, 1e-9, 50, 1});
  double d = std::abs(w2.G.c0 - lam * w1.G.c0);
  for (int k = 0; k < m; ++k) {
    d = std::max(d, std::abs(w2.F.a[k] - lam * w1.F.a[k]));
    d = std::max(d, std::abs(w2.G.b[k] - lam * w1.G.b[k]));
  }
  CHECK(d < 1e-9);
  CHECK(std::abs(w2.G.lead - lam) == 0.0);  // pinned, not solved for
}

TEST_CASE("welding of a forward-constructed pair recovers it") {
  const int n = 1024, m = 64;
  const auto pts = fixtures::perturbed_ellipse_points(1.15, 0.9, 0.03, 0.4, 0.02, 1.1, n);
  const JordanCurveSamples curve(pts);
  const auto fi = interior_map(curve);
  const auto ge = exterior_map(curve);
  const auto phi0 = compose_circle_spectral(
      invert_circle_spectral(ge.correspondence), fi.correspondence);
  const auto wr = weld({phi0, ge.map.lead, m, n, 1e-6, 50, 3});
  CHECK(pair_dev(wr, fi.map, ge.map) < 1e-6);
}

TEST_CASE("under-resolved welding fails with diagnostics") {
  const int n = 64, m = 8;
  const auto phi = mobius_boundary(Cx(0.6, 0.0), 0.0, n);
  try {
    weld({phi, Cx(1.0, 0.0), m, n, 1e-9, 50, 3});
    FAIL("expected WeldNonConvergence");
  } catch (const WeldNonConvergence& e) {
    CHECK(e.final_residual > 1e-9);
    CHECK(e.continuation_trace.size() >= 2);  // continuation was attempted
  }
}

TEST_CASE("parameter validation") {
  const auto phi = CircleHomeo::identity(64);
  CHECK_THROWS_AS(weld({phi, Cx(0.0, 0.0), 8, 64, 1e-9, 50, 1}),
                  InvalidParameter);
  CHECK_THROWS_AS(weld({phi, Cx(1.0, 0.0), 32, 64, 1e-9, 50, 1}),
                  InvalidParameter);  // grid < 8m
  CHECK_THROWS_AS(weld({phi, Cx(1.0, 0.0), 8, 64, -1.0, 50, 1}),
                  InvalidParameter);
}
