#include <doctest.h>

#include <cmath>
#include <random>

#include "annulus/fixtures.hpp"

using namespace annulus;

namespace {

double ann_dev(const RiggedAnnulus& a, const RiggedAnnulus& b) {
  double d = std::max(std::abs(a.g.lead - b.g.lead), std::abs(a.g.c0 - b.g.c0));
  for (int k = 0; k < std::max(a.f.order(), b.f.order()); ++k) {
    const Cx ca = k < a.f.order() ? a.f.a[k] : Cx{};
    const Cx cb = k < b.f.order() ? b.f.a[k] : Cx{};
    d = std::max(d, std::abs(ca - cb));
  }
  for (int k = 0; k < std::max(a.g.order(), b.g.order()); ++k) {
    const Cx ca = k < a.g.order() ? a.g.b[k] : Cx{};
    const Cx cb = k < b.g.order() ? b.g.b[k] : Cx{};
    d = std::max(d, std::abs(ca - cb));
  }
  return d;
}

double lift_dev(const CircleHomeo& a, const CircleHomeo& b) {
  double d = 0.0;
  for (int j = 0; j < a.n(); ++j) {
    const double t = kTwoPi * j / a.n();
    d = std::max(d, std::abs(std::remainder(a.lift_at(t) - b.lift_at(t), kTwoPi)));
  }
  return d;
}

}  // namespace

TEST_CASE("classification fixtures") {
  const RunConfig cfg;
  const auto half = make_annulus(DiskMap::scaling(Cx(0.5, 0.0), 64),
                                 ExteriorMap::identity(64), cfg);
  CHECK(half.flags.count(AnnulusFlag::A0) == 1);
  CHECK(half.flags.count(AnnulusFlag::E) == 1);
  CHECK(half.flags.count(AnnulusFlag::G) == 0);

  const auto id = identity_annulus(cfg);
  CHECK(id.flags.count(AnnulusFlag::G) == 1);
  CHECK(id.flags.count(AnnulusFlag::E) == 0);  // f does not map strictly inside

  const auto mw = fixtures::mobius_welding_pair(Cx(0.3, 0.0), cfg);
  CHECK(mw.flags.count(AnnulusFlag::G) == 1);

  // touching at one point but different as sets: degenerate annulus
  DiskMap f = DiskMap::scaling(Cx(0.85, 0.0), 64);
  f.a[1] = Cx(0.15, 0.0);  // |f(e^{it})| peaks at exactly 1 at t = 0
  RiggedAnnulus touching =
      make_annulus(std::move(f), ExteriorMap::identity(64), cfg);
  CHECK(touching.flags.count(AnnulusFlag::A_degenerate) == 1);
  CHECK(touching.flags.count(AnnulusFlag::G) == 0);

  // univalence screen
  DiskMap sq;
  sq.a.assign(8, Cx{});
  sq.a[1] = Cx(1.0, 0.0);
  RiggedAnnulus bad;
  bad.f = sq;
  bad.g = ExteriorMap::identity(8);
  CHECK_THROWS_AS(classify(bad, 1e-4, 256), UnivalenceFailure);
}

TEST_CASE("multiplication on the bounded-univalent slice") {
  const RunConfig cfg;
  const auto h1 = make_annulus(DiskMap::scaling(Cx(0.5, 0.0), 64),
                               ExteriorMap::identity(64), cfg);
  const auto h2 = make_annulus(DiskMap::scaling(Cx(1.0 / 3.0, 0.0), 64),
                               ExteriorMap::identity(64), cfg);
  const auto p = multiply(h1, h2, cfg);
  const auto expect = make_annulus(DiskMap::scaling(Cx(1.0 / 6.0, 0.0), 64),
                                   ExteriorMap::identity(64), cfg);
  CHECK(ann_dev(p, expect) < 1e-8);
  CHECK(p.tag == NormalizationTag::standard);

  // full pipeline against the direct composition oracle
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    const auto e1 = fixtures::random_e_annulus(rng, cfg);
    const auto e2 = fixtures::random_e_annulus(rng, cfg);
    CHECK(ann_dev(multiply(e1, e2, cfg), compose_e(e1, e2, cfg)) < 1e-6);
  }
}

TEST_CASE("compose_e closed form and gatekeeping") {
  const RunConfig cfg;
  // (z/(1-0.1z) scaled by 0.5) o (z/2) -> (z/4)/(1 - 0.05 z)
  DiskMap outer;
  outer.a.resize(64);
  for (int k = 0; k < 64; ++k) outer.a[k] = 0.5 * std::pow(0.1, k);
  const auto e1 = make_annulus(outer, ExteriorMap::identity(64), cfg);
  const auto e2 = make_annulus(DiskMap::scaling(Cx(0.5, 0.0), 64),
                               ExteriorMap::identity(64), cfg);
  const auto p = compose_e(e1, e2, cfg);
  for (int k = 1; k <= 64; ++k) {
    const double expect = 0.25 * std::pow(0.05, k - 1);
    CHECK(std::abs(p.f.a[k - 1] - expect) < 1e-10);
  }

  const auto mw = fixtures::mobius_welding_pair(Cx(0.2, 0.0), cfg);
  CHECK_THROWS_AS(compose_e(mw, e2, cfg), ClassificationError);
}

TEST_CASE("monoid identity laws") {
  const RunConfig cfg;
  const auto id = identity_annulus(cfg);
  std::mt19937_64 rng(5);
  std::vector<RiggedAnnulus> xs;
  xs.push_back(fixtures::random_e_annulus(rng, cfg));
  xs.push_back(fixtures::mobius_welding_pair(Cx(0.25, 0.1), cfg));
  xs.push_back(fixtures::random_a0_annulus(rng, cfg));
  for (const auto& x : xs) {
    CHECK(ann_dev(multiply(id, x, cfg), x) < 1e-7);
    CHECK(ann_dev(multiply(x, id, cfg), x) < 1e-7);
  }
}

TEST_CASE("rho and from_qs") {
  const RunConfig cfg;
  const int n = cfg.grid_n;

  CHECK(lift_dev(rho(identity_annulus(cfg), cfg), CircleHomeo::identity(n)) <
        1e-10);

  const auto rot = make_annulus(DiskMap::scaling(std::polar(1.0, 0.9), 64),
                                ExteriorMap::identity(64), cfg);
  CHECK(lift_dev(rho(rot, cfg), CircleHomeo::rotation(0.9, n)) < 1e-10);

  const Cx c(0.3, 0.0);
  CHECK(lift_dev(rho(fixtures::mobius_welding_pair(c, cfg), cfg),
                 mobius_boundary(c, 0.0, n)) < 1e-8);

  // section property: rho(from_qs(phi)) = phi
  const auto phi = mobius_boundary(Cx(0.2, 0.15), 0.0, n);
  const auto x = from_qs(phi, cfg);
  CHECK(x.flags.count(AnnulusFlag::G) == 1);
  CHECK(lift_dev(rho(x, cfg), phi) < 1e-6);

  // from_qs of identity and rotations
  const auto xid = from_qs(CircleHomeo::identity(n), cfg);
  CHECK(ann_dev(xid, identity_annulus(cfg)) < 1e-10);
  const auto xrot = from_qs(CircleHomeo::rotation(0.9, n), cfg);
  CHECK(std::abs(xrot.f.a[0] - std::polar(1.0, 0.9)) < 1e-10);

  // rho requires the G flag
  const auto e = make_annulus(DiskMap::scaling(Cx(0.5, 0.0), 64),
                              ExteriorMap::identity(64), cfg);
  CHECK_THROWS_AS(rho(e, cfg), ClassificationError);
}

TEST_CASE("rho of a product is the composition of the rhos") {
  const RunConfig cfg;
  const auto x = fixtures::mobius_welding_pair(Cx(0.3, 0.0), cfg);
  const auto y = fixtures::mobius_welding_pair(Cx(0.1, 0.2), cfg);
  const auto lhs = rho(multiply(x, y, cfg), cfg);
  const auto rhs = compose_circle(rho(x, cfg), rho(y, cfg));
  CHECK(lift_dev(lhs, rhs) < 1e-6);
}

TEST_CASE("rotation subgroup through the full pipeline") {
  const RunConfig cfg;
  const auto rx = make_annulus(DiskMap::scaling(std::polar(1.0, 0.7), 64),
                               ExteriorMap::identity(64), cfg);
  const auto ry = make_annulus(DiskMap::scaling(std::polar(1.0, 0.4), 64),
                               ExteriorMap::identity(64), cfg);
  const auto p = multiply(rx, ry, cfg);
  CHECK(std::abs(p.f.a[0] - std::polar(1.0, 1.1)) < 1e-7);
  CHECK(lift_dev(rho(p, cfg), CircleHomeo::rotation(1.1, cfg.grid_n)) < 1e-7);
}

TEST_CASE("normalize and the automorphism action") {
  const RunConfig cfg;
  std::mt19937_64 rng(23);
  auto x = fixtures::random_a0_annulus(rng, cfg);

  // g'(inf) = 2 rescales both sides by 1/2 under normalize(., 1)
  RiggedAnnulus doubled = x;
  doubled.g.lead *= 2.0;
  doubled.g.c0 *= 2.0;
  for (auto& b : doubled.g.b) b *= 2.0;
  for (auto& a : doubled.f.a) a *= 2.0;
  const auto renorm = normalize(doubled, Cx(1.0, 0.0), cfg);
  CHECK(ann_dev(renorm, x) < 1e-12);
  CHECK(renorm.tag == NormalizationTag::standard);

  // a = g'(inf) leaves the annulus unchanged
  CHECK(ann_dev(normalize(x, annulus_H(x), cfg), x) < 1e-12);

  // H o normalize = a and idempotence
  const Cx a(3.0, 4.0);
  const auto xn = normalize(x, a, cfg);
  CHECK(std::abs(annulus_H(xn) - a) < 1e-12);
  CHECK(xn.tag == NormalizationTag::a_normalized);
  CHECK(ann_dev(normalize(xn, a, cfg), xn) < 1e-12);

  // scaling preserves the disjointness class flags
  CHECK(xn.flags.count(AnnulusFlag::A0) == x.flags.count(AnnulusFlag::A0));

  CHECK_THROWS_AS(normalize(x, Cx(0.0, 0.0), cfg), InvalidParameter);

  // multiplication is defined on the standard slice only
  const auto y = fixtures::random_e_annulus(rng, cfg);
  CHECK_THROWS_AS(multiply(xn, y, cfg), InvalidParameter);
}

TEST_CASE("complementary_pair requires strict non-overlap") {
  const RunConfig cfg;
  const auto mw = fixtures::mobius_welding_pair(Cx(0.3, 0.0), cfg);
  CHECK_THROWS_AS(complementary_pair(mw, cfg), ClassificationError);

  std::mt19937_64 rng(2);
  const auto x = fixtures::random_a0_annulus(rng, cfg);
  const auto cm = complementary_pair(x, cfg);
  CHECK(cm.f_inf.boundary_residual < 1e-7);
  CHECK(cm.g_zero.boundary_residual < 1e-7);
  CHECK(cm.f_inf.map.lead.real() > 0.0);
  CHECK(cm.g_zero.map.a[0].real() > 0.0);
}

TEST_CASE("associativity on a mixed triple") {
  const RunConfig cfg;
  std::mt19937_64 rng(31);
  const auto x = fixtures::random_e_annulus(rng, cfg);
  const auto y = fixtures::mobius_welding_pair(Cx(0.2, -0.1), cfg);
  const auto z = fixtures::random_e_annulus(rng, cfg);
  const auto lhs = multiply(multiply(x, y, cfg), z, cfg);
  const auto rhs = multiply(x, multiply(y, z, cfg), cfg);
  CHECK(ann_dev(lhs, rhs) < 1e-5);
}
