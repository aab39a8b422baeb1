#include <doctest.h>

#include <cmath>
#include <random>

#include "annulus/fixtures.hpp"

using namespace annulus;

namespace {

double series_dev(const TaylorSeries& a, const TaylorSeries& b) {
  double d = 0.0;
  for (int k = 0; k < std::max(a.size(), b.size()); ++k) {
    const Cx ca = k < a.size() ? a.c[k] : Cx{};
    const Cx cb = k < b.size() ? b.c[k] : Cx{};
    d = std::max(d, std::abs(ca - cb));
  }
  return d;
}

// truncation of z/(1-z)^2 (unbounded univalent map, coefficients k)
DiskMap koebe_like(int m) {
  DiskMap f;
  f.a.resize(m);
  for (int k = 1; k <= m; ++k) f.a[k - 1] = static_cast<double>(k);
  return f;
}

}  // namespace

TEST_CASE("pre_schwarzian closed forms") {
  // identity -> 0
  const auto z = pre_schwarzian(DiskMap::identity(16));
  CHECK(series_dev(z, TaylorSeries::zero(15)) == 0.0);

  // z/(1-z): psi = 2/(1-z), coefficients all 2
  DiskMap g;
  g.a.assign(64, Cx(1.0, 0.0));
  const auto pg = pre_schwarzian(g);
  for (int k = 0; k < 63; ++k)
    CHECK(std::abs(pg.c[k] - 2.0) < 1e-9);

  // z/(1-z)^2: psi = 1/(1+z) + 3/(1-z), coefficients 3 + (-1)^k
  double residual = 0.0;
  const auto pk = pre_schwarzian(koebe_like(64), &residual);
  for (int k = 0; k < 63; ++k) {
    const double expect = 3.0 + (k % 2 == 0 ? 1.0 : -1.0);
    CHECK(std::abs(pk.c[k] - expect) < 1e-9);
  }
  CHECK(residual > 0.0);  // truncated input leaves a tail mismatch

  // vanishing derivative is refused
  DiskMap flat;
  flat.a.assign(8, Cx(0.0, 0.0));
  flat.a[1] = Cx(1.0, 0.0);  // f = z^2, f'(0) = 0
  CHECK_THROWS_AS(pre_schwarzian(flat), DerivativeVanishes);
}

TEST_CASE("chi pairs the pre-Schwarzian with f'(0)") {
  const auto c1 = chi(DiskMap::identity(16));
  CHECK(series_dev(c1.u, TaylorSeries::zero(15)) == 0.0);
  CHECK(c1.q == Cx(1.0, 0.0));

  const auto c2 = chi(DiskMap::scaling(Cx(2.0, 0.0), 16));
  CHECK(series_dev(c2.u, TaylorSeries::zero(15)) == 0.0);
  CHECK(c2.q == Cx(2.0, 0.0));

  const auto c3 = chi(koebe_like(64));
  CHECK(c3.q == Cx(1.0, 0.0));
  CHECK(std::abs(c3.u.c[0] - 4.0) < 1e-12);
}

TEST_CASE("chi_inverse closed forms and the round trip") {
  // (0, 1) -> z and (0, q) -> q z
  CHECK(std::abs(chi_inverse(TaylorSeries::zero(15), Cx(1.0, 0.0), 16).a[0] -
                 1.0) == 0.0);
  const auto qz = chi_inverse(TaylorSeries::zero(15), Cx(0.0, 2.0), 16);
  CHECK(qz.a[0] == Cx(0.0, 2.0));
  for (int k = 1; k < 16; ++k) CHECK(std::abs(qz.a[k]) == 0.0);

  // constant series c: f = (e^{cz} - 1)/c, coefficients c^{k-1}/k!
  const Cx cc(0.4, -0.3);
  const auto f = chi_inverse(TaylorSeries::constant(cc, 15), Cx(1.0, 0.0), 16);
  double fact = 1.0;
  for (int k = 1; k <= 16; ++k) {
    fact *= k;
    const Cx expect = std::pow(cc, k - 1) / fact;
    CHECK(std::abs(f.a[k - 1] - expect) < 1e-10);
  }

  // round trip on random band-limited data
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto u = fixtures::random_banded_series(rng, 8, 0.5 + 3.5 * unif(rng), 63);
    const Cx q = std::polar(0.3 + unif(rng), kTwoPi * unif(rng));
    const auto back = chi(chi_inverse(u, q, 64));
    CHECK(series_dev(back.u, u) < 1e-9);
    CHECK(std::abs(back.q - q) < 1e-12);
  }
}

TEST_CASE("norm_1inf examples") {
  CHECK(std::abs(norm_1inf(TaylorSeries::constant(Cx(0.3, 0.4), 8)) - 0.5) <
        1e-6);
  CHECK(norm_1inf(TaylorSeries::zero(8)) == 0.0);
  const double n4 = norm_1inf([](Cx z) { return 2.0 / (1.0 - z); }, 64);
  CHECK(std::abs(n4 - 4.0) < 1e-3);
}

TEST_CASE("univalent pre-Schwarzian bound") {
  const RunConfig cfg;
  std::mt19937_64 rng(9);
  std::vector<DiskMap> fs;
  fs.push_back(fixtures::mobius_welding_F(Cx(0.3, 0.0), 64));
  fs.push_back(fixtures::mobius_welding_F(Cx(-0.25, 0.4), 64));
  fs.push_back(fixtures::random_bounded_univalent(rng, 0.7, 64));
  fs.push_back(koebe_like(64));
  for (const auto& f : fs) {
    if (!univalence_winding_disk(f, 1024)) continue;
    const auto psi = pre_schwarzian(f);
    const double b2 = norm_1inf(
        [&psi](Cx z) { return psi.eval(z) - 2.0 * std::conj(z); }, 32);
    CHECK(b2 <= 4.0 + 1e-3);
    CHECK(norm_1inf(psi, 32) <= 6.0 + 1e-3);
  }
}

TEST_CASE("big_chart images") {
  const RunConfig cfg;
  // identity pair -> (0, 1, 0, 1), exactly
  const auto p0 = big_chart(identity_annulus(cfg), cfg);
  CHECK(series_dev(p0.u0, TaylorSeries::zero(63)) == 0.0);
  CHECK(p0.q0 == Cx(1.0, 0.0));
  CHECK(series_dev(p0.uinf, TaylorSeries::zero(63)) == 0.0);
  CHECK(p0.qinf == Cx(1.0, 0.0));

  // bounded-univalent slice: (psi(f), f'(0), 0, 1)
  const auto half = make_annulus(DiskMap::scaling(Cx(0.5, 0.0), 64),
                                 ExteriorMap::identity(64), cfg);
  const auto p1 = big_chart(half, cfg);
  CHECK(p1.q0 == Cx(0.5, 0.0));
  CHECK(series_dev(p1.uinf, TaylorSeries::zero(63)) == 0.0);
  CHECK(p1.qinf == Cx(1.0, 0.0));

  // (lam z/(1-0.2z), w + 1): psi(f) = 0.4/(1-0.2z) has coefficients
  // 2 (0.2)^{k+1}; S(g) = z/(1+z) has psi = -2/(1+z)
  DiskMap f;
  f.a.resize(64);
  for (int k = 0; k < 64; ++k) f.a[k] = 0.2 * std::pow(0.2, k);  // scaled into the disk
  ExteriorMap g = ExteriorMap::identity(64);
  g.c0 = Cx(1.0, 0.0);
  RiggedAnnulus x;
  x.f = std::move(f);
  x.g = std::move(g);
  const auto p2 = big_chart(x, cfg);
  for (int k = 0; k < 32; ++k) {
    CHECK(std::abs(p2.u0.c[k] - 2.0 * std::pow(0.2, k + 1)) < 1e-9);
    const double expect = -2.0 * (k % 2 == 0 ? 1.0 : -1.0);
    CHECK(std::abs(p2.uinf.c[k] - expect) < 1e-9);
  }
  CHECK(std::abs(p2.qinf - 1.0) < 1e-14);

  // scale invariance of the pre-Schwarzian slot
  RiggedAnnulus xs = x;
  for (auto& a : xs.f.a) a *= Cx(0.5, 1.2);
  CHECK(series_dev(big_chart(xs, cfg).u0, p2.u0) < 1e-12);
}

TEST_CASE("holo_probe is zero along a constant curve") {
  const RunConfig cfg;
  std::mt19937_64 rng(3);
  const auto x = fixtures::random_e_annulus(rng, cfg);
  const auto y = fixtures::random_e_annulus(rng, cfg);
  CHECK(holo_probe(x, y, TaylorSeries::zero(63), 1e-3, cfg) == 0.0);
}

TEST_CASE("holo_probe against the direct-composition derivative oracle") {
  const RunConfig cfg;
  const int m = cfg.trunc_m;
  std::mt19937_64 rng(3);
  const auto x = fixtures::random_e_annulus(rng, cfg);
  const auto y = fixtures::random_e_annulus(rng, cfg);
  const auto v = TaylorSeries::constant(Cx(1.0, 0.0), m - 1);

  // direct path: B(t) of (f_t o f_2, Id) without the welding pipeline
  const ChiPoint base = chi(x.f);
  auto direct_B = [&](Cx t) {
    TaylorSeries ut = base.u;
    for (int k = 0; k < std::min(ut.size(), v.size()); ++k)
      ut.c[k] += t * v.c[k];
    const DiskMap ft = chi_inverse(ut, base.q, m);
    const DiskMap comp = compose_into_disk(ft, y.f, m, cfg.grid_n).map;
    const ChiPoint cc = chi(comp);
    std::vector<Cx> out = cc.u.c;
    out.push_back(cc.q);
    return out;
  };
  const double h = 1e-3;
  const auto bp = direct_B(Cx(h, 0.0)), bm = direct_B(Cx(-h, 0.0));
  const auto bip = direct_B(Cx(0.0, h)), bim = direct_B(Cx(0.0, -h));
  // the oracle derivative along both axes
  std::vector<Cx> d1(bp.size()), d2(bp.size());
  for (size_t k = 0; k < bp.size(); ++k) {
    d1[k] = (bp[k] - bm[k]) / (2.0 * h);
    d2[k] = (bip[k] - bim[k]) / Cx(0.0, 2.0 * h);
  }
  // CR residual of the direct path itself is tiny
  double direct_cr = 0.0;
  for (size_t k = 0; k < bp.size(); ++k)
    direct_cr = std::max(direct_cr, std::abs(d2[k] - d1[k]));
  CHECK(direct_cr < 1e-8);

  // the full welding pipeline agrees with the direct derivative
  auto pipeline_B = [&](Cx t) {
    TaylorSeries ut = base.u;
    for (int k = 0; k < std::min(ut.size(), v.size()); ++k)
      ut.c[k] += t * v.c[k];
    RiggedAnnulus xt = x;
    xt.f = chi_inverse(ut, base.q, m);
    const ChartPoint cp = big_chart(multiply(xt, y, cfg), cfg);
    std::vector<Cx> out = cp.u0.c;
    out.push_back(cp.q0);
    return out;
  };
  const auto pp = pipeline_B(Cx(h, 0.0)), pm = pipeline_B(Cx(-h, 0.0));
  double dev = 0.0;
  for (size_t k = 0; k < bp.size(); ++k)
    dev = std::max(dev, std::abs((pp[k] - pm[k]) / (2.0 * h) - d1[k]));
  CHECK(dev < 1e-4);

  // the probe itself is far below its acceptance threshold
  CHECK(holo_probe(x, y, v, 1e-3, cfg) < 1e-4);
}

TEST_CASE("holo_probe shows O(h^2) behaviour on strictly nested pairs") {
  const RunConfig cfg;
  std::mt19937_64 rng(8);
  const auto x = fixtures::random_a0_annulus(rng, cfg);
  const auto y = fixtures::random_a0_annulus(rng, cfg);
  const auto v = TaylorSeries::constant(Cx(4.0, 0.0), cfg.trunc_m - 1);
  const double r3 = holo_probe(x, y, v, 1e-3, cfg);
  const double r2 = holo_probe(x, y, v, 1e-2, cfg);
  CHECK(r3 < 1e-3);
  CHECK(r2 / r3 > 10.0);
}
