#include "annulus/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "annulus/charts.hpp"
#include "annulus/fixtures.hpp"
#include "annulus/welding.hpp"

namespace annulus {

namespace {

using fixtures::mobius_welding_F;
using fixtures::mobius_welding_G;
using fixtures::mobius_welding_pair;

double sup_diff(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  double r = 0.0;
  const size_t n = std::max(a.size(), b.size());
  for (size_t k = 0; k < n; ++k) {
    const Cx va = k < a.size() ? a[k] : Cx(0.0, 0.0);
    const Cx vb = k < b.size() ? b[k] : Cx(0.0, 0.0);
    r = std::max(r, std::abs(va - vb));
  }
  return r;
}

double sup_diff(const DiskMap& a, const DiskMap& b) {
  return sup_diff(a.a, b.a);
}

double sup_diff(const ExteriorMap& a, const ExteriorMap& b) {
  double r = std::max(std::abs(a.lead - b.lead), std::abs(a.c0 - b.c0));
  return std::max(r, sup_diff(a.b, b.b));
}

double annulus_diff(const RiggedAnnulus& a, const RiggedAnnulus& b) {
  return std::max(sup_diff(a.f, b.f), sup_diff(a.g, b.g));
}

double lift_sup_diff(const CircleHomeo& a, const CircleHomeo& b) {
  double r = 0.0;
  for (int j = 0; j < a.n(); ++j) {
    double d = a.lift()[j] - b.lift_at(kTwoPi * j / a.n());
    d = std::remainder(d, kTwoPi);
    r = std::max(r, std::abs(d));
  }
  return r;
}

struct Runner {
  const RunConfig& cfg;
  std::vector<CheckResult>& out;

  void le(const std::string& name, double value, double threshold) {
    out.push_back({name, value, threshold, Cmp::le, value <= threshold});
  }
  void ge(const std::string& name, double value, double threshold) {
    out.push_back({name, value, threshold, Cmp::ge, value >= threshold});
  }
  std::mt19937_64 rng(const char* salt) const {
    std::seed_seq seq{cfg.seed, std::hash<std::string>{}(salt)};
    std::mt19937_64 r(seq);
    return r;
  }
};

// ---------------------------------------------------------------- circle --

void check_circle(Runner& R) {
  const int n = R.cfg.grid_n;
  auto rng = R.rng("circle");
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::uniform_real_distribution<double> rad(0.05, 0.3);

  double assoc = 0.0, inverse = 0.0, degree = 0.0;
  bool qs_finite = true;
  for (int trial = 0; trial < 3; ++trial) {
    const CircleHomeo a = mobius_boundary(
        std::polar(rad(rng), ang(rng)), ang(rng), n);
    const CircleHomeo b = mobius_boundary(
        std::polar(rad(rng), ang(rng)), ang(rng), n);
    const CircleHomeo c = mobius_boundary(
        std::polar(rad(rng), ang(rng)), ang(rng), n);
    assoc = std::max(assoc, lift_sup_diff(compose_circle(compose_circle(a, b), c),
                                          compose_circle(a, compose_circle(b, c))));
    inverse = std::max(
        inverse, lift_sup_diff(compose_circle(invert_circle(a), a),
                               CircleHomeo::identity(n)));
    const CircleHomeo ab = compose_circle(a, b);
    degree = std::max(degree,
                      std::abs((ab.lift_at(kTwoPi) - ab.lift_at(0.0)) - kTwoPi));
    const auto q = qs_quotient(ab, 256);
    if (!std::isfinite(q.quotient) || q.quotient < 1.0) qs_finite = false;
  }
  R.le("circle.associativity", assoc, 1e-7);
  R.le("circle.inverse_composition", inverse, 1e-7);
  R.le("circle.degree_preservation", degree, 1e-14);
  R.le("circle.qs_quotient_finite", qs_finite ? 0.0 : 1.0, 0.0);
}

// ------------------------------------------------------------- complexfn --

void check_complexfn(Runner& R) {
  const int m = R.cfg.trunc_m, n = R.cfg.grid_n;
  auto rng = R.rng("complexfn");
  std::normal_distribution<double> gauss(0.0, 1.0);

  // projection identity on band-limited series
  DiskMap f;
  f.a.assign(m, Cx(0.0, 0.0));
  for (int k = 0; k < m; ++k)
    f.a[k] = std::pow(0.6, k) * Cx(gauss(rng), gauss(rng));
  const auto samples = boundary_samples(f, n, 0.95);
  const DiskFit refit = fit_disk_series(samples, 0.95, m);
  R.le("complexfn.fit_projection_residual", refit.residual, 1e-13);
  R.le("complexfn.fit_projection_coeffs", sup_diff(refit.map, f), 1e-12);

  // S involution and the chain rule at the fixed points
  double invol = 0.0, chain = 0.0;
  std::uniform_real_distribution<double> lead_dist(0.5, 2.0);
  for (int trial = 0; trial < 4; ++trial) {
    ExteriorMap g = ExteriorMap::identity(m);
    g.lead = lead_dist(rng);
    // keep |g| bounded away from zero on |w| >= 1 so S(g) is holomorphic
    g.c0 = 0.2 * std::abs(g.lead) * Cx(gauss(rng), gauss(rng)) / 3.0;
    for (int k = 0; k < 3; ++k)
      g.b[k] = 0.03 * std::abs(g.lead) / (k + 1.0) * Cx(gauss(rng), gauss(rng)) / 3.0;
    const DiskFit sg = s_involution(g, m, n, 1.05);
    const ExteriorFit ssg = s_involution(sg.map, m, n, 1.05);
    invol = std::max(invol, sup_diff(ssg.map, g));
    chain = std::max(chain, std::abs(sg.map.a[0] * g.lead - 1.0));
  }
  R.le("complexfn.s_involution", invol, 1e-9);
  R.le("complexfn.s_chain_rule", chain, 1e-10);

  // associativity of composition on nested triples
  auto rng2 = R.rng("complexfn-compose");
  const DiskMap f1 = fixtures::random_bounded_univalent(rng2, 0.8, m);
  const DiskMap f2 = fixtures::random_bounded_univalent(rng2, 0.7, m);
  const DiskMap f3 = fixtures::random_bounded_univalent(rng2, 0.6, m);
  const DiskMap left =
      compose_into_disk(compose_into_disk(f1, f2, m, n).map, f3, m, n).map;
  const DiskMap right =
      compose_into_disk(f1, compose_into_disk(f2, f3, m, n).map, m, n).map;
  R.le("complexfn.compose_associativity", sup_diff(left, right), 1e-8);
}

// --------------------------------------------------------------- riemann --

void check_riemann(Runner& R) {
  const int n = R.cfg.grid_n;
  const RiemannConfig rc = R.cfg.riemann();

  double bres = 0.0, normal = 0.0;
  {
    JordanCurveSamples circle(fixtures::ellipse_points(0.7, 0.7, n));
    JordanCurveSamples off(fixtures::ellipse_points(1.0, 1.0, n, Cx(0.2, 0.0)));
    JordanCurveSamples ell(fixtures::ellipse_points(1.2, 0.8, n));
    JordanCurveSamples pell(
        fixtures::perturbed_ellipse_points(1.2, 0.9, 0.03, 0.4, 0.02, 1.1, n));
    for (const auto* c : {&circle, &off, &ell, &pell}) {
      const InteriorMapResult im = interior_map(*c, rc);
      const ExteriorMapResult em = exterior_map(*c, rc);
      bres = std::max({bres, im.boundary_residual, em.boundary_residual});
      normal = std::max(normal, std::abs(im.map.a[0].imag()));
      normal = std::max(normal, std::abs(em.map.lead.imag()));
    }
  }
  R.le("riemann.boundary_residual", bres, 1e-7);
  R.le("riemann.normalization_imag", normal, 1e-12);

  // rotation covariance: coefficients pick up e^{i(1-k)alpha}
  {
    const double alpha = 0.7;
    const auto base =
        fixtures::perturbed_ellipse_points(1.1, 0.85, 0.03, 0.3, 0.02, 0.9, n);
    std::vector<Cx> rot(base);
    for (auto& p : rot) p *= std::polar(1.0, alpha);
    const InteriorMapResult h0 = interior_map(JordanCurveSamples(base), rc);
    const InteriorMapResult h1 = interior_map(JordanCurveSamples(rot), rc);
    double diff = 0.0;
    for (int k = 0; k < h0.map.order(); ++k) {
      const Cx expect = std::polar(1.0, (1.0 - (k + 1)) * alpha) * h0.map.a[k];
      diff = std::max(diff, std::abs(h1.map.a[k] - expect));
    }
    R.le("riemann.rotation_covariance", diff, 1e-8);
  }

  // idempotent round-trip on a band-limited exterior map
  {
    ExteriorMap jouk = ExteriorMap::identity(R.cfg.trunc_m);
    jouk.b[0] = Cx(0.5, 0.0);
    const auto curve = boundary_samples(jouk, n, 1.0);
    const ExteriorMapResult em = exterior_map(JordanCurveSamples(curve), rc);
    R.le("riemann.roundtrip", sup_diff(em.map, jouk), 1e-7);
  }
}

// --------------------------------------------------------------- welding --

CircleHomeo forward_phi(const InteriorMapResult& fi,
                        const ExteriorMapResult& ge) {
  // phi = G^{-1} o F from the two boundary correspondences
  return compose_circle_spectral(invert_circle_spectral(ge.correspondence),
                                 fi.correspondence);
}

void check_welding(Runner& R) {
  const int n = R.cfg.grid_n, m = R.cfg.trunc_m;

  // closed-form fixture
  {
    const Cx c(0.3, 0.0);
    const WeldResult wr =
        weld({mobius_boundary(c, 0.0, n), Cx(1.0, 0.0), m, n, R.cfg.tol, 50, 1});
    const double df = sup_diff(wr.F, mobius_welding_F(c, m));
    const double dg = sup_diff(wr.G, mobius_welding_G(c, m));
    R.le("welding.mobius_closed_form", std::max(df, dg), 1e-8);
  }

  // uniqueness round-trip through forward-constructed pairs
  {
    double worst = 0.0;
    for (const Cx c : {Cx(0.2, 0.0), Cx(0.1, 0.25), Cx(-0.3, 0.2)}) {
      const WeldResult wr =
          weld({mobius_boundary(c, 0.0, n), Cx(1.0, 0.0), m, n, R.cfg.tol, 50, 1});
      worst = std::max(worst, sup_diff(wr.F, mobius_welding_F(c, m)));
      worst = std::max(worst, sup_diff(wr.G, mobius_welding_G(c, m)));
    }
    const auto pts =
        fixtures::perturbed_ellipse_points(1.1, 0.85, 0.03, 0.5, 0.02, 1.3, n);
    const JordanCurveSamples curve(pts);
    const InteriorMapResult fi = interior_map(curve, R.cfg.riemann());
    const ExteriorMapResult ge = exterior_map(curve, R.cfg.riemann());
    const CircleHomeo phi0 = forward_phi(fi, ge);
    const WeldResult wr =
        weld({phi0, ge.map.lead, m, n, std::max(R.cfg.tol, 1e-6), 50, 3});
    worst = std::max(worst, sup_diff(wr.F, fi.map));
    worst = std::max(worst, sup_diff(wr.G, ge.map));
    R.le("welding.uniqueness_roundtrip", worst, 1e-6);
  }

  // normalization equivariance weld(phi, lam a) = lam weld(phi, a)
  {
    const CircleHomeo phi = mobius_boundary(Cx(0.2, 0.1), 0.0, n);
    const Cx lam(1.7, -0.3);
    const WeldResult w1 = weld({phi, Cx(1.0, 0.0), m, n, R.cfg.tol, 50, 1});
    const WeldResult w2 = weld({phi, lam, m, n, R.cfg.tol, 50, 1});
    DiskMap fs = w1.F;
    for (auto& a : fs.a) a *= lam;
    ExteriorMap gs = w1.G;
    gs.lead *= lam;
    gs.c0 *= lam;
    for (auto& b : gs.b) b *= lam;
    R.le("welding.normalization_equivariance",
         std::max(sup_diff(w2.F, fs), sup_diff(w2.G, gs)), 1e-9);
  }

  // rotation covariance: weld(rot(alpha) o phi) satisfies its own residual
  // and reproduces rot(alpha) o phi as G^{-1} o F
  {
    const double alpha = 0.9;
    const CircleHomeo phi = mobius_boundary(Cx(0.25, 0.0), 0.0, n);
    const CircleHomeo rphi =
        compose_circle(CircleHomeo::rotation(alpha, n), phi);
    const WeldResult wr = weld({rphi, Cx(1.0, 0.0), m, n, R.cfg.tol, 50, 1});
    R.le("welding.rotation_residual", weld_residual(wr.F, wr.G, rphi),
         R.cfg.tol);
    const RiggedAnnulus pair = make_annulus(wr.F, wr.G, R.cfg);
    R.le("welding.rotation_covariance", lift_sup_diff(rho(pair, R.cfg), rphi),
         1e-6);
  }
}

// ------------------------------------------------------------- semigroup --

void check_semigroup(Runner& R) {
  const RunConfig& cfg = R.cfg;
  auto rng = R.rng("semigroup");

  // E-oracle: the full welding pipeline must reproduce direct composition
  {
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const RiggedAnnulus e1 = fixtures::random_e_annulus(rng, cfg);
      const RiggedAnnulus e2 = fixtures::random_e_annulus(rng, cfg);
      worst = std::max(
          worst, annulus_diff(multiply(e1, e2, cfg), compose_e(e1, e2, cfg)));
    }
    R.le("semigroup.e_oracle", worst, 1e-6);

    const RiggedAnnulus h1 =
        make_annulus(DiskMap::scaling(Cx(0.5, 0.0), cfg.trunc_m),
                     ExteriorMap::identity(cfg.trunc_m), cfg);
    const RiggedAnnulus h2 =
        make_annulus(DiskMap::scaling(Cx(1.0 / 3.0, 0.0), cfg.trunc_m),
                     ExteriorMap::identity(cfg.trunc_m), cfg);
    const RiggedAnnulus prod = multiply(h1, h2, cfg);
    const RiggedAnnulus expect =
        make_annulus(DiskMap::scaling(Cx(1.0 / 6.0, 0.0), cfg.trunc_m),
                     ExteriorMap::identity(cfg.trunc_m), cfg);
    R.le("semigroup.e_exact_sixth", annulus_diff(prod, expect), 1e-8);
  }

  // G-homomorphism on welding pairs
  {
    double worst = 0.0;
    for (const auto& [c1, c2] : std::vector<std::pair<Cx, Cx>>{
             {Cx(0.3, 0.0), Cx(0.1, 0.2)}, {Cx(-0.2, 0.15), Cx(0.25, -0.1)}}) {
      const RiggedAnnulus x = mobius_welding_pair(c1, cfg);
      const RiggedAnnulus y = mobius_welding_pair(c2, cfg);
      const CircleHomeo lhs = rho(multiply(x, y, cfg), cfg);
      const CircleHomeo rhs = compose_circle(rho(x, cfg), rho(y, cfg));
      worst = std::max(worst, lift_sup_diff(lhs, rhs));
    }
    R.le("semigroup.g_homomorphism", worst, 1e-6);
  }

  // monoid identity laws across the fixture classes
  {
    const RiggedAnnulus id = identity_annulus(cfg);
    double worst = 0.0;
    std::vector<RiggedAnnulus> xs;
    xs.push_back(fixtures::random_e_annulus(rng, cfg));
    xs.push_back(mobius_welding_pair(Cx(0.25, 0.1), cfg));
    xs.push_back(fixtures::random_a0_annulus(rng, cfg));
    for (const auto& x : xs) {
      worst = std::max(worst, annulus_diff(multiply(id, x, cfg), x));
      worst = std::max(worst, annulus_diff(multiply(x, id, cfg), x));
    }
    R.le("semigroup.identity_laws", worst, 1e-7);
  }

  // associativity on a mixed triple
  {
    const RiggedAnnulus x = fixtures::random_e_annulus(rng, cfg);
    const RiggedAnnulus y = mobius_welding_pair(Cx(0.2, -0.1), cfg);
    const RiggedAnnulus z = fixtures::random_e_annulus(rng, cfg);
    const RiggedAnnulus lhs = multiply(multiply(x, y, cfg), z, cfg);
    const RiggedAnnulus rhs = multiply(x, multiply(y, z, cfg), cfg);
    R.le("semigroup.associativity", annulus_diff(lhs, rhs), 1e-5);
  }

  // automorphism action: H o normalize = a, idempotence, flags stable
  {
    const RiggedAnnulus x = fixtures::random_a0_annulus(rng, cfg);
    const Cx a(3.0, 4.0);
    const RiggedAnnulus xn = normalize(x, a, cfg);
    R.le("semigroup.H_section", std::abs(annulus_H(xn) - a), 1e-12);
    R.le("semigroup.normalize_idempotent",
         annulus_diff(normalize(xn, a, cfg), xn), 1e-12);
    const bool stable =
        xn.flags.count(AnnulusFlag::A0) == x.flags.count(AnnulusFlag::A0) &&
        xn.flags.count(AnnulusFlag::G) == x.flags.count(AnnulusFlag::G);
    R.le("semigroup.action_flags_stable", stable ? 0.0 : 1.0, 0.0);
  }

  // classification fixtures
  {
    const RiggedAnnulus half =
        make_annulus(DiskMap::scaling(Cx(0.5, 0.0), cfg.trunc_m),
                     ExteriorMap::identity(cfg.trunc_m), cfg);
    const bool half_ok = half.flags.count(AnnulusFlag::A0) &&
                         half.flags.count(AnnulusFlag::E);
    const RiggedAnnulus id = identity_annulus(cfg);
    const bool id_ok = id.flags.count(AnnulusFlag::G) &&
                       !id.flags.count(AnnulusFlag::E);
    const RiggedAnnulus mw = mobius_welding_pair(Cx(0.3, 0.0), cfg);
    const bool mw_ok = mw.flags.count(AnnulusFlag::G) == 1;
    R.le("semigroup.classify_fixtures",
         (half_ok && id_ok && mw_ok) ? 0.0 : 1.0, 0.0);
  }
}

// ---------------------------------------------------------------- charts --

void check_charts(Runner& R) {
  const RunConfig& cfg = R.cfg;
  const int m = cfg.trunc_m;
  auto rng = R.rng("charts");
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // chart round trip
  {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const TaylorSeries u =
          fixtures::random_banded_series(rng, 8, 0.5 + 3.5 * unif(rng), m - 1);
      const Cx q = std::polar(0.5 + unif(rng), kTwoPi * unif(rng));
      const DiskMap f = chi_inverse(u, q, m);
      const ChiPoint back = chi(f);
      worst = std::max(worst, sup_diff(back.u.c, u.c));
      worst = std::max(worst, std::abs(back.q - q));
    }
    R.le("charts.roundtrip", worst, 1e-9);
  }

  // univalent pre-Schwarzian bounds
  {
    double bound2 = 0.0, bound6 = 0.0;
    std::vector<DiskMap> fs;
    fs.push_back(mobius_welding_F(Cx(0.3, 0.0), m));
    fs.push_back(mobius_welding_F(Cx(-0.2, 0.35), m));
    fs.push_back(fixtures::random_bounded_univalent(rng, 0.7, m));
    fs.push_back(DiskMap::identity(m));
    for (const auto& f : fs) {
      if (!univalence_winding_disk(f, cfg.grid_n)) continue;
      const TaylorSeries psi = pre_schwarzian(f);
      const double b2 = norm_1inf(
          [&psi](Cx z) { return psi.eval(z) - 2.0 * std::conj(z); }, 32);
      bound2 = std::max(bound2, b2);
      bound6 = std::max(bound6, norm_1inf(psi, 32));
    }
    R.le("charts.univalent_bound_centered", bound2, 4.0 + 1e-3);
    R.le("charts.univalent_bound", bound6, 6.0 + 1e-3);
  }

  // scale behaviour: pre-Schwarzian invariant under post-scaling
  {
    const DiskMap f = fixtures::random_bounded_univalent(rng, 0.6, m);
    DiskMap lf = f;
    const Cx lam(0.7, 1.1);
    for (auto& c : lf.a) c *= lam;
    R.le("charts.scale_invariance",
         sup_diff(pre_schwarzian(f).c, pre_schwarzian(lf).c), 1e-12);
  }

  // chart factorization through (f, S(g)) and the reciprocal slot
  {
    const RiggedAnnulus x = fixtures::random_a0_annulus(rng, cfg);
    const ChartPoint p = big_chart(x, cfg);
    const ChiPoint cf = chi(x.f);
    const DiskFit sg = s_involution(x.g, m, cfg.grid_n, 1.05);
    const ChiPoint cs = chi(sg.map);
    double diff = sup_diff(p.u0.c, cf.u.c);
    diff = std::max(diff, std::abs(p.q0 - cf.q));
    diff = std::max(diff, sup_diff(p.uinf.c, cs.u.c));
    R.le("charts.theta_consistency", diff, 1e-12);
    R.le("charts.qinf_reciprocal", std::abs(p.qinf * cs.q - 1.0), 1e-10);
  }

  // norm examples
  {
    const double n_const =
        norm_1inf(TaylorSeries::constant(Cx(0.7, -1.1), m - 1), 32);
    R.le("charts.norm_constant", std::abs(n_const - std::abs(Cx(0.7, -1.1))),
         1e-6);
    R.le("charts.norm_zero", norm_1inf(TaylorSeries::zero(m - 1), 16), 0.0);
    const double n_pole =
        norm_1inf([](Cx z) { return 2.0 / (1.0 - z); }, 64);
    R.le("charts.norm_two_over_one_minus_z", std::abs(n_pole - 4.0), 1e-3);
  }

  // chart image of the bounded-univalent slice
  {
    const RiggedAnnulus half =
        make_annulus(DiskMap::scaling(Cx(0.5, 0.0), m),
                     ExteriorMap::identity(m), cfg);
    const ChartPoint p = big_chart(half, cfg);
    double diff = std::abs(p.q0 - 0.5);
    diff = std::max(diff, std::abs(p.qinf - 1.0));
    for (const auto& c : p.u0.c) diff = std::max(diff, std::abs(c));
    for (const auto& c : p.uinf.c) diff = std::max(diff, std::abs(c));
    R.le("charts.e_slice_image", diff, 0.0);
  }

  // holomorphy probe: O(h^2) Cauchy-Riemann residual of multiplication
  {
    const RiggedAnnulus x = fixtures::random_e_annulus(rng, cfg);
    const RiggedAnnulus y = fixtures::random_e_annulus(rng, cfg);
    const TaylorSeries v0 = TaylorSeries::zero(m - 1);
    R.le("charts.holo_probe_constant_curve", holo_probe(x, y, v0, 1e-3, cfg),
         0.0);
    const TaylorSeries v = TaylorSeries::constant(Cx(1.0, 0.0), m - 1);
    const double r3 = holo_probe(x, y, v, 1e-3, cfg);
    R.le("charts.holo_probe_e", r3, 1e-4);

    // the nonlinearity of the chart curve is cubic in the direction, so a
    // larger direction lifts the O(h^2) signal above the pipeline noise
    const TaylorSeries v4 = TaylorSeries::constant(Cx(4.0, 0.0), m - 1);
    const RiggedAnnulus xa = fixtures::random_a0_annulus(rng, cfg);
    const RiggedAnnulus ya = fixtures::random_a0_annulus(rng, cfg);
    const double ra3 = holo_probe(xa, ya, v4, 1e-3, cfg);
    const double ra2 = holo_probe(xa, ya, v4, 1e-2, cfg);
    R.le("charts.holo_probe_a0", ra3, 1e-3);
    R.ge("charts.holo_probe_richardson", ra2 / std::max(ra3, 1e-300), 10.0);
  }
}

}  // namespace

VerifyReport run_verify(const RunConfig& cfg, const std::string& suite) {
  cfg.validate();
  if (suite != "welding" && suite != "semigroup" && suite != "charts" &&
      suite != "all")
    throw InvalidParameter("verify: unknown suite \"" + suite + "\"");

  VerifyReport rep;
  rep.suite = suite;
  rep.config = cfg;
  Runner R{cfg, rep.cases};

  if (suite == "all") {
    check_circle(R);
    check_complexfn(R);
    check_riemann(R);
  }
  if (suite == "welding" || suite == "all") check_welding(R);
  if (suite == "semigroup" || suite == "all") check_semigroup(R);
  if (suite == "charts" || suite == "all") check_charts(R);

  std::sort(rep.cases.begin(), rep.cases.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.name < b.name;
            });
  rep.pass = std::all_of(rep.cases.begin(), rep.cases.end(),
                         [](const CheckResult& c) { return c.pass; });
  return rep;
}

Json report_to_json(const VerifyReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back(Json{{"name", c.name},
                         {"value", c.value},
                         {"threshold", c.threshold},
                         {"cmp", c.cmp == Cmp::le ? "le" : "ge"},
                         {"pass", c.pass}});
  return Json{{"kind", "verify_report"},
              {"suite", r.suite},
              {"seed", r.config.seed},
              {"config",
               Json{{"grid_n", r.config.grid_n},
                    {"trunc_m", r.config.trunc_m},
                    {"tol", r.config.tol},
                    {"delta_touch", r.config.delta_touch}}},
              {"cases", cases},
              {"pass", r.pass}};
}

std::string report_human(const VerifyReport& r) {
  std::ostringstream ss;
  for (const auto& c : r.cases) {
    char line[256];
    std::snprintf(line, sizeof(line), "%s %-42s value=%.12e %s %.12e\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                  c.cmp == Cmp::le ? "<=" : ">=", c.threshold);
    ss << line;
  }
  ss << (r.pass ? "OK" : "FAILED") << " (" << r.cases.size() << " checks, suite "
     << r.suite << ", seed " << r.config.seed << ")\n";
  return ss.str();
}

}  // namespace annulus
