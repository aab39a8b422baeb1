#include "annulus/fixtures.hpp"

#include <cmath>

namespace annulus {
namespace fixtures {

DiskMap mobius_welding_F(Cx c, int m) {
  // (1-|c|^2) z / (1 + conj(c) z) = (1-|c|^2) sum_k (-conj(c))^{k-1} z^k
  DiskMap f;
  f.a.assign(m, Cx(0.0, 0.0));
  const double s = 1.0 - std::norm(c);
  Cx p(1.0, 0.0);
  for (int k = 0; k < m; ++k) {
    f.a[k] = s * p;
    p *= -std::conj(c);
  }
  return f;
}

ExteriorMap mobius_welding_G(Cx c, int m) {
  ExteriorMap g = ExteriorMap::identity(m);
  g.c0 = -c;
  return g;
}

RiggedAnnulus mobius_welding_pair(Cx c, const RunConfig& cfg) {
  return make_annulus(mobius_welding_F(c, cfg.trunc_m),
                      mobius_welding_G(c, cfg.trunc_m), cfg);
}

DiskMap mobius_interior_of_circle(Cx center, double radius, int m) {
  if (!(std::abs(center) < radius))
    throw InvalidParameter("mobius_interior_of_circle: 0 must be interior");
  const Cx p = center / radius;
  // center + radius (z - p)/(1 - conj(p) z): coefficient of z^k is
  // radius (1 - |p|^2) conj(p)^{k-1}.
  DiskMap f;
  f.a.assign(m, Cx(0.0, 0.0));
  const double s = radius * (1.0 - std::norm(p));
  Cx q(1.0, 0.0);
  for (int k = 0; k < m; ++k) {
    f.a[k] = s * q;
    q *= std::conj(p);
  }
  return f;
}

std::vector<Cx> ellipse_points(double a, double b, int n, Cx center) {
  std::vector<Cx> pts(n);
  for (int j = 0; j < n; ++j) {
    const double s = kTwoPi * j / n;
    pts[j] = center + Cx(a * std::cos(s), b * std::sin(s));
  }
  return pts;
}

std::vector<Cx> perturbed_ellipse_points(double a, double b, double eps1,
                                         double p1, double eps2, double p2,
                                         int n) {
  std::vector<Cx> pts(n);
  for (int j = 0; j < n; ++j) {
    const double s = kTwoPi * j / n;
    const double rad =
        1.0 + eps1 * std::cos(2.0 * s + p1) + eps2 * std::cos(3.0 * s + p2);
    pts[j] = rad * Cx(a * std::cos(s), b * std::sin(s));
  }
  return pts;
}

TaylorSeries random_banded_series(std::mt19937_64& rng, int degree,
                                  double target_norm, int len) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  TaylorSeries u = TaylorSeries::zero(len);
  for (int k = 0; k <= degree && k < len; ++k)
    u.c[k] = Cx(gauss(rng), gauss(rng)) / (1.0 + k);
  const double nu = norm_1inf(u, 16);
  if (nu > 0.0)
    for (auto& c : u.c) c *= target_norm / nu;
  return u;
}

DiskMap random_bounded_univalent(std::mt19937_64& rng, double target, int m) {
  std::uniform_real_distribution<double> unif(0.3, 0.8);
  // norm below 1 gives univalence with a quasiconformal extension
  // (Becker's criterion); kept at 0.7 for margin.
  const TaylorSeries u = random_banded_series(rng, 6, 0.7 * unif(rng), m - 1);
  DiskMap f = chi_inverse(u, Cx(1.0, 0.0), m);
  double sup = 0.0;
  for (const auto& v : boundary_samples(f, 512, 1.0))
    sup = std::max(sup, std::abs(v));
  const double lam = target / sup;
  for (auto& c : f.a) c *= lam;
  return f;
}

RiggedAnnulus random_e_annulus(std::mt19937_64& rng, const RunConfig& cfg) {
  std::uniform_real_distribution<double> unif(0.35, 0.8);
  DiskMap f = random_bounded_univalent(rng, unif(rng), cfg.trunc_m);
  return make_annulus(std::move(f), ExteriorMap::identity(cfg.trunc_m), cfg);
}

RiggedAnnulus random_a0_annulus(std::mt19937_64& rng, const RunConfig& cfg) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  DiskMap f = random_bounded_univalent(rng, 0.35 + 0.2 * unif(rng),
                                       cfg.trunc_m);
  ExteriorMap g = ExteriorMap::identity(cfg.trunc_m);
  g.c0 = 0.05 * Cx(unif(rng) - 0.5, unif(rng) - 0.5);
  for (int k = 0; k < 3; ++k)
    g.b[k] = 0.08 / (k + 1.0) * Cx(unif(rng) - 0.5, unif(rng) - 0.5);
  return make_annulus(std::move(f), std::move(g), cfg);
}

}  // namespace fixtures
}  // namespace annulus
