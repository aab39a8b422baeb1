#include "annulus/charts.hpp"

#include <algorithm>
#include <cmath>

namespace annulus {

Cx TaylorSeries::eval(Cx z) const {
  Cx acc(0.0, 0.0);
  for (int k = size() - 1; k >= 0; --k) acc = acc * z + c[k];
  return acc;
}

TaylorSeries pre_schwarzian(const DiskMap& f, double* residual_out) {
  const int m = f.order();
  if (m < 2) throw InvalidParameter("pre_schwarzian: need order >= 2");

  // f' and f'' as coefficient vectors (degree m-1 and m-2)
  std::vector<Cx> fp(m), fpp(std::max(1, m - 1));
  for (int k = 0; k < m; ++k) fp[k] = static_cast<double>(k + 1) * f.a[k];
  for (int k = 0; k + 1 < m; ++k)
    fpp[k] = static_cast<double>((k + 1) * (k + 2)) * f.a[k + 1];

  if (std::abs(fp[0]) < 1e-10)
    throw DerivativeVanishes("pre_schwarzian: f'(0) is numerically zero");
  for (int j = 0; j < 256; ++j) {
    const double t = kTwoPi * j / 256;
    if (std::abs(f.deriv_unchecked(0.95 * Cx(std::cos(t), std::sin(t)))) <
        1e-10)
      throw DerivativeVanishes(
          "pre_schwarzian: f' vanishes on the fit circle");
  }

  // series division f''/f' to degree m-2
  const int len = m - 1;
  TaylorSeries psi = TaylorSeries::zero(len);
  for (int k = 0; k < len; ++k) {
    Cx acc = (k < static_cast<int>(fpp.size())) ? fpp[k] : Cx(0.0, 0.0);
    for (int j = 0; j < k; ++j) acc -= psi.c[j] * fp[k - j];
    psi.c[k] = acc / fp[0];
  }

  if (residual_out) {
    // coefficients of psi*f' - f'' beyond the matched window
    double r = 0.0;
    const int top = len + m - 1;  // highest degree of the product, exclusive
    for (int k = len; k < top; ++k) {
      Cx acc(0.0, 0.0);
      for (int j = std::max(0, k - m + 1); j < std::min(len, k + 1); ++j)
        acc += psi.c[j] * fp[k - j];
      if (k < static_cast<int>(fpp.size())) acc -= fpp[k];
      r = std::max(r, std::abs(acc));
    }
    *residual_out = r;
  }
  return psi;
}

ChiPoint chi(const DiskMap& f) { return {pre_schwarzian(f), f.a.at(0)}; }

DiskMap chi_inverse(const TaylorSeries& u, Cx q, int m) {
  if (!(std::abs(q) > 0.0)) throw InvalidParameter("chi_inverse: q must be nonzero");
  if (m < 1) throw InvalidParameter("chi_inverse: m must be positive");

  // U = int u, degree <= len(u); E = exp(U) via E' = U' E = u E
  std::vector<Cx> e(m, Cx(0.0, 0.0));
  e[0] = Cx(1.0, 0.0);
  for (int k = 1; k < m; ++k) {
    Cx acc(0.0, 0.0);
    for (int j = 0; j < std::min(k, u.size()); ++j)
      acc += u.c[j] * e[k - 1 - j];
    e[k] = acc / static_cast<double>(k);
  }

  DiskMap f;
  f.a.assign(m, Cx(0.0, 0.0));
  for (int k = 1; k <= m; ++k) f.a[k - 1] = q * e[k - 1] / static_cast<double>(k);
  return f;
}

namespace {

double weighted_sup_on_grid(const std::function<Cx(Cx)>& v, int radial,
                            int angular) {
  double sup = std::abs(v(Cx(0.0, 0.0)));  // center, weight 1
  for (int i = 1; i <= radial; ++i) {
    // log-spaced toward |z| = 1, reaching 1 - 1e-7
    const double t = static_cast<double>(i) / radial;
    const double r = 1.0 - std::pow(10.0, -7.0 * t);
    const double w = 1.0 - r * r;
    for (int j = 0; j < angular; ++j) {
      const double th = kTwoPi * j / angular;
      const double val = w * std::abs(v(r * Cx(std::cos(th), std::sin(th))));
      sup = std::max(sup, val);
    }
  }
  return sup;
}

}  // namespace

double norm_1inf(const std::function<Cx(Cx)>& v, int radial_samples) {
  int radial = std::max(8, radial_samples);
  int angular = 256;
  double prev = weighted_sup_on_grid(v, radial, angular);
  for (int it = 0; it < 6; ++it) {
    radial *= 2;
    angular = std::min(2 * angular, 2048);
    const double cur = weighted_sup_on_grid(v, radial, angular);
    if (std::abs(cur - prev) <= 1e-4 * std::max(1e-300, cur)) return cur;
    prev = cur;
  }
  return prev;
}

double norm_1inf(const TaylorSeries& v, int radial_samples) {
  return norm_1inf([&v](Cx z) { return v.eval(z); }, radial_samples);
}

ChartPoint big_chart(const RiggedAnnulus& x, const RunConfig& cfg) {
  ChartPoint p;
  p.u0 = pre_schwarzian(x.f);
  p.q0 = x.f.a.at(0);
  if (x.g.is_identity()) {
    p.uinf = TaylorSeries::zero(std::max(1, x.g.order() - 1));
    p.qinf = Cx(1.0, 0.0);
    return p;
  }
  const DiskFit sg = s_involution(x.g, x.g.order(), cfg.grid_n, 1.05);
  p.uinf = pre_schwarzian(sg.map);
  p.qinf = x.g.lead;
  return p;
}

std::vector<Cx> flatten(const ChartPoint& p) {
  std::vector<Cx> v;
  v.reserve(p.u0.size() + p.uinf.size() + 2);
  v.insert(v.end(), p.u0.c.begin(), p.u0.c.end());
  v.push_back(p.q0);
  v.insert(v.end(), p.uinf.c.begin(), p.uinf.c.end());
  v.push_back(p.qinf);
  return v;
}

double holo_probe(const RiggedAnnulus& x, const RiggedAnnulus& y,
                  const RunConfig& cfg) {
  return holo_probe(
      x, y, TaylorSeries::constant(Cx(1.0, 0.0), std::max(1, x.f.order() - 1)),
      1e-3, cfg);
}

double holo_probe(const RiggedAnnulus& x, const RiggedAnnulus& y,
                  const TaylorSeries& v, double h, const RunConfig& cfg) {
  if (!(h > 0.0)) throw InvalidParameter("holo_probe: h must be positive");
  const ChiPoint base = chi(x.f);
  const int m = x.f.order();

  auto perturbed = [&](Cx t) {
    TaylorSeries ut = base.u;
    for (int k = 0; k < std::min(ut.size(), v.size()); ++k)
      ut.c[k] += t * v.c[k];
    RiggedAnnulus xt = x;
    xt.f = chi_inverse(ut, base.q, m);
    return flatten(big_chart(multiply(xt, y, cfg), cfg));
  };

  const auto bp = perturbed(Cx(h, 0.0));
  const auto bm = perturbed(Cx(-h, 0.0));
  const auto bip = perturbed(Cx(0.0, h));
  const auto bim = perturbed(Cx(0.0, -h));

  double sup = 0.0;
  const Cx two_h(2.0 * h, 0.0);
  const Cx two_ih(0.0, 2.0 * h);
  for (size_t k = 0; k < bp.size(); ++k) {
    const Cx d1 = (bp[k] - bm[k]) / two_h;
    const Cx d2 = (bip[k] - bim[k]) / two_ih;
    sup = std::max(sup, std::abs(d2 - d1));
  }
  return sup;
}

}  // namespace annulus
