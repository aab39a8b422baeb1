#include "annulus/series.hpp"

#include <algorithm>
#include <cmath>

#include "annulus/fft.hpp"

namespace annulus {

namespace {

constexpr double kDomainSlack = 1e-12;

std::vector<Cx> unit_circle(int n, double radius) {
  std::vector<Cx> z(n);
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    z[j] = radius * Cx(std::cos(t), std::sin(t));
  }
  return z;
}

}  // namespace

Cx DiskMap::eval_unchecked(Cx z) const {
  Cx acc(0.0, 0.0);
  for (int k = order() - 1; k >= 0; --k) acc = acc * z + a[k];
  return acc * z;
}

Cx DiskMap::deriv_unchecked(Cx z) const {
  Cx acc(0.0, 0.0);
  for (int k = order() - 1; k >= 0; --k)
    acc = acc * z + static_cast<double>(k + 1) * a[k];
  return acc;
}

Cx DiskMap::eval(Cx z) const {
  if (std::abs(z) > 1.0 + kDomainSlack)
    throw DomainViolation("disk map evaluated outside the closed unit disk");
  return eval_unchecked(z);
}

Cx DiskMap::deriv(Cx z) const {
  if (std::abs(z) > 1.0 + kDomainSlack)
    throw DomainViolation("disk map evaluated outside the closed unit disk");
  return deriv_unchecked(z);
}

DiskMap DiskMap::identity(int m) {
  DiskMap f;
  f.a.assign(m, Cx(0.0, 0.0));
  f.a[0] = Cx(1.0, 0.0);
  return f;
}

DiskMap DiskMap::scaling(Cx s, int m) {
  DiskMap f;
  f.a.assign(m, Cx(0.0, 0.0));
  f.a[0] = s;
  return f;
}

Cx ExteriorMap::eval_unchecked(Cx w) const {
  const Cx iw = 1.0 / w;
  Cx acc(0.0, 0.0);
  for (int k = order() - 1; k >= 0; --k) acc = acc * iw + b[k];
  return lead * w + c0 + acc * iw;
}

Cx ExteriorMap::deriv_unchecked(Cx w) const {
  const Cx iw = 1.0 / w;
  Cx acc(0.0, 0.0);
  for (int k = order() - 1; k >= 0; --k)
    acc = acc * iw + static_cast<double>(k + 1) * b[k];
  return lead - acc * iw * iw;
}

Cx ExteriorMap::eval(Cx w) const {
  if (std::abs(w) < 1.0 - kDomainSlack)
    throw DomainViolation("exterior map evaluated inside the unit disk");
  return eval_unchecked(w);
}

Cx ExteriorMap::deriv(Cx w) const {
  if (std::abs(w) < 1.0 - kDomainSlack)
    throw DomainViolation("exterior map evaluated inside the unit disk");
  return deriv_unchecked(w);
}

bool ExteriorMap::is_identity(double tol) const {
  if (std::abs(lead - 1.0) > tol || std::abs(c0) > tol) return false;
  for (const auto& v : b)
    if (std::abs(v) > tol) return false;
  return true;
}

ExteriorMap ExteriorMap::identity(int m) {
  ExteriorMap g;
  g.b.assign(m, Cx(0.0, 0.0));
  return g;
}

void validate_exterior(const ExteriorMap& g) {
  if (!(std::abs(g.lead) > 0.0))
    throw InvalidParameter("exterior map requires lead != 0");
}

namespace {

struct BandSplit {
  std::vector<Cx> coeffs;  // FFT-ordered Fourier coefficients
  double total_energy = 0.0;
  double kept_energy = 0.0;
};

BandSplit analyze(const std::vector<Cx>& samples) {
  const int n = static_cast<int>(samples.size());
  if (!is_power_of_two(n))
    throw InvalidParameter("fit_series: sample count must be a power of two");
  BandSplit s;
  s.coeffs = fourier_coeffs(samples);
  for (const auto& c : s.coeffs) s.total_energy += std::norm(c);
  return s;
}

void check_fit_pre(int n, int m, double fit_radius, bool disk) {
  if (m < 1) throw InvalidParameter("fit_series: trunc_m must be positive");
  if (n < 8 * m)
    throw InvalidParameter("fit_series: need at least 8*trunc_m samples");
  if (disk && !(fit_radius > 0.0 && fit_radius <= 1.0))
    throw InvalidParameter("fit_series: disk fit radius must be in (0, 1]");
  if (!disk && !(fit_radius >= 1.0))
    throw InvalidParameter("fit_series: exterior fit radius must be >= 1");
}

void check_aliasing(const BandSplit& s, const char* what) {
  const double discarded = s.total_energy - s.kept_energy;
  if (s.total_energy > 0.0 && discarded > 0.1 * s.total_energy)
    throw AliasingError(std::string(what) +
                        ": discarded band carries " +
                        std::to_string(100.0 * discarded / s.total_energy) +
                        "% of the energy (under-resolved)");
}

double sup_residual(const std::vector<Cx>& samples,
                    const std::vector<Cx>& reconstructed) {
  double r = 0.0;
  for (size_t j = 0; j < samples.size(); ++j)
    r = std::max(r, std::abs(samples[j] - reconstructed[j]));
  return r;
}

}  // namespace

DiskFit fit_disk_series(const std::vector<Cx>& samples, double fit_radius,
                        int m) {
  const int n = static_cast<int>(samples.size());
  check_fit_pre(n, m, fit_radius, true);
  BandSplit s = analyze(samples);

  DiskMap f;
  f.a.assign(m, Cx(0.0, 0.0));
  double scale = 1.0;
  for (int k = 1; k <= m; ++k) {
    scale /= fit_radius;
    f.a[k - 1] = s.coeffs[k] * scale;
    s.kept_energy += std::norm(s.coeffs[k]);
  }
  check_aliasing(s, "fit_disk_series");

  std::vector<Cx> rec(n);
  const auto z = unit_circle(n, fit_radius);
  for (int j = 0; j < n; ++j) rec[j] = f.eval_unchecked(z[j]);
  return {std::move(f), sup_residual(samples, rec)};
}

ExteriorFit fit_exterior_series(const std::vector<Cx>& samples,
                                double fit_radius, int m) {
  const int n = static_cast<int>(samples.size());
  check_fit_pre(n, m, fit_radius, false);
  BandSplit s = analyze(samples);

  ExteriorMap g;
  g.lead = s.coeffs[1] / fit_radius;
  g.c0 = s.coeffs[0];
  g.b.assign(m, Cx(0.0, 0.0));
  s.kept_energy = std::norm(s.coeffs[0]) + std::norm(s.coeffs[1]);
  double scale = 1.0;
  for (int k = 1; k <= m; ++k) {
    scale *= fit_radius;
    g.b[k - 1] = s.coeffs[n - k] * scale;
    s.kept_energy += std::norm(s.coeffs[n - k]);
  }
  check_aliasing(s, "fit_exterior_series");
  validate_exterior(g);

  std::vector<Cx> rec(n);
  const auto w = unit_circle(n, fit_radius);
  for (int j = 0; j < n; ++j) rec[j] = g.eval_unchecked(w[j]);
  return {std::move(g), sup_residual(samples, rec)};
}

DiskFit s_involution(const ExteriorMap& g, int m, int grid_n,
                     double fit_radius) {
  validate_exterior(g);
  if (g.is_identity()) return {DiskMap::identity(m), 0.0};
  const double r = 1.0 / fit_radius;
  const auto z = unit_circle(grid_n, r);
  std::vector<Cx> samples(grid_n);
  for (int j = 0; j < grid_n; ++j) {
    const Cx gv = g.eval_unchecked(1.0 / z[j]);
    if (std::abs(gv) < 1e-10)
      throw ZeroInImage("s_involution: g vanishes on the sampling circle");
    samples[j] = 1.0 / gv;
  }
  return fit_disk_series(samples, r, m);
}

ExteriorFit s_involution(const DiskMap& f, int m, int grid_n,
                         double fit_radius) {
  const auto w = unit_circle(grid_n, fit_radius);
  std::vector<Cx> samples(grid_n);
  for (int j = 0; j < grid_n; ++j) {
    const Cx fv = f.eval_unchecked(1.0 / w[j]);
    if (std::abs(fv) < 1e-10)
      throw ZeroInImage("s_involution: f vanishes on the sampling circle");
    samples[j] = 1.0 / fv;
  }
  return fit_exterior_series(samples, fit_radius, m);
}

DiskFit compose_into_disk(const DiskMap& outer, const DiskMap& inner, int m,
                          int grid_n, double fit_radius) {
  double sup = 0.0;
  for (const auto& v : boundary_samples(inner, grid_n, 1.0))
    sup = std::max(sup, std::abs(v));
  if (sup > 1.0 - 1e-6)
    throw RangeViolation(
        "compose_into_disk: inner map does not send the closed disk "
        "strictly inside the disk (sup |inner| = " +
        std::to_string(sup) + ")");
  const auto z = unit_circle(grid_n, fit_radius);
  std::vector<Cx> samples(grid_n);
  for (int j = 0; j < grid_n; ++j)
    samples[j] = outer.eval_unchecked(inner.eval_unchecked(z[j]));
  return fit_disk_series(samples, fit_radius, m);
}

int winding_number(const std::vector<Cx>& curve, Cx p) {
  double total = 0.0;
  const int n = static_cast<int>(curve.size());
  double prev = std::arg(curve[n - 1] - p);
  for (int j = 0; j < n; ++j) {
    const Cx d = curve[j] - p;
    if (std::abs(d) < 1e-13)
      throw InvalidParameter("winding_number: point lies on the curve");
    const double a = std::arg(d);
    double step = a - prev;
    while (step > kPi) step -= kTwoPi;
    while (step < -kPi) step += kTwoPi;
    total += step;
    prev = a;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

std::vector<Cx> boundary_samples(const DiskMap& f, int grid_n, double radius) {
  const auto z = unit_circle(grid_n, radius);
  std::vector<Cx> out(grid_n);
  for (int j = 0; j < grid_n; ++j) out[j] = f.eval_unchecked(z[j]);
  return out;
}

std::vector<Cx> boundary_samples(const ExteriorMap& g, int grid_n,
                                 double radius) {
  const auto w = unit_circle(grid_n, radius);
  std::vector<Cx> out(grid_n);
  for (int j = 0; j < grid_n; ++j) out[j] = g.eval_unchecked(w[j]);
  return out;
}

bool univalence_winding_disk(const DiskMap& f, int grid_n) {
  const auto curve = boundary_samples(f, grid_n, 1.0);
  double minmod = 1e300;
  for (const auto& v : curve) minmod = std::min(minmod, std::abs(v));
  if (minmod < 1e-13) return false;  // boundary passes through f(0) = 0
  return winding_number(curve, Cx(0.0, 0.0)) == 1;
}

bool univalence_winding_exterior(const ExteriorMap& g, int grid_n) {
  const auto curve = boundary_samples(g, grid_n, 1.0);
  // Reference point: centroid of the boundary curve. Adequate for the
  // near-circular boundaries this library works with.
  Cx c(0.0, 0.0);
  for (const auto& v : curve) c += v;
  c /= static_cast<double>(grid_n);
  double minmod = 1e300;
  for (const auto& v : curve) minmod = std::min(minmod, std::abs(v - c));
  if (minmod < 1e-13) return false;
  return winding_number(curve, c) == 1;
}

}  // namespace annulus
