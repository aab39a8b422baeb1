#include "annulus/circle.hpp"

#include <algorithm>
#include <cmath>

#include "annulus/fft.hpp"

namespace annulus {

namespace {

void normalize_base(std::vector<double>& lift) {
  const double shift = kTwoPi * std::floor(lift[0] / kTwoPi);
  if (shift != 0.0)
    for (auto& v : lift) v -= shift;
}

}  // namespace

CircleHomeo::CircleHomeo(std::vector<double> lift_samples)
    : lift_(std::move(lift_samples)) {
  const int n = static_cast<int>(lift_.size());
  if (n < 8) throw InvalidParameter("circle homeo needs at least 8 samples");
  int increasing = 0, decreasing = 0;
  for (int j = 0; j + 1 < n; ++j) {
    if (lift_[j + 1] > lift_[j])
      ++increasing;
    else
      ++decreasing;
  }
  if (decreasing == n - 1)
    throw OrientationError("lift is decreasing (orientation-reversing input)");
  if (decreasing > 0)
    throw MonotonicityViolation("lift samples are not strictly increasing");
  if (!(lift_[n - 1] < lift_[0] + kTwoPi))
    throw MonotonicityViolation("lift does not wrap with total increase 2*pi");
  normalize_base(lift_);
  interp_ = MonotoneCubicLift(lift_);
}

CircleHomeo CircleHomeo::identity(int n) {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = kTwoPi * j / n;
  return CircleHomeo(std::move(v));
}

CircleHomeo CircleHomeo::rotation(double alpha, int n) {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = kTwoPi * j / n + alpha;
  return CircleHomeo(std::move(v));
}

Cx CircleHomeo::boundary(double theta) const {
  const double p = lift_at(theta);
  return Cx(std::cos(p), std::sin(p));
}

CircleHomeo CircleHomeo::resample(int m) const {
  if (m == n()) return *this;
  std::vector<double> v(m);
  for (int j = 0; j < m; ++j) v[j] = lift_at(kTwoPi * j / m);
  return CircleHomeo(std::move(v));
}

CircleHomeo compose_circle(const CircleHomeo& a, const CircleHomeo& b) {
  if (a.n() != b.n())
    throw InvalidParameter("compose_circle: sample counts differ");
  const int n = a.n();
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = a.lift_at(b.lift()[j]);
  return CircleHomeo(std::move(v));
}

CircleHomeo invert_circle(const CircleHomeo& a) {
  const int n = a.n();
  std::vector<double> v(n);
  const MonotoneCubicLift interp(a.lift());
  for (int j = 0; j < n; ++j) v[j] = interp.solve(kTwoPi * j / n);
  return CircleHomeo(std::move(v));
}

SpectralLift::SpectralLift(const CircleHomeo& h) : cubic_(h.lift()) {
  const int n = h.n();
  std::vector<Cx> p(n);
  for (int j = 0; j < n; ++j)
    p[j] = Cx(h.lift()[j] - kTwoPi * j / n, 0.0);
  coef_ = fourier_coeffs(p);
  coef_[n / 2] = Cx(0.0, 0.0);  // drop the ambiguous Nyquist mode
  double scale = 0.0;
  for (const auto& c : coef_) scale = std::max(scale, std::abs(c));
  kmax_ = 1;
  for (int k = 1; k < n / 2; ++k)
    if (std::abs(coef_[k]) > 1e-15 * scale ||
        std::abs(coef_[n - k]) > 1e-15 * scale)
      kmax_ = k;
}

double SpectralLift::operator()(double theta) const {
  const int n = static_cast<int>(coef_.size());
  const Cx e(std::cos(theta), std::sin(theta));
  Cx acc = coef_[0];
  Cx ep = e;
  for (int k = 1; k <= kmax_; ++k) {
    acc += coef_[k] * ep + coef_[n - k] * std::conj(ep);
    ep *= e;
  }
  return theta + acc.real();
}

double SpectralLift::deriv(double theta) const {
  const int n = static_cast<int>(coef_.size());
  const Cx e(std::cos(theta), std::sin(theta));
  Cx acc(0.0, 0.0);
  Cx ep = e;
  for (int k = 1; k <= kmax_; ++k) {
    const Cx ik(0.0, static_cast<double>(k));
    acc += ik * (coef_[k] * ep - coef_[n - k] * std::conj(ep));
    ep *= e;
  }
  return 1.0 + acc.real();
}

double SpectralLift::solve(double y) const {
  double t = cubic_.solve(y);
  for (int it = 0; it < 8; ++it) {
    const double f = (*this)(t)-y;
    const double fp = deriv(t);
    if (!(fp > 1e-8)) break;
    const double step = f / fp;
    t -= step;
    if (std::abs(step) < 1e-14) break;
  }
  return t;
}

CircleHomeo compose_circle_spectral(const CircleHomeo& a,
                                    const CircleHomeo& b) {
  if (a.n() != b.n())
    throw InvalidParameter("compose_circle_spectral: sample counts differ");
  const SpectralLift sa(a);
  const int n = a.n();
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = sa(b.lift()[j]);
  return CircleHomeo(std::move(v));
}

CircleHomeo invert_circle_spectral(const CircleHomeo& a) {
  const SpectralLift sa(a);
  const int n = a.n();
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = sa.solve(kTwoPi * j / n);
  return CircleHomeo(std::move(v));
}

QsQuotientResult qs_quotient(const CircleHomeo& a, int probe_count) {
  if (probe_count < 1) throw InvalidParameter("qs_quotient: probe_count < 1");
  const double psi0 = a.lift()[0];

  // T(e^{i phi}) = -cot(phi/2) maps the circle to the extended line with
  // T(1) = infinity; the rotated map fixes 1, so the conjugated map fixes
  // infinity and the line quotient applies.
  auto line_map = [&](double x) {
    const double phi = 2.0 * std::atan2(1.0, -x);  // in (0, 2*pi)
    const double u = a.lift_at(phi) - psi0;        // in (0, 2*pi)
    return -std::cos(0.5 * u) / std::sin(0.5 * u);
  };

  const int nx = std::max(4, static_cast<int>(std::ceil(std::sqrt(
                                  static_cast<double>(probe_count)))));
  const int nt = std::max(4, (probe_count + nx - 1) / nx);
  double q = 1.0;
  int skipped = 0;
  for (int i = 0; i < nx; ++i) {
    const double s = kTwoPi * (i + 0.5) / nx;
    const double x = -std::cos(0.5 * s) / std::sin(0.5 * s);
    for (int l = 0; l < nt; ++l) {
      const double e = -3.0 + 6.0 * l / std::max(1, nt - 1);
      const double t = std::pow(10.0, e);
      const double num = line_map(x + t) - line_map(x);
      const double den = line_map(x) - line_map(x - t);
      if (std::abs(den) < 1e-14) {
        ++skipped;
        continue;
      }
      const double r = num / den;
      if (r > q) q = r;
      if (r > 0.0 && 1.0 / r > q) q = 1.0 / r;
    }
  }
  return {q, skipped};
}

CircleHomeo mobius_boundary(Cx c, double alpha, int n) {
  if (!(std::abs(c) < 1.0))
    throw InvalidParameter("mobius_boundary: |c| must be < 1");
  std::vector<double> v(n);
  double prev = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    const Cx z(std::cos(t), std::sin(t));
    const Cx w = (z + c) / (1.0 + std::conj(c) * z);
    double p = alpha + std::arg(w);
    if (j == 0) {
      prev = p;
    } else {
      while (p - prev < -kPi) p += kTwoPi;  // unwrap branch crossings
      prev = p;
    }
    v[j] = p;
  }
  return CircleHomeo(std::move(v));
}

}  // namespace annulus
