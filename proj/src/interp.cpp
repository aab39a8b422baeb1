#include "annulus/interp.hpp"

#include <algorithm>
#include <cmath>

namespace annulus {

MonotoneCubicLift::MonotoneCubicLift(const std::vector<double>& values)
    : v_(values) {
  const int n = static_cast<int>(v_.size());
  if (n < 4) throw InvalidParameter("lift interpolant needs at least 4 samples");
  h_ = kTwoPi / n;

  std::vector<double> d(n);  // secants, wrap d[n-1] uses v_[0] + 2*pi
  for (int j = 0; j < n; ++j) {
    const double next = (j + 1 < n) ? v_[j + 1] : v_[0] + kTwoPi;
    d[j] = (next - v_[j]) / h_;
    if (!(d[j] > 0.0))
      throw MonotonicityViolation("lift samples are not strictly increasing");
  }

  m_.resize(n);
  for (int j = 0; j < n; ++j) {
    const double dm = d[(j + n - 1) % n];
    m_[j] = 0.5 * (dm + d[j]);
  }
  // Fritsch-Carlson limiting keeps each cubic piece monotone.
  for (int j = 0; j < n; ++j) {
    const int jp = (j + 1) % n;
    const double alpha = m_[j] / d[j];
    const double beta = m_[jp] / d[j];
    const double s2 = alpha * alpha + beta * beta;
    if (s2 > 9.0) {
      const double tau = 3.0 / std::sqrt(s2);
      m_[j] = tau * alpha * d[j];
      m_[jp] = tau * beta * d[j];
    }
  }
}

double MonotoneCubicLift::operator()(double theta) const {
  const int n = static_cast<int>(v_.size());
  const double k = std::floor(theta / kTwoPi);
  double t = theta - kTwoPi * k;
  if (t >= kTwoPi) t = 0.0;  // guard against rounding at the seam
  int j = static_cast<int>(t / h_);
  if (j >= n) j = n - 1;
  const double u = (t - j * h_) / h_;
  const double vj = v_[j];
  const double vj1 = (j + 1 < n) ? v_[j + 1] : v_[0] + kTwoPi;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1;
  const double h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2;
  const double h11 = u3 - u2;
  const double mj = m_[j];
  const double mj1 = m_[(j + 1) % n];
  return h00 * vj + h10 * h_ * mj + h01 * vj1 + h11 * h_ * mj1 + kTwoPi * k;
}

double MonotoneCubicLift::solve(double y) const {
  const int n = static_cast<int>(v_.size());
  const double k = std::floor((y - v_[0]) / kTwoPi);
  const double yr = y - kTwoPi * k;  // in [v_[0], v_[0] + 2*pi)
  // locate the sample interval containing yr
  int lo = 0, hi = n;  // interval index in [0, n)
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (v_[mid] <= yr)
      lo = mid;
    else
      hi = mid;
  }
  double a = lo * h_, b = (lo + 1) * h_;
  // safeguarded Newton within [a, b]
  double t = 0.5 * (a + b);
  for (int it = 0; it < 100; ++it) {
    const double f = (*this)(t)-yr;
    if (f > 0.0)
      b = t;
    else
      a = t;
    // derivative by finite bracketing step of the cubic: use analytic form
    const double eps = 1e-9;
    const double fp = ((*this)(t + eps) - (*this)(t - eps)) / (2 * eps);
    double tn = t - f / fp;
    if (!(tn > a && tn < b)) tn = 0.5 * (a + b);
    if (std::abs(tn - t) < 1e-15) {
      t = tn;
      break;
    }
    t = tn;
  }
  return t + kTwoPi * k;
}

CyclicSpline::CyclicSpline(std::vector<double> knots,
                           std::vector<double> values, bool lift_mode)
    : x_(std::move(knots)), y_(std::move(values)), lift_(lift_mode) {
  const int n = static_cast<int>(x_.size());
  if (n < 3) throw InvalidParameter("cyclic spline needs at least 3 knots");
  if (y_.size() != x_.size())
    throw InvalidParameter("cyclic spline: knot/value size mismatch");
  x0_ = x_[0];
  for (int i = 0; i + 1 < n; ++i)
    if (!(x_[i + 1] > x_[i]))
      throw InvalidParameter("cyclic spline: knots must be increasing");
  if (!(x_[n - 1] - x_[0] < kTwoPi))
    throw InvalidParameter("cyclic spline: knots exceed one period");
  if (lift_)
    for (int i = 0; i < n; ++i) y_[i] -= x_[i];

  // Second-derivative formulation with cyclic closure.
  std::vector<double> h(n);
  for (int i = 0; i < n; ++i) {
    const double xn = (i + 1 < n) ? x_[i + 1] : x_[0] + kTwoPi;
    h[i] = xn - x_[i];
  }
  auto yv = [&](int i) { return y_[(i % n + n) % n]; };
  std::vector<double> sub(n), dia(n), sup(n), rhs(n);
  for (int i = 0; i < n; ++i) {
    const double hm = h[(i + n - 1) % n];
    sub[i] = hm / 6.0;
    dia[i] = (hm + h[i]) / 3.0;
    sup[i] = h[i] / 6.0;
    rhs[i] = (yv(i + 1) - yv(i)) / h[i] - (yv(i) - yv(i - 1)) / hm;
  }

  // Sherman-Morrison for the cyclic corners.
  auto thomas = [&](const std::vector<double>& b, std::vector<double> d) {
    std::vector<double> c(sup), dd(b), out(n);
    for (int i = 1; i < n; ++i) {
      const double w = sub[i] / dd[i - 1];
      dd[i] -= w * c[i - 1];
      d[i] -= w * d[i - 1];
    }
    out[n - 1] = d[n - 1] / dd[n - 1];
    for (int i = n - 2; i >= 0; --i)
      out[i] = (d[i] - c[i] * out[i + 1]) / dd[i];
    return out;
  };

  const double gamma = -dia[0];
  std::vector<double> b(dia);
  b[0] = dia[0] - gamma;
  b[n - 1] = dia[n - 1] - sup[n - 1] * sub[0] / gamma;
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = sup[n - 1];
  const std::vector<double> z = thomas(b, rhs);
  const std::vector<double> q = thomas(b, u);
  const double vz = z[0] + (sub[0] / gamma) * z[n - 1];
  const double vq = q[0] + (sub[0] / gamma) * q[n - 1];
  const double fac = vz / (1.0 + vq);
  ypp_.resize(n);
  for (int i = 0; i < n; ++i) ypp_[i] = z[i] - fac * q[i];
}

int CyclicSpline::locate(double& x) const {
  const int n = static_cast<int>(x_.size());
  const double k = std::floor((x - x0_) / kTwoPi);
  double xr = x - kTwoPi * k;
  if (xr >= x0_ + kTwoPi) xr = x0_;
  int lo = 0, hi = n;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (x_[mid] <= xr)
      lo = mid;
    else
      hi = mid;
  }
  x = xr;
  return lo;
}

double CyclicSpline::operator()(double x) const {
  const int n = static_cast<int>(x_.size());
  const double xin = x;
  double xr = x;
  const int i = locate(xr);
  const double xi = x_[i];
  const double xn = (i + 1 < n) ? x_[i + 1] : x_[0] + kTwoPi;
  const double yn = (i + 1 < n) ? y_[i + 1] : y_[0];
  const double h = xn - xi;
  const double A = (xn - xr) / h, B = (xr - xi) / h;
  const double Mi = ypp_[i], Mn = ypp_[(i + 1) % n];
  double val = A * y_[i] + B * yn +
               ((A * A * A - A) * Mi + (B * B * B - B) * Mn) * h * h / 6.0;
  if (lift_) val += xin;
  return val;
}

double CyclicSpline::deriv(double x) const {
  const int n = static_cast<int>(x_.size());
  double xr = x;
  const int i = locate(xr);
  const double xi = x_[i];
  const double xn = (i + 1 < n) ? x_[i + 1] : x_[0] + kTwoPi;
  const double yn = (i + 1 < n) ? y_[i + 1] : y_[0];
  const double h = xn - xi;
  const double A = (xn - xr) / h, B = (xr - xi) / h;
  const double Mi = ypp_[i], Mn = ypp_[(i + 1) % n];
  double val = (yn - y_[i]) / h +
               ((3 * B * B - 1) * Mn - (3 * A * A - 1) * Mi) * h / 6.0;
  if (lift_) val += 1.0;
  return val;
}

CurveInterp::CurveInterp(const std::vector<Cx>& points)
    : n_(static_cast<int>(points.size())) {
  if (n_ < 8) throw InvalidParameter("curve needs at least 8 samples");
  std::vector<double> s(n_), re(n_), im(n_);
  for (int j = 0; j < n_; ++j) {
    s[j] = kTwoPi * j / n_;
    re[j] = points[j].real();
    im[j] = points[j].imag();
  }
  re_ = CyclicSpline(s, re);
  im_ = CyclicSpline(std::move(s), std::move(im));
}

Cx CurveInterp::at(double s) const { return Cx(re_(s), im_(s)); }

Cx CurveInterp::tangent(double s) const {
  return Cx(re_.deriv(s), im_.deriv(s));
}

double CurveInterp::nearest(Cx q, double seed) const {
  const double h = kTwoPi / n_;
  double s = seed;
  bool converged = false;
  for (int it = 0; it < 40; ++it) {
    const Cx g = at(s) - q;
    const Cx t = tangent(s);
    const double phi = g.real() * t.real() + g.imag() * t.imag();
    const double eps = 1e-7;
    const Cx tp = (tangent(s + eps) - tangent(s - eps)) / (2 * eps);
    double phip = std::norm(t) + g.real() * tp.real() + g.imag() * tp.imag();
    if (std::abs(phip) < 1e-14) break;
    double step = -phi / phip;
    step = std::clamp(step, -h, h);
    s += step;
    if (std::abs(step) < 1e-13) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    // local scan fallback
    double best = s, bd = std::abs(at(s) - q);
    for (int j = -32; j <= 32; ++j) {
      const double sc = seed + j * h / 16.0;
      const double d = std::abs(at(sc) - q);
      if (d < bd) {
        bd = d;
        best = sc;
      }
    }
    s = best;
  }
  return s;
}

double CurveInterp::distance(Cx q, double seed) const {
  return std::abs(at(nearest(q, seed)) - q);
}

}  // namespace annulus
