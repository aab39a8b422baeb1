#include "annulus/fft.hpp"

#include <cmath>

namespace annulus {

namespace {

void fft_core(std::vector<Cx>& x, bool inverse) {
  const size_t n = x.size();
  if (n == 0) return;
  if (!is_power_of_two(static_cast<int>(n)))
    throw InvalidParameter("fft: length must be a power of two");

  // bit reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
    const Cx wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      Cx w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        Cx u = x[i + j];
        Cx v = x[i + j + len / 2] * w;
        x[i + j] = u + v;
        x[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }

  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& v : x) v *= inv;
  }
}

}  // namespace

void fft(std::vector<Cx>& x) { fft_core(x, false); }
void ifft(std::vector<Cx>& x) { fft_core(x, true); }

std::vector<Cx> fourier_coeffs(const std::vector<Cx>& samples) {
  std::vector<Cx> c = samples;
  fft(c);
  const double inv = 1.0 / static_cast<double>(c.size());
  for (auto& v : c) v *= inv;
  return c;
}

std::vector<Cx> fourier_synthesis(const std::vector<Cx>& coeffs) {
  std::vector<Cx> x = coeffs;
  const double n = static_cast<double>(x.size());
  for (auto& v : x) v *= n;
  ifft(x);
  return x;
}

namespace {

std::vector<double> conjugate_impl(const std::vector<double>& u, double sign) {
  const size_t n = u.size();
  std::vector<Cx> c(n);
  for (size_t j = 0; j < n; ++j) c[j] = Cx(u[j], 0.0);
  fft(c);
  // multiply by sign * i * sgn(k); drop mean and Nyquist
  c[0] = Cx(0.0, 0.0);
  for (size_t k = 1; k < n; ++k) {
    double s;
    if (2 * k < n)
      s = 1.0;
    else if (2 * k == n)
      s = 0.0;
    else
      s = -1.0;
    c[k] *= Cx(0.0, sign * s);
  }
  ifft(c);
  std::vector<double> v(n);
  for (size_t j = 0; j < n; ++j) v[j] = c[j].real();
  return v;
}

}  // namespace

std::vector<double> conjugate_interior(const std::vector<double>& u) {
  return conjugate_impl(u, -1.0);
}

std::vector<double> conjugate_exterior(const std::vector<double>& u) {
  return conjugate_impl(u, 1.0);
}

}  // namespace annulus
