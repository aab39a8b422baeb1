#pragma once

#include <functional>
#include <vector>

#include "annulus/config.hpp"
#include "annulus/semigroup.hpp"
#include "annulus/series.hpp"
#include "annulus/types.hpp"

namespace annulus {

// Plain truncated Taylor series with constant term, c[k] multiplies z^k.
struct TaylorSeries {
  std::vector<Cx> c;

  int size() const { return static_cast<int>(c.size()); }
  Cx eval(Cx z) const;
  static TaylorSeries zero(int len) { return {std::vector<Cx>(len, Cx{})}; }
  static TaylorSeries constant(Cx v, int len) {
    TaylorSeries s = zero(len);
    if (len > 0) s.c[0] = v;
    return s;
  }
};

// f''/f' of a truncated disk map, by exact coefficient-domain division.
// The result is exact through degree order-2 for polynomial input (the
// window where truncation of f cannot alter it); the sup of the mismatch
// between f'' and (result)*f' beyond that window is reported through
// residual_out when given. Throws DerivativeVanishes when f' comes within
// 1e-10 of zero on the fit circle.
TaylorSeries pre_schwarzian(const DiskMap& f, double* residual_out = nullptr);

struct ChiPoint {
  TaylorSeries u;  // pre-Schwarzian series
  Cx q;            // f'(0)
};

ChiPoint chi(const DiskMap& f);

// Inverse chart: f(z) = q * int_0^z exp(int_0^xi u(w) dw) dxi by termwise
// series integration (exact for truncated u). f(0) = 0 and f'(0) = q hold
// structurally; the result may be non-univalent, which the winding screen
// detects downstream rather than this routine.
DiskMap chi_inverse(const TaylorSeries& u, Cx q, int m);

// Refined sampled supremum of (1 - |z|^2)|v(z)| over the disk; a lower bound
// on the true norm. The radial grid is log-spaced toward |z| = 1 and the
// whole grid is refined until the relative change drops below 1e-4.
double norm_1inf(const std::function<Cx(Cx)>& v, int radial_samples = 48);
double norm_1inf(const TaylorSeries& v, int radial_samples = 48);

struct ChartPoint {
  TaylorSeries u0;   // pre-Schwarzian of f
  Cx q0{1.0, 0.0};   // f'(0)
  TaylorSeries uinf; // pre-Schwarzian of S(g)
  Cx qinf{1.0, 0.0}; // g'(inf)
};

// Global chart (u0, q0, uinf, qinf) of a rigged annulus. For pairs whose
// exterior side is exactly the identity the last two components are exactly
// (0, 1).
ChartPoint big_chart(const RiggedAnnulus& x, const RunConfig& cfg = {});

std::vector<Cx> flatten(const ChartPoint& p);

// Cauchy-Riemann residual of multiplication in chart coordinates: perturb
// x's disk side along t -> chi_inverse(u + t v, q), form the two centered
// difference quotients along the real and imaginary t-axes of
// t -> big_chart(multiply(x(t), y)) at step h, and return the sup-norm of
// their difference. O(h^2) behaviour evidences complex-differentiability.
double holo_probe(const RiggedAnnulus& x, const RiggedAnnulus& y,
                  const TaylorSeries& v, double h, const RunConfig& cfg = {});

// Defaults: direction = constant series 1, step h = 1e-3.
double holo_probe(const RiggedAnnulus& x, const RiggedAnnulus& y,
                  const RunConfig& cfg = {});

}  // namespace annulus
