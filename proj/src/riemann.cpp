#include "annulus/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "annulus/fft.hpp"

namespace annulus {

namespace {

bool segments_intersect(Cx a, Cx b, Cx c, Cx d) {
  auto cross = [](Cx u, Cx v) { return u.real() * v.imag() - u.imag() * v.real(); };
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

JordanCurveSamples::JordanCurveSamples(std::vector<Cx> pts)
    : points(std::move(pts)) {
  const int n = static_cast<int>(points.size());
  if (n < 16) throw InvalidInput("curve needs at least 16 samples");

  double area = 0.0;
  for (int j = 0; j < n; ++j) {
    const Cx p = points[j], q = points[(j + 1) % n];
    area += p.real() * q.imag() - q.real() * p.imag();
  }
  bounded_side_area = 0.5 * area;
  if (!(bounded_side_area > 0.0))
    throw InvalidInput("curve must be positively oriented");

  // coarse self-intersection screen
  const int k = std::min(n, 128);
  const int stride = n / k;
  for (int i = 0; i < k; ++i) {
    const Cx a = points[i * stride];
    const Cx b = points[((i + 1) % k) * stride];
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;  // adjacent through the seam
      const Cx c = points[j * stride];
      const Cx d = points[((j + 1) % k) * stride];
      if (segments_intersect(a, b, c, d))
        throw InvalidInput("curve self-intersects at sample resolution");
    }
  }

  try {
    contains_zero = (winding_number(points, Cx(0.0, 0.0)) == 1);
  } catch (const InvalidParameter&) {
    contains_zero = false;  // zero lies on the curve
  }
}

namespace {

struct PolarForm {
  bool starlike = false;
  std::vector<double> chi;   // unwrapped sample arguments, strictly increasing
  std::vector<double> logr;  // log |p_i|
  CyclicSpline logr_of_chi;  // periodic
  CyclicSpline s_of_chi;     // lift mode: curve parameter as function of angle
};

PolarForm polar_form(const std::vector<Cx>& pts) {
  const int n = static_cast<int>(pts.size());
  PolarForm pf;
  pf.chi.resize(n);
  pf.logr.resize(n);
  double prev = 0.0;
  bool monotone = true;
  for (int j = 0; j < n; ++j) {
    const double r = std::abs(pts[j]);
    pf.logr[j] = std::log(r);
    double a = std::arg(pts[j]);
    if (j == 0) {
      prev = a;
    } else {
      while (a - prev < -kPi) a += kTwoPi;
      while (a - prev > kPi) a -= kTwoPi;
      if (a <= prev) monotone = false;
      prev = a;
    }
    pf.chi[j] = a;
  }
  if (monotone && pf.chi[n - 1] - pf.chi[0] < kTwoPi) {
    pf.starlike = true;
    std::vector<double> s(n);
    for (int j = 0; j < n; ++j) s[j] = kTwoPi * j / n;
    pf.logr_of_chi = CyclicSpline(pf.chi, pf.logr);
    pf.s_of_chi = CyclicSpline(pf.chi, s, /*lift_mode=*/true);
  }
  return pf;
}

void check_region(const std::vector<Cx>& pts, double ratio_cap) {
  double lo = 1e300, hi = 0.0;
  for (const auto& p : pts) {
    const double r = std::abs(p);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  if (lo <= 0.0 || hi / lo > ratio_cap)
    throw InvalidParameter(
        "curve outside the solver validity region (radial ratio " +
        std::to_string(hi / lo) + " about 0 exceeds " +
        std::to_string(ratio_cap) + ")");
}

// Theodorsen conjugation iteration. Returns converged image angles chi(theta)
// at the uniform grid, or nullopt-like failure via the bool.
struct TheodorsenOut {
  bool ok = false;
  std::vector<double> chi;
  int iterations = 0;
};

TheodorsenOut theodorsen(const PolarForm& pf, int n, bool interior,
                         const RiemannConfig& cfg) {
  TheodorsenOut out;
  std::vector<double> chi(n), u(n);
  for (int j = 0; j < n; ++j) chi[j] = kTwoPi * j / n;
  double relax = 1.0, prev_delta = 1e300, best_delta = 1e300;
  for (int it = 0; it < cfg.max_iter; ++it) {
    out.iterations = it + 1;
    for (int j = 0; j < n; ++j) u[j] = pf.logr_of_chi(chi[j]);
    const std::vector<double> v =
        interior ? conjugate_interior(u) : conjugate_exterior(u);
    double delta = 0.0;
    for (int j = 0; j < n; ++j) {
      const double target = kTwoPi * j / n + v[j];
      delta = std::max(delta, std::abs(target - chi[j]));
      chi[j] += relax * (target - chi[j]);
    }
    best_delta = std::min(best_delta, delta);
    if (delta < cfg.correspondence_tol) {
      out.ok = true;
      break;
    }
    if (delta > prev_delta) relax = std::max(0.05, 0.5 * relax);
    prev_delta = delta;
  }
  // marginally contractive geometries stall; accept once the update is far
  // below the boundary-residual scale (the fit reports the truth regardless)
  if (!out.ok && best_delta < 1e-10) out.ok = true;
  out.chi = std::move(chi);
  return out;
}

// Gauss-Newton on the boundary correspondence system: find curve parameters
// s(theta_j) whose samples extend holomorphically to the required side.
// Jacobian applications run through the FFT, the normal equations are solved
// with conjugate gradients under Levenberg-Marquardt damping, and a homotopy
// from the centered circle globalizes the iteration (each stage is a mild
// deformation solved from a warm start).
struct FallbackOut {
  bool ok = false;
  std::vector<double> s;
  int iterations = 0;
};

struct StageResult {
  bool ok = false;
  double rn = 0.0;
  int iterations = 0;
};

// Sup of the input curve's own spectrum near the Nyquist band: the aliasing
// floor that no choice of correspondence can beat at this resolution.
double alias_floor(const std::vector<Cx>& points) {
  const int n = static_cast<int>(points.size());
  const std::vector<Cx> c = fourier_coeffs(points);
  double sup = 0.0;
  for (int k = 0; k < n; ++k) {
    const int signed_k = (2 * k <= n) ? k : k - n;
    if (std::abs(signed_k) >= n / 4) sup = std::max(sup, std::abs(c[k]));
  }
  return sup;
}

// Euclidean projection of a lift onto {strictly increasing, total 2*pi}:
// increments are clamped from below and recentered so they keep their sum.
// Applied after each accepted Gauss-Newton step, which makes folded
// correspondences unreachable.
void monotone_project(std::vector<double>& s) {
  const int n = static_cast<int>(s.size());
  const double eps = 1e-7 * kTwoPi / n;
  std::vector<double> d(n);
  for (int j = 0; j + 1 < n; ++j) d[j] = s[j + 1] - s[j];
  d[n - 1] = s[0] + kTwoPi - s[n - 1];
  double lo = -kTwoPi, hi = kTwoPi;
  for (int it = 0; it < 60; ++it) {
    const double lam = 0.5 * (lo + hi);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += std::max(eps, d[j] + lam);
    if (sum > kTwoPi)
      hi = lam;
    else
      lo = lam;
  }
  const double lam = 0.5 * (lo + hi);
  double acc = s[0];
  for (int j = 1; j < n; ++j) {
    acc += std::max(eps, d[j - 1] + lam);
    s[j] = acc;
  }
}

StageResult gn_stage(const CurveInterp& curve, std::vector<double>& s, int n,
                     bool interior, const RiemannConfig& cfg, double scale,
                     double floor, int outer_budget, double stage_tol) {
  StageResult out;
  const int half = n / 2;

  auto disallowed = [&](int k_fft) {
    if (interior) return k_fft == 0 || k_fft >= half;
    return k_fft >= 2 && k_fft <= half;
  };

  auto residual = [&](const std::vector<double>& sv, std::vector<Cx>& freq) {
    std::vector<Cx> y(n);
    for (int j = 0; j < n; ++j) y[j] = curve.at(sv[j]);
    freq = fourier_coeffs(y);
    double n2 = 0.0;
    for (int k = 0; k < n; ++k)
      if (disallowed(k)) n2 += std::norm(freq[k]);
    n2 += freq[1].imag() * freq[1].imag();
    return std::sqrt(n2);
  };
  // The aliasing part of the residual cannot be driven down by moving
  // sample points; it is bounded by the input curve's own spectral floor,
  // and anything above that bound is genuine solver error.
  auto converged = [&](const std::vector<Cx>& freq, double rn) {
    if (rn < stage_tol * scale) return true;
    double sup = 0.0;
    for (int k = 0; k < n; ++k)
      if (disallowed(k)) sup = std::max(sup, std::abs(freq[k]));
    return sup <= std::max(stage_tol * scale, 10.0 * floor) &&
           std::abs(freq[1].imag()) <=
               std::max(stage_tol * scale, 10.0 * floor);
  };

  std::vector<Cx> freq;
  double rn = residual(s, freq);
  for (int outer = 0; outer < outer_budget; ++outer) {
    out.iterations = outer + 1;
    if (converged(freq, rn)) {
      out.ok = true;
      break;
    }
    std::vector<Cx> gp(n);
    for (int j = 0; j < n; ++j) gp[j] = curve.tangent(s[j]);

    // J delta: disallowed Fourier bins of gp .* delta, plus Im of bin 1.
    auto applyJ = [&](const std::vector<double>& d, std::vector<Cx>& fout,
                      double& im1) {
      std::vector<Cx> tmp(n);
      for (int j = 0; j < n; ++j) tmp[j] = gp[j] * d[j];
      fout = fourier_coeffs(tmp);
      im1 = fout[1].imag();
      for (int k = 0; k < n; ++k)
        if (!disallowed(k)) fout[k] = Cx(0.0, 0.0);
    };
    auto applyJT = [&](const std::vector<Cx>& rf, double rim1) {
      std::vector<Cx> full(n, Cx(0.0, 0.0));
      for (int k = 0; k < n; ++k)
        if (disallowed(k)) full[k] = rf[k];
      full[1] += Cx(0.0, rim1);
      const std::vector<Cx> e = fourier_synthesis(full);
      std::vector<double> g(n);
      for (int j = 0; j < n; ++j)
        g[j] = (gp[j] * std::conj(e[j])).real() / n;
      return g;
    };

    std::vector<Cx> r0(n, Cx(0.0, 0.0));
    for (int k = 0; k < n; ++k)
      if (disallowed(k)) r0[k] = freq[k];
    const std::vector<double> rhs = [&] {
      std::vector<double> g = applyJT(r0, freq[1].imag());
      for (auto& v : g) v = -v;
      return g;
    }();
    double gp2 = 0.0;
    for (int j = 0; j < n; ++j) gp2 = std::max(gp2, std::norm(gp[j]));

    auto cg_solve = [&](double mu) {
      std::vector<double> d(n, 0.0), g = rhs, p = g;
      double gg = std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
      const double gg0 = gg;
      for (int cg = 0; cg < cfg.fallback_cg && gg > 1e-28 * (1.0 + gg0);
           ++cg) {
        std::vector<Cx> jf;
        double jim;
        applyJ(p, jf, jim);
        std::vector<double> jtj = applyJT(jf, jim);
        for (int j = 0; j < n; ++j) jtj[j] += mu * p[j];
        const double pAp =
            std::inner_product(p.begin(), p.end(), jtj.begin(), 0.0);
        if (!(pAp > 0.0)) break;
        const double alpha = gg / pAp;
        for (int j = 0; j < n; ++j) {
          d[j] += alpha * p[j];
          g[j] -= alpha * jtj[j];
        }
        const double gg_new =
            std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
        const double beta = gg_new / gg;
        gg = gg_new;
        for (int j = 0; j < n; ++j) p[j] = g[j] + beta * p[j];
      }
      return d;
    };

    bool accepted = false;
    double mu = 0.0;
    for (int trial = 0; trial < 12 && !accepted; ++trial) {
      const std::vector<double> d = cg_solve(mu);
      for (double lam = 1.0; lam > 1.0 / 64.0; lam *= 0.5) {
        std::vector<double> st(n);
        for (int j = 0; j < n; ++j) st[j] = s[j] + lam * d[j];
        monotone_project(st);
        std::vector<Cx> ft;
        const double rt = residual(st, ft);
        if (rt < rn) {
          s = std::move(st);
          freq = std::move(ft);
          rn = rt;
          accepted = true;
          break;
        }
      }
      if (!accepted) mu = (mu == 0.0) ? 1e-6 * gp2 / n : 16.0 * mu;
    }
    if (!accepted) break;
  }
  if (!out.ok) out.ok = converged(freq, rn);
  out.rn = rn;
  return out;
}

FallbackOut correspondence_newton(const std::vector<Cx>& points,
                                  std::vector<double> s, int n, bool interior,
                                  const RiemannConfig& cfg, double scale) {
  FallbackOut out;

  // Homotopy by spectral damping: modes k != 0, +-1 of the curve are scaled
  // by exp(-sigma (1-tau) (|k|-1)), deforming a near-ellipse smoothly into
  // the target shape. Pointwise blends with a circle pinch for concave
  // shapes; frequency damping does not.
  const std::vector<Cx> modes = fourier_coeffs(points);
  const double sigma = 2.0;
  auto blended = [&](double tau) {
    std::vector<Cx> c = modes;
    for (int k = 0; k < n; ++k) {
      const int signed_k = (2 * k <= n) ? k : k - n;
      const int a = std::abs(signed_k);
      if (a >= 2) c[k] *= std::exp(-sigma * (1.0 - tau) * (a - 1));
    }
    return fourier_synthesis(c);
  };

  double tau_done = 0.0, step = 1.0;
  bool first_attempt = true;
  while (true) {
    const double tau = std::min(1.0, tau_done + step);
    const std::vector<Cx> q = blended(tau);
    const CurveInterp c_tau(q);
    std::vector<double> trial = s;
    const double stage_tol = (tau >= 1.0) ? 1e-9 : 1e-6;
    const StageResult st = gn_stage(c_tau, trial, n, interior, cfg, scale,
                                    alias_floor(q), 60, stage_tol);
    out.iterations += st.iterations;
    if (st.ok) {
      s = std::move(trial);
      tau_done = tau;
      if (tau >= 1.0) {
        out.ok = true;
        break;
      }
      step = std::min(1.0 - tau_done, 2.0 * step);
    } else {
      if (first_attempt) {
        // the provided warm start did not pan out; restart the continuation
        // from the identity correspondence, which is exact on the circle
        for (int j = 0; j < n; ++j) s[j] = kTwoPi * j / n;
      }
      step *= 0.5;
      if (step < 1.0 / 64.0 || out.iterations > cfg.fallback_outer * 8) break;
    }
    first_attempt = false;
  }
  out.s = std::move(s);
  return out;
}

struct SolveOut {
  std::vector<Cx> samples;   // boundary values of the conformal map at theta_j
  std::vector<double> corr;  // curve parameter lift s(theta_j)
  int iterations = 0;
  bool used_fallback = false;
};

SolveOut solve_correspondence(const JordanCurveSamples& curve, bool interior,
                              const RiemannConfig& cfg) {
  const int n = static_cast<int>(curve.points.size());
  if (!is_power_of_two(n))
    throw InvalidParameter("curve sample count must be a power of two");
  check_region(curve.points, cfg.region_ratio);

  const PolarForm pf = polar_form(curve.points);
  SolveOut out;
  double scale = 0.0;
  for (const auto& p : curve.points) scale = std::max(scale, std::abs(p));

  TheodorsenOut th;
  if (pf.starlike) {
    th = theodorsen(pf, n, interior, cfg);
    out.iterations = th.iterations;
    if (th.ok) {
      out.samples.resize(n);
      out.corr.resize(n);
      for (int j = 0; j < n; ++j) {
        const double chi = th.chi[j];
        const double rho = std::exp(pf.logr_of_chi(chi));
        out.samples[j] = rho * Cx(std::cos(chi), std::sin(chi));
        out.corr[j] = pf.s_of_chi(chi);
      }
      return out;
    }
  }

  if (!interior) {
    // Exterior fallback by inversion: 1/g(1/z) is the interior map of the
    // inverted, reversed curve. The exterior analyticity test alone has an
    // aliasing blind spot (deeply aliased positive frequencies masquerade as
    // legitimate tail modes), so the reduction to the interior problem is
    // the trustworthy route.
    std::vector<Cx> inv(n);
    for (int j = 0; j < n; ++j) {
      const Cx p = curve.points[(n - j) % n];
      if (std::abs(p) < 1e-12)
        throw NotStarlikeFallbackFailed(
            "exterior map: curve passes through 0, inversion unavailable");
      inv[j] = 1.0 / p;
    }
    SolveOut si = solve_correspondence(JordanCurveSamples(std::move(inv)),
                                       /*interior=*/true, cfg);
    out.used_fallback = true;
    out.iterations += si.iterations;
    out.samples.resize(n);
    out.corr.resize(n);
    out.samples[0] = 1.0 / si.samples[0];
    out.corr[0] = -si.corr[0];
    for (int j = 1; j < n; ++j) {
      out.samples[j] = 1.0 / si.samples[n - j];
      out.corr[j] = kTwoPi - si.corr[n - j];
    }
    return out;
  }

  // interior fallback: homotopy Gauss-Newton, warm-started from whatever
  // the conjugation iteration reached when the curve was starlike
  std::vector<double> s0(n);
  if (pf.starlike && !th.chi.empty()) {
    for (int j = 0; j < n; ++j) s0[j] = pf.s_of_chi(th.chi[j]);
  } else {
    for (int j = 0; j < n; ++j) s0[j] = kTwoPi * j / n;
  }
  const FallbackOut fb =
      correspondence_newton(curve.points, std::move(s0), n, interior, cfg,
                            scale);
  out.used_fallback = true;
  out.iterations += fb.iterations;
  if (!fb.ok)
    throw NotStarlikeFallbackFailed(
        interior ? "interior map: Theodorsen and Newton fallback both failed"
                 : "exterior map: Theodorsen and Newton fallback both failed");
  out.samples.resize(n);
  out.corr = fb.s;
  const CurveInterp gamma(curve.points);
  for (int j = 0; j < n; ++j) out.samples[j] = gamma.at(fb.s[j]);
  return out;
}

CircleHomeo correspondence_homeo(const std::vector<double>& corr,
                                 bool interior) {
  try {
    return CircleHomeo(corr);
  } catch (const Error&) {
    throw NotStarlikeFallbackFailed(
        interior ? "interior map: correspondence is not a monotone lift"
                 : "exterior map: correspondence is not a monotone lift");
  }
}

double residual_to_curve(const JordanCurveSamples& curve,
                         const std::vector<Cx>& mapped,
                         const std::vector<double>& corr) {
  const CurveInterp gamma(curve.points);
  double r = 0.0;
  for (size_t j = 0; j < mapped.size(); ++j)
    r = std::max(r, gamma.distance(mapped[j], corr[j]));
  return r;
}

}  // namespace

InteriorMapResult interior_map(const JordanCurveSamples& curve,
                               const RiemannConfig& cfg) {
  if (!curve.contains_zero)
    throw InvalidParameter("interior_map: curve must wind once around 0");
  SolveOut so = solve_correspondence(curve, /*interior=*/true, cfg);
  DiskFit fit = fit_disk_series(so.samples, 1.0, cfg.trunc_m);
  CircleHomeo corr = correspondence_homeo(so.corr, true);
  const auto mapped = boundary_samples(fit.map, static_cast<int>(so.samples.size()));
  const double br = residual_to_curve(curve, mapped, so.corr);
  return {std::move(fit.map), std::move(corr), br, so.iterations,
          so.used_fallback};
}

ExteriorMapResult exterior_map(const JordanCurveSamples& curve,
                               const RiemannConfig& cfg) {
  // The normalization only involves infinity, so solve about the curve
  // centroid and translate back; this keeps the polar machinery usable for
  // curves that sit far from (or do not enclose) the origin.
  const int n = static_cast<int>(curve.points.size());
  Cx z0(0.0, 0.0);
  for (const auto& p : curve.points) z0 += p;
  z0 /= static_cast<double>(n);
  std::vector<Cx> shifted(n);
  for (int j = 0; j < n; ++j) shifted[j] = curve.points[j] - z0;

  SolveOut so =
      solve_correspondence(JordanCurveSamples(std::move(shifted)),
                           /*interior=*/false, cfg);
  ExteriorFit fit = fit_exterior_series(so.samples, 1.0, cfg.trunc_m);
  fit.map.c0 += z0;
  CircleHomeo corr = correspondence_homeo(so.corr, false);
  const auto mapped =
      boundary_samples(fit.map, static_cast<int>(so.samples.size()));
  const double br = residual_to_curve(curve, mapped, so.corr);
  return {std::move(fit.map), std::move(corr), br, so.iterations,
          so.used_fallback};
}

ComplementaryMaps complementary_maps(const DiskMap& f, const ExteriorMap& g,
                                     int grid_n, const RiemannConfig& cfg) {
  JordanCurveSamples curve_f(boundary_samples(f, grid_n, 1.0));
  JordanCurveSamples curve_g(boundary_samples(g, grid_n, 1.0));
  return {exterior_map(curve_f, cfg), interior_map(curve_g, cfg)};
}

}  // namespace annulus
