#include "annulus/semigroup.hpp"

#include <algorithm>
#include <cmath>

namespace annulus {

std::string flag_name(AnnulusFlag f) {
  switch (f) {
    case AnnulusFlag::A0: return "A0";
    case AnnulusFlag::A_degenerate: return "A_degenerate";
    case AnnulusFlag::E: return "E";
    case AnnulusFlag::G: return "G";
  }
  return "?";
}

std::string tag_name(NormalizationTag t) {
  switch (t) {
    case NormalizationTag::raw: return "raw";
    case NormalizationTag::a_normalized: return "a_normalized";
    case NormalizationTag::standard: return "standard";
  }
  return "?";
}

std::set<AnnulusFlag> classify(const RiggedAnnulus& x, double delta_touch,
                               int grid_n) {
  if (!univalence_winding_disk(x.f, grid_n))
    throw UnivalenceFailure("classify: disk side fails the winding test");
  if (!univalence_winding_exterior(x.g, grid_n))
    throw UnivalenceFailure("classify: exterior side fails the winding test");

  const int k = std::min(grid_n, 512);
  const auto cf = boundary_samples(x.f, k, 1.0);
  const auto cg = boundary_samples(x.g, k, 1.0);

  // distances from the samples of one curve to the interpolated other curve
  const CurveInterp gf(cf), gg(cg);
  auto directed = [k](const std::vector<Cx>& from, const std::vector<Cx>& to,
                      const CurveInterp& interp, double& dmin, double& dmax) {
    for (int i = 0; i < k; ++i) {
      int best = 0;
      double bd = 1e300;
      for (int j = 0; j < k; ++j) {
        const double d = std::abs(from[i] - to[j]);
        if (d < bd) {
          bd = d;
          best = j;
        }
      }
      const double d = interp.distance(from[i], kTwoPi * best / k);
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
  };
  double min_dist = 1e300, dir_fg = 0.0, dir_gf = 0.0;
  directed(cf, cg, gg, min_dist, dir_fg);
  directed(cg, cf, gf, min_dist, dir_gf);
  const double hausdorff = std::max(dir_fg, dir_gf);

  std::set<AnnulusFlag> flags;
  if (min_dist > delta_touch)
    flags.insert(AnnulusFlag::A0);
  else if (hausdorff > delta_touch)
    flags.insert(AnnulusFlag::A_degenerate);
  else
    flags.insert(AnnulusFlag::G);

  double gdist = std::abs(x.g.lead - 1.0) + std::abs(x.g.c0);
  for (const auto& b : x.g.b) gdist = std::max(gdist, std::abs(b));
  double supf = 0.0;
  for (const auto& v : cf) supf = std::max(supf, std::abs(v));
  if (gdist < 1e-10 && supf <= 1.0 - delta_touch) flags.insert(AnnulusFlag::E);
  return flags;
}

RiggedAnnulus make_annulus(DiskMap f, ExteriorMap g, const RunConfig& cfg) {
  validate_exterior(g);
  RiggedAnnulus x;
  x.f = std::move(f);
  x.g = std::move(g);
  if (std::abs(x.g.lead - 1.0) <= 1e-12)
    x.tag = NormalizationTag::standard;
  else
    x.tag = NormalizationTag::raw;
  x.flags = classify(x, cfg.delta_touch, cfg.grid_n);
  return x;
}

RiggedAnnulus identity_annulus(const RunConfig& cfg) {
  return make_annulus(DiskMap::identity(cfg.trunc_m),
                      ExteriorMap::identity(cfg.trunc_m), cfg);
}

Cx annulus_H(const RiggedAnnulus& x) { return x.g.lead; }

RiggedAnnulus normalize(const RiggedAnnulus& x, Cx a, const RunConfig& cfg) {
  if (!(std::abs(a) > 0.0))
    throw InvalidParameter("normalize: a must be nonzero");
  const Cx lam = a / x.g.lead;
  RiggedAnnulus y;
  y.f = x.f;
  for (auto& c : y.f.a) c *= lam;
  y.g = x.g;
  y.g.lead *= lam;
  y.g.c0 *= lam;
  for (auto& c : y.g.b) c *= lam;
  if (a == Cx(1.0, 0.0)) {
    y.tag = NormalizationTag::standard;
  } else {
    y.tag = NormalizationTag::a_normalized;
    y.tag_a = a;
  }
  y.flags = classify(y, cfg.delta_touch, cfg.grid_n);
  return y;
}

namespace {

// Pointwise Newton inversion of a disk map, walking targets along a circle.
std::vector<Cx> invert_disk_along(const DiskMap& g,
                                  const std::vector<Cx>& targets) {
  const int n = static_cast<int>(targets.size());
  std::vector<Cx> u(n);

  // coarse seed for the first target
  Cx best(0.0, 0.0);
  double bd = std::abs(g.eval_unchecked(best) - targets[0]);
  for (int ir = 1; ir <= 12; ++ir) {
    const double r = 0.95 * ir / 12.0;
    for (int it = 0; it < 64; ++it) {
      const double t = kTwoPi * it / 64.0;
      const Cx z = r * Cx(std::cos(t), std::sin(t));
      const double d = std::abs(g.eval_unchecked(z) - targets[0]);
      if (d < bd) {
        bd = d;
        best = z;
      }
    }
  }

  Cx seed = best;
  for (int j = 0; j < n; ++j) {
    Cx z = seed;
    const double scale = std::max(1.0, std::abs(targets[j]));
    bool done = false;
    for (int it = 0; it < 50; ++it) {
      const Cx r = g.eval_unchecked(z) - targets[j];
      if (std::abs(r) < 1e-12 * scale) {
        done = true;
        break;
      }
      const Cx dp = g.deriv_unchecked(z);
      if (std::abs(dp) < 1e-14)
        throw InversionFailure("disk inversion: derivative vanished");
      z -= r / dp;
      if (std::abs(z) > 1.0) z /= std::abs(z);
    }
    if (!done)
      throw InversionFailure("disk inversion stalled after 50 Newton steps");
    u[j] = z;
    seed = z;
  }
  return u;
}

std::vector<Cx> invert_exterior_along(const ExteriorMap& g,
                                      const std::vector<Cx>& targets) {
  const int n = static_cast<int>(targets.size());
  std::vector<Cx> s(n);
  Cx seed = (targets[0] - g.c0) / g.lead;
  if (std::abs(seed) < 1.0) seed /= std::abs(seed);
  for (int j = 0; j < n; ++j) {
    Cx w = (j == 0) ? seed : s[j - 1];
    // first-order refresh keeps the walk on track across the seam
    {
      const Cx lin = (targets[j] - g.c0) / g.lead;
      if (j == 0 || std::abs(lin - w) > 0.5) w = lin;
      if (std::abs(w) < 1.0) w /= std::abs(w);
    }
    const double scale = std::max(1.0, std::abs(targets[j]));
    bool done = false;
    for (int it = 0; it < 50; ++it) {
      const Cx r = g.eval_unchecked(w) - targets[j];
      if (std::abs(r) < 1e-12 * scale) {
        done = true;
        break;
      }
      const Cx dp = g.deriv_unchecked(w);
      if (std::abs(dp) < 1e-14)
        throw InversionFailure("exterior inversion: derivative vanished");
      w -= r / dp;
      if (std::abs(w) < 1.0) w /= std::abs(w);
    }
    if (!done)
      throw InversionFailure(
          "exterior inversion stalled after 50 Newton steps");
    s[j] = w;
  }
  return s;
}

std::vector<Cx> circle_points(int n, double radius) {
  std::vector<Cx> z(n);
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    z[j] = radius * Cx(std::cos(t), std::sin(t));
  }
  return z;
}

}  // namespace

RiggedAnnulus multiply(const RiggedAnnulus& x, const RiggedAnnulus& y,
                       const RunConfig& cfg) {
  cfg.validate();
  if (std::abs(x.g.lead - 1.0) > 1e-9 || std::abs(y.g.lead - 1.0) > 1e-9)
    throw InvalidParameter(
        "multiply: factors must carry the standard normalization g'(inf) = 1");
  const int n = cfg.grid_n;
  const int m = cfg.trunc_m;

  // complements: exterior of x.f's image curve, interior of y.g's image curve
  JordanCurveSamples curve_fx(boundary_samples(x.f, n, 1.0));
  ExteriorMapResult fe = exterior_map(curve_fx, cfg.riemann());
  JordanCurveSamples curve_gy(boundary_samples(y.g, n, 1.0));
  InteriorMapResult gz = interior_map(curve_gy, cfg.riemann());

  // fe.correspondence is the lift of (phi_1^0)^{-1};
  // gz.correspondence is the lift of phi_2^inf directly. Composed through
  // the spectral interpolant: cubic interpolation error would dominate the
  // welding tolerance.
  const CircleHomeo phi10 = invert_circle_spectral(fe.correspondence);
  const CircleHomeo phi = compose_circle_spectral(phi10, gz.correspondence);

  // The welding pair of phi needs as many modes as the complementary maps
  // themselves; their boundary residuals measure that truncation scale, and
  // the weld residual cannot drop below it at this trunc_m.
  const double trunc_floor =
      20.0 * (fe.boundary_residual + gz.boundary_residual);
  WeldingProblem wp{phi, fe.map.lead, m, n, std::max(cfg.tol, trunc_floor),
                    50, 3};
  WeldResult wr = weld(wp);

  // assemble F o (g_2^0)^{-1} o f_2^0 on |z| = 0.95
  const auto zs = circle_points(n, 0.95);
  std::vector<Cx> targets_f(n);
  for (int j = 0; j < n; ++j) targets_f[j] = y.f.eval_unchecked(zs[j]);
  const auto us = invert_disk_along(gz.map, targets_f);
  std::vector<Cx> new_f_samples(n);
  for (int j = 0; j < n; ++j) new_f_samples[j] = wr.F.eval_unchecked(us[j]);
  DiskFit nf = fit_disk_series(new_f_samples, 0.95, m);

  // assemble G o (f_1^inf)^{-1} o g_1^inf on |w| = 1.05
  const auto ws = circle_points(n, 1.05);
  std::vector<Cx> targets_g(n);
  for (int j = 0; j < n; ++j) targets_g[j] = x.g.eval_unchecked(ws[j]);
  const auto ss = invert_exterior_along(fe.map, targets_g);
  std::vector<Cx> new_g_samples(n);
  for (int j = 0; j < n; ++j) new_g_samples[j] = wr.G.eval_unchecked(ss[j]);
  ExteriorFit ng = fit_exterior_series(new_g_samples, 1.05, m);

  RiggedAnnulus raw;
  raw.f = std::move(nf.map);
  raw.g = std::move(ng.map);
  // absorb truncation drift of g'(inf) back into the standard slice
  return normalize(raw, Cx(1.0, 0.0), cfg);
}

RiggedAnnulus compose_e(const RiggedAnnulus& e1, const RiggedAnnulus& e2,
                        const RunConfig& cfg) {
  cfg.validate();
  const auto f1 = classify(e1, cfg.delta_touch, cfg.grid_n);
  const auto f2 = classify(e2, cfg.delta_touch, cfg.grid_n);
  if (!f1.count(AnnulusFlag::E) || !f2.count(AnnulusFlag::E))
    throw ClassificationError("compose_e: both factors must carry the E flag");
  DiskFit c = compose_into_disk(e1.f, e2.f, cfg.trunc_m, cfg.grid_n, 0.95);
  return make_annulus(std::move(c.map), ExteriorMap::identity(cfg.trunc_m),
                      cfg);
}

CircleHomeo rho(const RiggedAnnulus& x, const RunConfig& cfg) {
  const auto flags = classify(x, cfg.delta_touch, cfg.grid_n);
  if (!flags.count(AnnulusFlag::G))
    throw ClassificationError("rho: annulus is not a welding pair (no G flag)");

  const int n = cfg.grid_n;
  const auto targets = boundary_samples(x.f, n, 1.0);
  const auto gcurve = boundary_samples(x.g, n, 1.0);

  // seed the first inversion from the nearest boundary sample of g
  int best = 0;
  double bd = 1e300;
  for (int j = 0; j < n; ++j) {
    const double d = std::abs(gcurve[j] - targets[0]);
    if (d < bd) {
      bd = d;
      best = j;
    }
  }

  std::vector<double> tau(n);
  double seed = kTwoPi * best / n;
  for (int j = 0; j < n; ++j) {
    double t = (j == 0) ? seed : tau[j - 1];
    bool done = false;
    for (int it = 0; it < 60; ++it) {
      const Cx e(std::cos(t), std::sin(t));
      const Cx r = x.g.eval_unchecked(e) - targets[j];
      const Cx dpar = Cx(0.0, 1.0) * e * x.g.deriv_unchecked(e);
      const double step = (r / dpar).real();
      t -= step;
      if (std::abs(step) < 1e-13) {
        done = true;
        break;
      }
    }
    if (!done)
      throw InversionFailure("rho: boundary inversion stalled");
    tau[j] = t;
  }
  for (int j = 1; j < n; ++j)
    while (tau[j] - tau[j - 1] < -kPi) tau[j] += kTwoPi;
  return CircleHomeo(std::move(tau));
}

RiggedAnnulus from_qs(const CircleHomeo& phi, const RunConfig& cfg) {
  cfg.validate();
  WeldingProblem wp{phi, Cx(1.0, 0.0), cfg.trunc_m, cfg.grid_n, cfg.tol, 50, 3};
  WeldResult wr = weld(wp);
  return make_annulus(std::move(wr.F), std::move(wr.G), cfg);
}

ComplementaryMaps complementary_pair(const RiggedAnnulus& x,
                                     const RunConfig& cfg) {
  const auto flags = classify(x, cfg.delta_touch, cfg.grid_n);
  if (!flags.count(AnnulusFlag::A0))
    throw ClassificationError(
        "complementary_pair: annulus is not strictly non-overlapping");
  return complementary_maps(x.f, x.g, cfg.grid_n, cfg.riemann());
}

}  // namespace annulus
