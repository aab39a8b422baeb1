#pragma once

#include <vector>

#include "annulus/circle.hpp"
#include "annulus/interp.hpp"
#include "annulus/series.hpp"
#include "annulus/types.hpp"

namespace annulus {

// Positively oriented Jordan curve given by samples at uniform parameter
// values s_j = 2*pi*j/N. The numerical stand-in for a quasicircle.
struct JordanCurveSamples {
  std::vector<Cx> points;
  bool contains_zero = false;
  double bounded_side_area = 0.0;  // shoelace

  explicit JordanCurveSamples(std::vector<Cx> pts);
};

struct RiemannConfig {
  int trunc_m = 64;
  double correspondence_tol = 1e-12;  // sup-norm update tolerance
  int max_iter = 200;
  double region_ratio = 4.0;  // max|p| / min|p| validity bound about 0
  int fallback_outer = 60;
  int fallback_cg = 800;
};

struct InteriorMapResult {
  DiskMap map;  // h(0) = 0, h'(0) > 0
  // Lift table s(theta): map(e^{i theta}) lies at curve parameter s(theta).
  CircleHomeo correspondence;
  double boundary_residual;
  int iterations;
  bool used_fallback;
};

struct ExteriorMapResult {
  ExteriorMap map;  // h(inf) = inf, h'(inf) > 0
  CircleHomeo correspondence;
  double boundary_residual;
  int iterations;
  bool used_fallback;
};

// Interior Riemann map of the curve's bounded side, normalized by
// h(0) = 0, h'(0) > 0. Theodorsen conjugation iteration for curves starlike
// about 0, Gauss-Newton on the boundary correspondence system as fallback.
InteriorMapResult interior_map(const JordanCurveSamples& curve,
                               const RiemannConfig& cfg = {});

// Exterior Riemann map of the unbounded side, h(inf) = inf, h'(inf) > 0.
// Solved about the curve centroid; curves that are not starlike about it
// fall back to the interior solver through inversion, which handles mild
// concavity only -- strongly concave exteriors fail with
// NotStarlikeFallbackFailed rather than degrading silently.
ExteriorMapResult exterior_map(const JordanCurveSamples& curve,
                               const RiemannConfig& cfg = {});

// Complementary maps of a non-overlapping pair: the exterior map of
// f(S^1) and the interior map of g(S^1). No classification gate at this
// level; the rigged-annulus wrapper performs it.
struct ComplementaryMaps {
  ExteriorMapResult f_inf;
  InteriorMapResult g_zero;
};
ComplementaryMaps complementary_maps(const DiskMap& f, const ExteriorMap& g,
                                     int grid_n, const RiemannConfig& cfg = {});

}  // namespace annulus
