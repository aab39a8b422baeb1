#pragma once

#include <random>
#include <vector>

#include "annulus/charts.hpp"
#include "annulus/circle.hpp"
#include "annulus/riemann.hpp"
#include "annulus/semigroup.hpp"
#include "annulus/series.hpp"

namespace annulus {
namespace fixtures {

// Closed-form welding pair of the disk automorphism boundary map m_c:
// F(z) = (1 - |c|^2) z / (1 + conj(c) z), G(w) = w - c. Satisfies
// G^{-1} o F = m_c on the circle with F(0) = 0, G'(inf) = 1.
DiskMap mobius_welding_F(Cx c, int m);
ExteriorMap mobius_welding_G(Cx c, int m);
RiggedAnnulus mobius_welding_pair(Cx c, const RunConfig& cfg = {});

// Interior map of the disk |zeta - center| < radius with h(0) = 0,
// h'(0) > 0 (requires |center| < radius): h(z) = center + radius
// (z - p)/(1 - conj(p) z), p = center/radius.
DiskMap mobius_interior_of_circle(Cx center, double radius, int m);

// Ellipse boundary with semi-axes (a, b) sampled at uniform parameter.
std::vector<Cx> ellipse_points(double a, double b, int n, Cx center = {});

// Mildly perturbed ellipse family for welding seeds: radial factor
// 1 + eps1 cos(2s + p1) + eps2 cos(3s + p2) applied to an ellipse.
std::vector<Cx> perturbed_ellipse_points(double a, double b, double eps1,
                                         double p1, double eps2, double p2,
                                         int n);

// Random bounded univalent disk map built through the inverse chart from a
// small pre-Schwarzian (norm kept below the univalence threshold), scaled so
// sup |f| on the circle equals target (< 1).
DiskMap random_bounded_univalent(std::mt19937_64& rng, double target, int m);

RiggedAnnulus random_e_annulus(std::mt19937_64& rng, const RunConfig& cfg = {});

// Random annulus with strictly disjoint boundary curves: a bounded univalent
// disk side and a small Laurent-tail exterior side.
RiggedAnnulus random_a0_annulus(std::mt19937_64& rng, const RunConfig& cfg = {});

// Random low-order series with coefficients scaled to reach the requested
// weighted sup-norm.
TaylorSeries random_banded_series(std::mt19937_64& rng, int degree,
                                  double target_norm, int len);

}  // namespace fixtures
}  // namespace annulus
