#pragma once

#include <set>
#include <string>

#include "annulus/circle.hpp"
#include "annulus/config.hpp"
#include "annulus/riemann.hpp"
#include "annulus/series.hpp"
#include "annulus/types.hpp"
#include "annulus/welding.hpp"

namespace annulus {

// Numerical class flags of a rigged annulus. A0: boundary curves strictly
// disjoint (sampled distance above delta_touch). A_degenerate: curves touch
// but differ as sets. G: curves coincide as sets (welding pair). E: exterior
// side is the identity and the disk side maps strictly inside the disk.
enum class AnnulusFlag { A0, A_degenerate, E, G };

enum class NormalizationTag { raw, a_normalized, standard };

std::string flag_name(AnnulusFlag f);
std::string tag_name(NormalizationTag t);

// Pair of non-overlapping maps (f on the disk, g on the exterior) with
// f(0) = 0 and g(inf) = inf structurally. The tag records which
// normalization of g'(inf) the pair carries.
struct RiggedAnnulus {
  DiskMap f;
  ExteriorMap g;
  NormalizationTag tag = NormalizationTag::raw;
  Cx tag_a{1.0, 0.0};  // meaningful when tag == a_normalized
  std::set<AnnulusFlag> flags;
};

// Builds an annulus, inferring the standard tag when g'(inf) = 1, and fills
// the class flags.
RiggedAnnulus make_annulus(DiskMap f, ExteriorMap g, const RunConfig& cfg = {});

RiggedAnnulus identity_annulus(const RunConfig& cfg = {});

std::set<AnnulusFlag> classify(const RiggedAnnulus& x, double delta_touch,
                               int grid_n = 1024);

// g'(inf).
Cx annulus_H(const RiggedAnnulus& x);

// (f, g) -> (lam f, lam g) with lam = a / g'(inf); the automorphism action
// slice with H(result) = a. Idempotent for matching a.
RiggedAnnulus normalize(const RiggedAnnulus& x, Cx a, const RunConfig& cfg = {});

// Semigroup multiplication via conformal welding of the composed boundary
// correspondences; the result is renormalized to the standard slice and
// reclassified.
RiggedAnnulus multiply(const RiggedAnnulus& x, const RiggedAnnulus& y,
                       const RunConfig& cfg = {});

// Direct composition on the bounded-univalent subsemigroup; serves as the
// independent oracle for multiply there.
RiggedAnnulus compose_e(const RiggedAnnulus& e1, const RiggedAnnulus& e2,
                        const RunConfig& cfg = {});

// Welding-pair group to circle homeomorphisms: (f, g) -> g^{-1} o f on S^1.
CircleHomeo rho(const RiggedAnnulus& x, const RunConfig& cfg = {});

// Section of rho via welding with a = 1.
RiggedAnnulus from_qs(const CircleHomeo& phi, const RunConfig& cfg = {});

// Classified complement supplier: exterior complement of x.f and interior
// complement of x.g with their boundary correspondences. Requires the A0
// flag (strictly disjoint curves).
ComplementaryMaps complementary_pair(const RiggedAnnulus& x,
                                     const RunConfig& cfg = {});

}  // namespace annulus
