#pragma once

#include <utility>
#include <vector>

#include "annulus/circle.hpp"
#include "annulus/series.hpp"
#include "annulus/types.hpp"

namespace annulus {

// Normalized conformal welding problem: given quasisymmetric phi and
// a != 0, find the unique pair (F, G) with F(S^1) = G(S^1) as sets,
// F(0) = 0, G(inf) = inf, G'(inf) = a and phi = G^{-1} o F on S^1.
struct WeldingProblem {
  CircleHomeo phi;
  Cx a{1.0, 0.0};
  int trunc_m = 64;
  int grid_n = 1024;
  double tol = 1e-9;
  int max_newton = 50;
  int continuation_steps = 1;
};

struct WeldDiagnostics {
  double residual = 0.0;  // sup_j |F(e^{i theta_j}) - G(phi(e^{i theta_j}))|
  int continuation_steps_used = 0;
  std::vector<std::pair<double, double>> trace;  // (s, residual) per stage
};

struct WeldResult {
  DiskMap F;
  ExteriorMap G;  // lead pinned to a
  WeldDiagnostics diag;
};

// With phi fixed, F - G o phi is linear in the series coefficients of F and
// the exterior tail of G (the lead of G is pinned to a, the constant term of
// F is absent), so each stage is a linear least-squares solve; the
// continuation over phi is kept for conditioning diagnostics only. A
// zipper-style backend would be a possible alternative; it is not
// implemented here.
WeldResult weld(const WeldingProblem& p);

double weld_residual(const DiskMap& F, const ExteriorMap& G,
                     const CircleHomeo& phi);

}  // namespace annulus
