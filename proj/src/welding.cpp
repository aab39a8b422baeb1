#include "annulus/welding.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>

namespace annulus {

namespace {

struct Stage {
  DiskMap F;
  ExteriorMap G;
  double residual;
};

// Least-squares solve of F(e^{i theta_j}) = G(zeta_j), zeta_j = e^{i psi_j},
// over the Taylor coefficients of F and the tail of G. Normal equations with
// a small Tikhonov shift.
Stage solve_stage(const std::vector<double>& psi, Cx a, int m) {
  const int n = static_cast<int>(psi.size());
  const int cols = 2 * m + 1;  // a_1..a_m, b_0, b_1..b_m
  Eigen::MatrixXcd A(n, cols);
  Eigen::VectorXcd rhs(n);
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    const Cx z(std::cos(t), std::sin(t));
    const Cx zeta(std::cos(psi[j]), std::sin(psi[j]));
    Cx zp = z;
    for (int k = 0; k < m; ++k) {
      A(j, k) = zp;
      zp *= z;
    }
    const Cx izeta = 1.0 / zeta;
    Cx wp(1.0, 0.0);
    for (int k = 0; k <= m; ++k) {
      A(j, m + k) = -wp;
      wp *= izeta;
    }
    rhs(j) = a * zeta;
  }

  Eigen::MatrixXcd gram = A.adjoint() * A;
  gram.diagonal().array() += 1e-12;
  const Eigen::VectorXcd x = gram.ldlt().solve(A.adjoint() * rhs);

  Stage st;
  st.F.a.assign(m, Cx(0.0, 0.0));
  for (int k = 0; k < m; ++k) st.F.a[k] = x(k);
  st.G.lead = a;
  st.G.c0 = x(m);
  st.G.b.assign(m, Cx(0.0, 0.0));
  for (int k = 1; k <= m; ++k) st.G.b[k - 1] = x(m + k);

  const Eigen::VectorXcd r = A * x - rhs;
  st.residual = r.cwiseAbs().maxCoeff();
  return st;
}

}  // namespace

WeldResult weld(const WeldingProblem& p) {
  if (!(std::abs(p.a) > 0.0))
    throw InvalidParameter("weld: a must be nonzero");
  if (!(p.tol > 0.0)) throw InvalidParameter("weld: tol must be positive");
  if (p.grid_n < 8 * p.trunc_m)
    throw InvalidParameter("weld: grid_n must be at least 8*trunc_m");
  if (!is_power_of_two(p.grid_n))
    throw InvalidParameter("weld: grid_n must be a power of two");

  const CircleHomeo phi = p.phi.resample(p.grid_n);
  const std::vector<double>& lift = phi.lift();
  const int n = p.grid_n;

  WeldDiagnostics diag;
  Stage st = solve_stage(lift, p.a, p.trunc_m);
  diag.trace.emplace_back(1.0, st.residual);
  diag.continuation_steps_used = 1;

  if (st.residual > p.tol && p.continuation_steps > 1) {
    // Re-solve along the family interpolating the lift toward the identity;
    // each stage is independent, the trace records the conditioning profile.
    for (int step = 1; step <= p.continuation_steps; ++step) {
      const double s =
          static_cast<double>(step) / static_cast<double>(p.continuation_steps);
      std::vector<double> mix(n);
      for (int j = 0; j < n; ++j) {
        const double id = kTwoPi * j / n;
        mix[j] = (1.0 - s) * id + s * lift[j];
      }
      st = solve_stage(mix, p.a, p.trunc_m);
      diag.trace.emplace_back(s, st.residual);
      ++diag.continuation_steps_used;
    }
  }

  diag.residual = st.residual;
  if (st.residual > p.tol) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "weld: residual %.3e above tolerance %.3e (distortion "
                  "beyond solver capability at this resolution)",
                  st.residual, p.tol);
    throw WeldNonConvergence(msg, st.residual, diag.trace);
  }

  if (!univalence_winding_disk(st.F, n))
    throw WeldNonConvergence("weld: F fails the univalence winding test",
                             st.residual, diag.trace);
  std::vector<Cx> gcurve = boundary_samples(st.G, n, 1.0);
  bool g_ok = true;
  try {
    g_ok = (winding_number(gcurve, Cx(0.0, 0.0)) == 1);
  } catch (const InvalidParameter&) {
    // 0 lies on the common boundary; fall back to the centroid test.
    g_ok = univalence_winding_exterior(st.G, n);
  }
  if (!g_ok)
    throw WeldNonConvergence("weld: G fails the univalence winding test",
                             st.residual, diag.trace);

  return {std::move(st.F), std::move(st.G), std::move(diag)};
}

double weld_residual(const DiskMap& F, const ExteriorMap& G,
                     const CircleHomeo& phi) {
  const int n = phi.n();
  double r = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    const Cx z(std::cos(t), std::sin(t));
    const double psi = phi.lift()[j];
    const Cx zeta(std::cos(psi), std::sin(psi));
    r = std::max(r, std::abs(F.eval_unchecked(z) - G.eval_unchecked(zeta)));
  }
  return r;
}

}  // namespace annulus
