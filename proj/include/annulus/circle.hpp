#pragma once

#include <vector>

#include "annulus/interp.hpp"
#include "annulus/types.hpp"

namespace annulus {

// Orientation-preserving homeomorphism of the unit circle, stored as a
// strictly increasing lift sampled at theta_j = 2*pi*j/n with
// psi(theta + 2*pi) = psi(theta) + 2*pi and psi(0) normalized into [0, 2*pi).
//
// Orientation-reversing riggings are not represented: in the
// non-overlapping-maps model the orientation of a boundary parametrization is
// absorbed into which side of the circle (disk or exterior) the associated
// conformal map lives on, so every stored homeomorphism is
// orientation-preserving. Decreasing sample sets are rejected with
// OrientationError at construction.
class CircleHomeo {
public:
  explicit CircleHomeo(std::vector<double> lift_samples);

  static CircleHomeo identity(int n);
  static CircleHomeo rotation(double alpha, int n);

  int n() const { return static_cast<int>(lift_.size()); }
  const std::vector<double>& lift() const { return lift_; }

  // Interpolated lift, defined for all real theta.
  double lift_at(double theta) const { return interp_(theta); }
  // Boundary value e^{i psi(theta)}.
  Cx boundary(double theta) const;
  // Resample onto a different grid size.
  CircleHomeo resample(int n) const;

private:
  std::vector<double> lift_;
  MonotoneCubicLift interp_;
};

// Lift of a o b sampled on b's grid. Both inputs must share n.
CircleHomeo compose_circle(const CircleHomeo& a, const CircleHomeo& b);

CircleHomeo invert_circle(const CircleHomeo& a);

// Trigonometric interpolation of the lift's periodic part. For analytic
// homeomorphisms this evaluates anywhere at near-spectral accuracy, far
// beyond the cubic interpolant; it is not monotonicity-preserving, so the
// solver pipelines that use it validate the result downstream.
class SpectralLift {
public:
  explicit SpectralLift(const CircleHomeo& h);
  double operator()(double theta) const;
  double deriv(double theta) const;
  double solve(double y) const;  // Newton seeded from the cubic interpolant

private:
  std::vector<Cx> coef_;  // Fourier modes of psi(theta) - theta, k in (-K, K]
  int kmax_ = 0;          // highest significant mode
  MonotoneCubicLift cubic_;
};

// Composition and inversion sampled through the spectral interpolant; the
// results are validated CircleHomeos. Used inside the welding pipeline where
// the cubic interpolation error would dominate the solver tolerance.
CircleHomeo compose_circle_spectral(const CircleHomeo& a, const CircleHomeo& b);
CircleHomeo invert_circle_spectral(const CircleHomeo& a);

struct QsQuotientResult {
  double quotient;        // sampled lower bound, >= 1
  int degenerate_probes;  // probes skipped because the denominator vanished
};

// Sampled quasisymmetry quotient of the conjugated line map
// h = T o (e^{i theta} a) o T^{-1}, T(z) = i(1+z)/(1-z), where the rotation
// is chosen so that e^{i theta} a(1) = 1. The rotation is applied
// unconditionally; the quotient is invariant under it by construction.
QsQuotientResult qs_quotient(const CircleHomeo& a, int probe_count);

// Boundary values of the disk automorphism z -> e^{i alpha} (z + c)/(1 + conj(c) z).
CircleHomeo mobius_boundary(Cx c, double alpha, int n);

}  // namespace annulus
