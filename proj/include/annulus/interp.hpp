#pragma once

#include <vector>

#include "annulus/types.hpp"

namespace annulus {

// Monotone cubic (Fritsch-Carlson limited) interpolant of a strictly
// increasing lift sampled at uniform angles theta_j = 2*pi*j/n, extended by
// v(theta + 2*pi) = v(theta) + 2*pi. Monotone by construction.
class MonotoneCubicLift {
public:
  MonotoneCubicLift() = default;
  explicit MonotoneCubicLift(const std::vector<double>& values);

  double operator()(double theta) const;
  // Solves v(theta) = y for theta (v is strictly increasing).
  double solve(double y) const;
  int n() const { return static_cast<int>(v_.size()); }

private:
  std::vector<double> v_;  // samples, v_[n] wrap implied as v_[0] + 2*pi
  std::vector<double> m_;  // limited tangents
  double h_ = 0.0;
};

// Periodic cubic spline on [0, 2*pi) with arbitrary strictly increasing
// knots. In lift mode the interpolated quantity satisfies
// y(x + 2*pi) = y(x) + 2*pi; otherwise it is 2*pi-periodic.
class CyclicSpline {
public:
  CyclicSpline() = default;
  CyclicSpline(std::vector<double> knots, std::vector<double> values,
               bool lift_mode = false);

  double operator()(double x) const;
  double deriv(double x) const;

private:
  std::vector<double> x_, y_, ypp_;  // knots, values, second derivatives
  bool lift_ = false;
  double x0_ = 0.0;
  int locate(double& x) const;  // reduce into the base period, find interval
};

// Closed curve through n points at uniform parameter s_j = 2*pi*j/n,
// interpolated componentwise with periodic cubic splines.
class CurveInterp {
public:
  CurveInterp() = default;
  explicit CurveInterp(const std::vector<Cx>& points);

  Cx at(double s) const;
  Cx tangent(double s) const;
  int n() const { return n_; }

  // Parameter of a local nearest point to q (Newton from seed, with a
  // guarded fallback to local sampling).
  double nearest(Cx q, double seed) const;
  double distance(Cx q, double seed) const;

private:
  CyclicSpline re_, im_;
  int n_ = 0;
};

}  // namespace annulus
