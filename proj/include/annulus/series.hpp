#pragma once

#include <vector>

#include "annulus/types.hpp"

namespace annulus {

// Truncated Taylor series of a holomorphic map on the unit disk with
// f(0) = 0. coeff[k] multiplies z^{k+1}. Univalence is not an invariant of
// the type; it is checked where operations require it (winding test).
struct DiskMap {
  std::vector<Cx> a;

  int order() const { return static_cast<int>(a.size()); }
  Cx eval(Cx z) const;    // DomainViolation outside |z| <= 1
  Cx deriv(Cx z) const;
  Cx eval_unchecked(Cx z) const;
  Cx deriv_unchecked(Cx z) const;

  static DiskMap identity(int m);
  static DiskMap scaling(Cx s, int m);  // z -> s z
};

// Truncated Laurent series at infinity of a map on |w| >= 1:
// g(w) = lead*w + c0 + sum_k b[k-1] w^{-k}, with g(infinity) = infinity
// structurally and lead != 0 enforced.
struct ExteriorMap {
  Cx lead{1.0, 0.0};
  Cx c0{0.0, 0.0};
  std::vector<Cx> b;

  int order() const { return static_cast<int>(b.size()); }
  Cx eval(Cx w) const;  // DomainViolation inside |w| < 1
  Cx deriv(Cx w) const;
  Cx eval_unchecked(Cx w) const;
  Cx deriv_unchecked(Cx w) const;
  bool is_identity(double tol = 0.0) const;

  static ExteriorMap identity(int m);
};

void validate_exterior(const ExteriorMap& g);

struct DiskFit {
  DiskMap map;
  double residual;  // sup over samples of the discarded content
};

struct ExteriorFit {
  ExteriorMap map;
  double residual;
};

// Discrete Fourier projection of boundary samples taken at uniform angles on
// |z| = fit_radius onto the allowed frequency band, rescaled to the unit
// circle. Throws AliasingError when the discarded band carries more than 10%
// of the total energy. Requires samples.size() >= 8*m and a power of two.
DiskFit fit_disk_series(const std::vector<Cx>& samples, double fit_radius,
                        int m);
ExteriorFit fit_exterior_series(const std::vector<Cx>& samples,
                                double fit_radius, int m);

// S(g)(z) = 1/g(1/z). Maps exterior series to disk series and back;
// applying it twice recovers the original map. S(g)'(0) = 1/g'(infinity).
DiskFit s_involution(const ExteriorMap& g, int m, int grid_n = 1024,
                     double fit_radius = 1.05);
ExteriorFit s_involution(const DiskMap& f, int m, int grid_n = 1024,
                         double fit_radius = 1.05);

// outer(inner(.)) sampled on the fit circle and projected. Requires inner to
// map the closed disk strictly inside the open disk.
DiskFit compose_into_disk(const DiskMap& outer, const DiskMap& inner, int m,
                          int grid_n = 1024, double fit_radius = 0.95);

// Winding number of a sampled closed curve around p.
int winding_number(const std::vector<Cx>& curve, Cx p);

std::vector<Cx> boundary_samples(const DiskMap& f, int grid_n,
                                 double radius = 1.0);
std::vector<Cx> boundary_samples(const ExteriorMap& g, int grid_n,
                                 double radius = 1.0);

// Argument-principle univalence screens: the sampled boundary curve must
// wind exactly once around a reference interior point.
bool univalence_winding_disk(const DiskMap& f, int grid_n = 1024);
bool univalence_winding_exterior(const ExteriorMap& g, int grid_n = 1024);

}  // namespace annulus
