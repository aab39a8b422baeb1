#pragma once

#include <cstdint>
#include <string>

#include "annulus/riemann.hpp"
#include "annulus/types.hpp"

namespace annulus {

struct RunConfig {
  int grid_n = 1024;
  int trunc_m = 64;
  double tol = 1e-9;
  double delta_touch = 1e-4;
  std::uint64_t seed = 0;
  std::string output_dir = ".";

  void validate() const {
    if (!is_power_of_two(grid_n))
      throw InvalidParameter("config: grid_n must be a power of two");
    if (grid_n < 8 * trunc_m)
      throw InvalidParameter("config: grid_n must be at least 8*trunc_m");
    if (!(tol > 0.0)) throw InvalidParameter("config: tol must be positive");
    if (!(delta_touch > 0.0))
      throw InvalidParameter("config: delta_touch must be positive");
  }

  RiemannConfig riemann() const {
    RiemannConfig rc;
    rc.trunc_m = trunc_m;
    return rc;
  }
};

}  // namespace annulus
