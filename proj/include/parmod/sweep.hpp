#pragma once

#include <array>
#include <vector>

#include "parmod/betti.hpp"

namespace parmod {

/// Every method's Poincare polynomial at one (g, n).
struct SweepResult {
  int g = 0;
  int n = 0;
  std::array<UniPoly, 4> polys;  // strata, closed, rec-n, rec-g
  bool methods_agree = false;
  bool palindromic = false;
};

/// All (g, n) with g <= max_genus, odd n <= max_points and dim >= 0, in
/// (g, n) order.
std::vector<ModuliParams> betti_grid(int max_genus, int max_points);

/// Evaluates the grid points in parallel (OpenMP) and returns them in input
/// order.
std::vector<SweepResult> betti_sweep(const std::vector<ModuliParams>& grid);
/// Serial reference for betti_sweep.
std::vector<SweepResult> betti_sweep_serial(const std::vector<ModuliParams>& grid);

SweepResult evaluate_all_methods(const ModuliParams& p);

}  // namespace parmod
