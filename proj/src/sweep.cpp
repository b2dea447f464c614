#include "parmod/sweep.hpp"

#include <exception>

namespace parmod {

std::vector<ModuliParams> betti_grid(int max_genus, int max_points) {
  std::vector<ModuliParams> grid;
  for (int g = 0; g <= max_genus; ++g) {
    for (int n = 1; n <= max_points; n += 2) {
      const ModuliParams p(g, n);
      if (p.dim() >= 0) grid.push_back(p);
    }
  }
  return grid;
}

SweepResult evaluate_all_methods(const ModuliParams& p) {
  SweepResult r;
  r.g = p.g;
  r.n = p.n;
  r.polys = {poincare_strata(p), poincare_closed(p), poincare_by_recursion_n(p), poincare_by_recursion_g(p)};
  r.methods_agree = r.polys[0] == r.polys[1] && r.polys[1] == r.polys[2] && r.polys[2] == r.polys[3];
  r.palindromic = r.polys[1].degree() == p.dim() && r.polys[1].reversed(p.dim()) == r.polys[1];
  return r;
}

std::vector<SweepResult> betti_sweep(const std::vector<ModuliParams>& grid) {
  std::vector<SweepResult> out(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  const auto count = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = evaluate_all_methods(grid[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<SweepResult> betti_sweep_serial(const std::vector<ModuliParams>& grid) {
  std::vector<SweepResult> out;
  out.reserve(grid.size());
  for (const auto& p : grid) out.push_back(evaluate_all_methods(p));
  return out;
}

}  // namespace parmod
