#include <doctest.h>

#include <omp.h>

#include "parmod/relations.hpp"
#include "parmod/sweep.hpp"

using namespace parmod;

TEST_CASE("grid covers every admissible point") {
  const auto grid = betti_grid(4, 15);
  // 8 odd n per genus, minus (0,1).
  CHECK(grid.size() == 5 * 8 - 1);
  for (const auto& p : grid) CHECK(p.dim() >= 0);
  CHECK(grid.front() == ModuliParams(0, 3));
  CHECK(grid.back() == ModuliParams(4, 15));
}

TEST_CASE("parallel sweep equals the serial reference") {
  const auto grid = betti_grid(4, 15);
  const auto par = betti_sweep(grid);
  const auto ser = betti_sweep_serial(grid);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].g == ser[i].g);
    CHECK(par[i].n == ser[i].n);
    CHECK(par[i].polys == ser[i].polys);
    CHECK(par[i].methods_agree);
    CHECK(par[i].palindromic);
  }
}

TEST_CASE("sweep result is independent of the thread count") {
  const auto grid = betti_grid(3, 11);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = betti_sweep(grid);
  omp_set_num_threads(4);
  const auto four = betti_sweep(grid);
  omp_set_num_threads(saved);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(one[i].polys == four[i].polys);
}

TEST_CASE("sweep output keeps input order") {
  std::vector<ModuliParams> grid{ModuliParams(2, 5), ModuliParams(0, 3), ModuliParams(1, 1)};
  const auto out = betti_sweep(grid);
  CHECK(out[0].g == 2);
  CHECK(out[1].n == 3);
  CHECK(out[2].polys[1] == UniPoly{1, 0, 1});
}

TEST_CASE("hilbert kernel is thread-count independent") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
  const auto par = hilbert_series_quotient(7, 10);
  omp_set_num_threads(saved);
  CHECK(par == hilbert_series_quotient_serial(7, 10));
}
