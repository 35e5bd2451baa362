#include <benchmark/benchmark.h>

#include "ainfty/errors.hpp"
#include "ainfty/homology.hpp"
#include "ainfty/linalg.hpp"
#include "ainfty/obstruction.hpp"
#include "ainfty/prelie.hpp"
#include "ainfty/sampling.hpp"

using namespace ainfty;

namespace {

Matrix random_int_matrix(Sampler& s, int rows, int cols, int bound) {
  RingSpec z = RingSpec::integers();
  Matrix m(z, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar::from_int(z, s.uniform(-bound, bound));
  return m;
}

// Rank 4 keeps the operator spaces small enough for exact arithmetic to
// finish in microseconds-to-milliseconds per iteration.
DgModule bench_complex(const RingSpec& ring) {
  Matrix d1(ring, 1, 2);
  d1.at(0, 1) = Scalar::one(ring);
  return DgModule(GradedModule(ring, {{0, 1}, {1, 2}, {2, 1}}), {{1, d1}});
}

// Entry growth during elimination is superexponential in the size, so the
// integer sizes stay small; the curve is the point of the benchmark.
void bm_smith_normal_form(benchmark::State& state) {
  Sampler s(7);
  int n = static_cast<int>(state.range(0));
  Matrix m = random_int_matrix(s, n, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(6)->Arg(8);

void bm_rational_kernel(benchmark::State& state) {
  Sampler s(11);
  int n = static_cast<int>(state.range(0));
  RingSpec q = RingSpec::rationals();
  Matrix m(q, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = s.scalar(q, 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(bm_rational_kernel)->Arg(8)->Arg(16)->Arg(24);

void bm_insertion_circle(benchmark::State& state) {
  Sampler s(13);
  DgModule c = bench_complex(RingSpec::prime_field(2));
  MultiMap f = s.multimap(c, static_cast<int>(state.range(0)), 0, 8);
  MultiMap g = s.multimap(c, 2, 0, 8);
  for (auto _ : state) benchmark::DoNotOptimize(circle(f, g));
}
BENCHMARK(bm_insertion_circle)->Arg(2)->Arg(3);

void bm_insertion_star(benchmark::State& state) {
  Sampler s(17);
  DgModule c = bench_complex(RingSpec::rationals());
  MultiMap f = s.multimap(c, static_cast<int>(state.range(0)), 0, 8);
  MultiMap g = s.multimap(c, 2, 1, 8);
  for (auto _ : state) benchmark::DoNotOptimize(star(f, g));
}
BENCHMARK(bm_insertion_star)->Arg(2)->Arg(3);

ArStructure lift_fixture(const RingSpec& ring) {
  Sampler s(19);
  DgModule a = bench_complex(ring);
  // A boundary product induces zero on homology, so the fixture stays
  // extendable and the lift step runs its full solve-and-correct path.
  MultiMap m2 = prelie_differential(s.multimap(a, 2, 1, 4));
  EndoBasis dom(a, 3, 1), cod(a, 3, 0);
  Matrix dm = operator_matrix(dom, cod, [](const MultiMap& f) { return prelie_differential(f); });
  auto x = solve_exact(dm, cod.vectorize(-circle(m2, m2)));
  if (!x) throw Error("benchmark fixture is not extendable");
  std::vector<MultiMap> maps = {MultiMap::from_differential(a), std::move(m2),
                                dom.devectorize(*x)};
  return ArStructure(std::move(a), 3, std::move(maps), Convention::circle);
}

void bm_lift_once(benchmark::State& state) {
  ArStructure st = lift_fixture(RingSpec::prime_field(2));
  for (auto _ : state) benchmark::DoNotOptimize(lift_once(st));
}
BENCHMARK(bm_lift_once);

void bm_obstruction_cocycle(benchmark::State& state) {
  ArStructure st = lift_fixture(RingSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(obstruction_cocycle(st));
}
BENCHMARK(bm_obstruction_cocycle);

}  // namespace

BENCHMARK_MAIN();
