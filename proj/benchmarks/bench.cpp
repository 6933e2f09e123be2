// Microbenchmarks for the classification pipeline: root-system construction,
// diagram reduction search, the full two-method classifier, the exhaustive
// pattern sweep, and exact Gram blocks on a Verma module.

#include <benchmark/benchmark.h>

#include "uhw/ehw.hpp"
#include "uhw/jakobsen.hpp"
#include "uhw/rootsys.hpp"
#include "uhw/verma.hpp"

using namespace uhw;

namespace {

void bm_build_e7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build(AlgebraSpec::e7()));
}
BENCHMARK(bm_build_e7);

void bm_diagram_so_star_12(benchmark::State& state) {
  RootSystem rs = build(AlgebraSpec::so_star(12));
  for (auto _ : state) benchmark::DoNotOptimize(diagram(rs));
}
BENCHMARK(bm_diagram_so_star_12);

void bm_classify_su33(benchmark::State& state) {
  RootSystem rs = build(AlgebraSpec::su(3, 3));
  Vec L = vec_scale(Rational(-7, 2), rs.epsilon);
  for (auto _ : state) benchmark::DoNotOptimize(classify(rs, L));
}
BENCHMARK(bm_classify_su33);

void bm_cross_check_all_e7(benchmark::State& state) {
  RootSystem rs = build(AlgebraSpec::e7());
  for (auto _ : state) benchmark::DoNotOptimize(cross_check_all(rs));
}
BENCHMARK(bm_cross_check_all_e7);

void bm_gram_su22_degree3(benchmark::State& state) {
  GeneratorBasis gb = generator_basis(AlgebraSpec::su(2, 2));
  RootSystem rs = build(AlgebraSpec::su(2, 2));
  Vec L = vec_scale(Rational(-3), rs.epsilon);
  for (auto _ : state) benchmark::DoNotOptimize(gram(gb, L, 3));
}
BENCHMARK(bm_gram_su22_degree3);

void bm_shapovalov_sp3(benchmark::State& state) {
  GeneratorBasis gb = generator_basis(AlgebraSpec::sp(3));
  Vec L{Rational(-1), Rational(-2), Rational(-3)};
  VermaModule vm(gb, L);
  Monomial x(gb.n_lowering, 0), y(gb.n_lowering, 0);
  x[0] = 2;
  x[gb.n_lowering - 1] = 1;
  y[1] = 1;
  y[gb.n_lowering - 1] = 2;
  UEAElement ex, ey;
  ex.term[x] = Rational(1);
  ey.term[y] = Rational(1);
  for (auto _ : state) benchmark::DoNotOptimize(vm.shapovalov(ex, ey));
}
BENCHMARK(bm_shapovalov_sp3);

}  // namespace

BENCHMARK_MAIN();
