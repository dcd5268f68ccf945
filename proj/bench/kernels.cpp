// Serial reference against the OpenMP path for each parallel kernel.
#include <benchmark/benchmark.h>

#include <memory>

#include "unram/brauer/brauer.hpp"
#include "unram/catalog/families.hpp"
#include "unram/cohomology/cohomology.hpp"
#include "unram/exactla/sparse.hpp"

using namespace unram;

namespace {

const cohomology::GLattice& lattice(int which) {
  static const cohomology::GLattice a6(std::make_shared<const group::MatGroup>(catalog::a6_norm1()));
  static const cohomology::GLattice cp5(std::make_shared<const group::MatGroup>(catalog::family_cp2p(5)));
  static const cohomology::GLattice qd2(std::make_shared<const group::MatGroup>(catalog::family_qd8n(2)));
  switch (which) {
    case 0: return a6;
    case 1: return cp5;
    default: return qd2;
  }
}

const char* name(int which) { return which == 0 ? "a6_norm1" : which == 1 ? "cp2p(5)" : "qd8n(2)"; }

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) {
  s.SetLabel(std::string(name(static_cast<int>(s.range(0)))) + (s.range(1) ? " parallel" : " serial"));
}

void BM_Elimination(benchmark::State& s) {
  auto d = cohomology::coboundary_matrix(lattice(static_cast<int>(s.range(0)))).d;
  for (auto _ : s) benchmark::DoNotOptimize(exactla::eliminate_unit_pivots(d, exec_of(s)));
  label(s);
}

void BM_BicyclicEnumeration(benchmark::State& s) {
  const auto& g = lattice(static_cast<int>(s.range(0))).group();
  for (auto _ : s) benchmark::DoNotOptimize(group::bicyclic_subgroups(g, true, exec_of(s)));
  label(s);
}

void BM_CocycleExtension(benchmark::State& s) {
  const auto& m = lattice(static_cast<int>(s.range(0)));
  auto h = cohomology::h2(m);
  for (auto _ : s)
    for (const auto& z : h.gens_restricted) benchmark::DoNotOptimize(cohomology::extend_cocycle(m, z, exec_of(s)));
  label(s);
}

// restriction to every bicyclic subgroup, with the intersection fold
void BM_Restriction(benchmark::State& s) {
  const auto& m = lattice(static_cast<int>(s.range(0)));
  brauer::H2uOptions opt;
  opt.exec = exec_of(s);
  for (auto _ : s) benchmark::DoNotOptimize(brauer::h2u(m, opt));
  label(s);
}

void args(benchmark::internal::Benchmark* b) {
  for (int g : {2, 1, 0})
    for (int par : {0, 1}) b->Args({g, par});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Elimination)->Apply(args);
BENCHMARK(BM_BicyclicEnumeration)->Apply(args);
BENCHMARK(BM_CocycleExtension)->Apply(args);
BENCHMARK(BM_Restriction)->Apply(args)->Iterations(1);

BENCHMARK_MAIN();
