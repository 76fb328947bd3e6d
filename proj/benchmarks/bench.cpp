#include "benchmark/benchmark.h"
#include "minrep/arith.hpp"
#include "minrep/catalog.hpp"
#include "minrep/group.hpp"
#include "minrep/small_group.hpp"
#include "minrep/verify.hpp"

namespace {

using namespace minrep;

void BM_FieldMulPrime(benchmark::State& state) {
  const Field F = Field::make(10007, 1);
  Field::Elt x = 2, y = 12345 % 10007;
  for (auto _ : state) {
    x = F.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMulPrime);

void BM_FieldMulExtension(benchmark::State& state) {
  const Field F = Field::make(3, 4);  // F_81, table-backed
  Field::Elt x = F.primitive(), y = F.pow(F.primitive(), 7);
  for (auto _ : state) {
    x = F.mul(x, y);
    if (x == 0) x = F.one();
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMulExtension);

void BM_MatMul3(benchmark::State& state) {
  const Field F = Field::make(13, 1);
  Mat a = identity(F, 3);
  a.at(0, 1) = 5;
  a.at(1, 2) = 7;
  Mat b = a;
  for (auto _ : state) {
    b = mul(F, b, a);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_MatMul3);

void BM_EnumerateSL2(benchmark::State& state) {
  const GroupId id = make_group(GroupKind::SL, 2, field_of_order(state.range(0)));
  for (auto _ : state) {
    auto elems = enumerate_elements(id, 1 << 20);
    benchmark::DoNotOptimize(elems.size());
  }
}
BENCHMARK(BM_EnumerateSL2)->Arg(7)->Arg(13);

void BM_CosetEnumeration(benchmark::State& state) {
  const FieldPtr F = field_of_order(state.range(0));
  const GroupId gl = make_group(GroupKind::GL, 2, F);
  const SubgroupSpec s = twisted_odd_borel(F, 0);
  for (auto _ : state) {
    auto table = coset_enumeration(gl, *s.predicate, 5000);
    benchmark::DoNotOptimize(table.degree());
  }
}
BENCHMARK(BM_CosetEnumeration)->Arg(13)->Arg(25);

void BM_KernelScanGL2(benchmark::State& state) {
  const FieldPtr F = field_of_order(state.range(0));
  const GroupId gl = make_group(GroupKind::GL, 2, F);
  const Collection c = gl2_collection(F);
  std::vector<CosetAction> actions;
  for (const SubgroupSpec& m : c.members)
    actions.push_back({coset_enumeration(gl, *m.predicate, 5000), *m.predicate});
  for (auto _ : state) {
    std::uint64_t size = 0;
    benchmark::DoNotOptimize(action_kernel_size(gl, actions, 1 << 21, &size));
  }
}
BENCHMARK(BM_KernelScanGL2)->Arg(9)->Arg(13);

void BM_SubgroupLattice(benchmark::State& state) {
  const GroupId id = make_group(GroupKind::GL, 2, field_of_order(5));
  const SmallGroup G = small_group_from_elements(*id.field, enumerate_elements(id, 500));
  for (auto _ : state) {
    auto subs = subgroup_lattice(G, 480);
    benchmark::DoNotOptimize(subs.size());
  }
}
BENCHMARK(BM_SubgroupLattice);

void BM_Oracle(benchmark::State& state) {
  const GroupId id = make_group(GroupKind::SL, 2, field_of_order(5));
  const SmallGroup G = small_group_from_elements(*id.field, enumerate_elements(id, 200));
  for (auto _ : state) {
    auto r = minimal_degree_oracle(G, 200);
    benchmark::DoNotOptimize(r.degree);
  }
}
BENCHMARK(BM_Oracle);

void BM_OptimalBruteforce(benchmark::State& state) {
  for (auto _ : state) {
    auto c = optimal_choice_bruteforce(960, 2, 2);
    benchmark::DoNotOptimize(c.cost);
  }
}
BENCHMARK(BM_OptimalBruteforce);

void BM_Reconcile(benchmark::State& state) {
  for (auto _ : state) {
    auto r = reconcile(GroupKind::GL, 2, state.range(0));
    benchmark::DoNotOptimize(r.agrees);
  }
}
BENCHMARK(BM_Reconcile)->Arg(9)->Arg(13);

}  // namespace

BENCHMARK_MAIN();
