#include <benchmark/benchmark.h>

#include "dgfree/classify2.hpp"
#include "dgfree/cohomology.hpp"
#include "dgfree/dgmodule.hpp"

using namespace dgfree;

namespace {

MatrixTuple canon(LabelKind k) { return canonical_tuple(ClassLabel::of(k)); }

// all 3^8 tuples with entries in {-1,0,1}, keeping the crisscross ones
std::vector<MatrixTuple> sweep_tuples() {
  std::vector<MatrixTuple> out;
  for (int code = 0; code < 6561; ++code) {
    int c = code;
    std::vector<RatMatrix> ms(2, RatMatrix(2, 2));
    for (int k = 0; k < 8; ++k) {
      ms[static_cast<size_t>(k / 4)]((k / 2) % 2, k % 2) = Rational(c % 3 - 1);
      c /= 3;
    }
    MatrixTuple t(ms);
    if (is_crisscross(t)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

static void BM_CohomologyB6(benchmark::State& st) {
  auto t = canon(LabelKind::B6);
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cohomology_dim(t, d));
}
BENCHMARK(BM_CohomologyB6)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_CohomologyTable(benchmark::State& st) {
  auto t = canon(static_cast<LabelKind>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cohomology_table(t, 8, false).dims());
}
BENCHMARK(BM_CohomologyTable)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_CohomologyZeroN3(benchmark::State& st) {
  auto t = MatrixTuple::zero(3);
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cohomology_dim(t, d));
}
BENCHMARK(BM_CohomologyZeroN3)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_IsCrisscross(benchmark::State& st) {
  auto t = canonical_tuple(ClassLabel::bst(2, 3));
  for (auto _ : st) benchmark::DoNotOptimize(is_crisscross(t));
}
BENCHMARK(BM_IsCrisscross);

static void BM_ClassifySweep(benchmark::State& st) {
  auto tuples = sweep_tuples();
  for (auto _ : st)
    for (const auto& t : tuples) benchmark::DoNotOptimize(classify(t).label.kind);
  st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * tuples.size()));
}
BENCHMARK(BM_ClassifySweep)->Unit(benchmark::kMillisecond);

static void BM_CheckWitnessCatalog(benchmark::State& st) {
  auto cat = witness_catalog();
  for (auto _ : st)
    for (const auto& e : cat) benchmark::DoNotOptimize(check_witness(e.source, e.target, e.witness));
  st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * cat.size()));
}
BENCHMARK(BM_CheckWitnessCatalog);

static void BM_DecideIsomorphism(benchmark::State& st) {
  auto a = canon(LabelKind::B8), b = canonical_tuple(ClassLabel::bst(2, Rational(1, 2)));
  for (auto _ : st) benchmark::DoNotOptimize(decide_isomorphism(a, b).verdict);
}
BENCHMARK(BM_DecideIsomorphism);

static void BM_ModuleEndo(benchmark::State& st) {
  std::vector<std::vector<Element>> D(3, std::vector<Element>(3, Element(2)));
  D[1][0] = Element::parse(2, "x2");
  D[2][0] = Element::parse(2, "x1");
  D[2][1] = Element::parse(2, "x2");
  auto f = make_module(DGFreeAlgebra(canon(LabelKind::B6)), {{"1", 0}, {"se_x2", 0}, {"se_z", 0}}, D);
  for (auto _ : st) benchmark::DoNotOptimize(degree_zero_endo_algebra(f).dimension);
}
BENCHMARK(BM_ModuleEndo);
BENCHMARK_MAIN();
