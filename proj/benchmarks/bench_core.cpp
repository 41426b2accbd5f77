#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "esnkit/affine.hpp"
#include "esnkit/cancellative.hpp"
#include "esnkit/esn.hpp"
#include "esnkit/generators.hpp"
#include "esnkit/iso.hpp"

using namespace esnkit;

static void BM_ValidateSymmetricInverseMonoid(benchmark::State& state) {
  const InvSemigroup s = gen_symmetric_inverse_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    InvSemigroup v = validate_inverse_semigroup(s.elements, s.table, s.zero);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ValidateSymmetricInverseMonoid)->Arg(2)->Arg(3)->Arg(4);

static void BM_EsnRoundTrip(benchmark::State& state) {
  const InvSemigroup s = gen_symmetric_inverse_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    EsnWitness w = verify_esn_roundtrip(s);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_EsnRoundTrip)->Arg(2)->Arg(3);

static void BM_SpanGroupoidOfFreeCategory(benchmark::State& state) {
  const FinCategory c = gen_free_category(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SpanGroupoid g = g_of_left(c);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_SpanGroupoidOfFreeCategory)->Arg(2)->Arg(3);

static void BM_JOfCanonicalAffine(benchmark::State& state) {
  const OrdGroupoid g = groupoid_of(gen_symmetric_inverse_monoid(2));
  const CanonicalAffine ca = canonical_affine(g);
  for (auto _ : state) {
    JGroupoid j = j_of(ca.system.base);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_JOfCanonicalAffine);

static void BM_IsomorphismSearch(benchmark::State& state) {
  const InvSemigroup a = gen_symmetric_inverse_monoid(static_cast<int>(state.range(0)));
  // shuffle the carrier to make the search nontrivial
  std::vector<Idx> perm(a.size());
  for (Idx i = 0; i < a.size(); ++i) perm[i] = i;
  std::mt19937 rng(4217);
  std::shuffle(perm.begin() + 1, perm.end(), rng);  // keep the zero at 0
  std::vector<std::string> names(a.size());
  IdxTable table(a.size(), a.size());
  for (Idx i = 0; i < a.size(); ++i) {
    names[perm[i]] = a.elements[i];
    for (Idx j = 0; j < a.size(); ++j) table(perm[i], perm[j]) = perm[a.mul(i, j)];
  }
  const InvSemigroup b = validate_inverse_semigroup(names, table, Idx{0});
  for (auto _ : state) {
    auto iso = find_isomorphism(a, b);
    benchmark::DoNotOptimize(iso);
  }
}
BENCHMARK(BM_IsomorphismSearch)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
