// Microbenchmarks for the hot paths: fingerprint computation (convolution
// fast path vs brute-force enumeration), word-equality search, braiding
// round trips, and move generation.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tpl/braiding.hpp"
#include "tpl/diagram.hpp"
#include "tpl/equivalence.hpp"
#include "tpl/normalize.hpp"
#include "tpl/relations.hpp"
#include "tpl/rewrite.hpp"
#include "tpl/word.hpp"

using namespace tpl;

namespace {

// Deterministic mixed word: crossings, k pre-crossings, and a tie.
Word mixed_word(int n, int k) {
  Word w{n, Flavor::TPM, {}};
  std::mt19937 rng(42 + static_cast<unsigned>(k));
  w.tokens.push_back(tie(1));
  for (int t = 0; t < k; ++t) {
    w.tokens.push_back(pre(1 + static_cast<int>(rng() % (n - 1))));
    w.tokens.push_back((rng() % 2) ? sigma(1 + static_cast<int>(rng() % (n - 1)))
                                   : sigma_inv(1 + static_cast<int>(rng() % (n - 1))));
  }
  return w;
}

void BM_FingerprintConvolution(benchmark::State& state) {
  const MorseDiagram d =
      close_braid(mixed_word(4, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(d, 64));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FingerprintConvolution)->DenseRange(2, 14, 4)->Complexity();

void BM_FingerprintEnumeration(benchmark::State& state) {
  const MorseDiagram d =
      close_braid(mixed_word(4, static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(fingerprint_by_enumeration(d, 64));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FingerprintEnumeration)->DenseRange(2, 14, 4)->Complexity();

void BM_WordEquality(benchmark::State& state) {
  // An interior-transparency instance: the crossing passes through a block.
  const int n = static_cast<int>(state.range(0));
  Word lhs{n, Flavor::TM, {}}, rhs{n, Flavor::TM, {}};
  lhs.tokens.push_back(sigma(2));
  for (const Token& t : generalized_tie_tokens(1, n)) lhs.tokens.push_back(t);
  for (const Token& t : generalized_tie_tokens(1, n)) rhs.tokens.push_back(t);
  rhs.tokens.push_back(sigma(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(words_equal_in_monoid(lhs, rhs, 100000));
}
BENCHMARK(BM_WordEquality)->DenseRange(4, 6, 1);

void BM_CloseBraid(benchmark::State& state) {
  const Word w = mixed_word(4, 10);
  for (auto _ : state) benchmark::DoNotOptimize(close_braid(w));
}
BENCHMARK(BM_CloseBraid);

void BM_BraidRoundTrip(benchmark::State& state) {
  const MorseDiagram d = close_braid(mixed_word(4, 6));
  for (auto _ : state) benchmark::DoNotOptimize(braid_diagram(d));
}
BENCHMARK(BM_BraidRoundTrip);

void BM_NormalizeTies(benchmark::State& state) {
  Word w = mixed_word(4, 8);
  for (int i = 1; i <= 3; ++i) w.tokens.push_back(tie(i));
  for (auto _ : state) benchmark::DoNotOptimize(normalize_ties(w));
}
BENCHMARK(BM_NormalizeTies);

void BM_MarkovNeighbors(benchmark::State& state) {
  const Word w = mixed_word(4, 4);
  const SearchLimits lim{6, 30};
  for (auto _ : state) benchmark::DoNotOptimize(markov_neighbors(w, lim));
}
BENCHMARK(BM_MarkovNeighbors);

void BM_LMoveNeighbors(benchmark::State& state) {
  const Word w = mixed_word(4, 4);
  const SearchLimits lim{6, 30};
  for (auto _ : state) benchmark::DoNotOptimize(lmove_neighbors(w, lim));
}
BENCHMARK(BM_LMoveNeighbors);

void BM_RewriteRuleCache(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rewrite_rules(Flavor::TPM, 5).size());
}
BENCHMARK(BM_RewriteRuleCache);

}  // namespace

BENCHMARK_MAIN();
