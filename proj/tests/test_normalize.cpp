#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "tpl/diagram.hpp"
#include "tpl/equivalence.hpp"
#include "tpl/normalize.hpp"
#include "tpl/partition.hpp"
#include "tpl/word.hpp"

using namespace tpl;

namespace {

Word mk(const std::string& text) {
  auto r = parse_word(text);
  REQUIRE_MESSAGE(r.word.has_value(), r.error);
  return *r.word;
}

// The mobility claim, checked exactly: the fingerprint of a tied word equals
// the fingerprint of its tie-free part's closure with the component
// partition induced by the extracted bottom partition.
InvariantFingerprint augmented_fingerprint(const TieNormalForm& nf, int n) {
  const MorseDiagram d = close_braid(nf.pure);
  const InvariantFingerprint fp = fingerprint(d);
  const ComponentsResult cr = components(d);
  const int bottom_gap = n + static_cast<int>(nf.pure.tokens.size());
  DisjointSets dsu(fp.components);
  for (const auto& block : nf.part.blocks)
    for (std::size_t t = 1; t < block.size(); ++t)
      dsu.unite(cr.map.comp[bottom_gap][static_cast<std::size_t>(block[0]) - 1],
                cr.map.comp[bottom_gap][static_cast<std::size_t>(block[t]) - 1]);
  return InvariantFingerprint{fp.components, partition_from_dsu(dsu),
                              fp.outcomes};
}

}  // namespace

TEST_CASE("disjoint sets") {
  DisjointSets d(4);
  CHECK(d.size() == 4);
  CHECK(d.count() == 4);
  CHECK(d.unite(1, 3));
  CHECK_FALSE(d.unite(3, 1));
  CHECK(d.find(1) == d.find(3));
  CHECK(d.find(2) != d.find(1));
  CHECK(d.count() == 3);
  d.reset(2);
  CHECK(d.count() == 2);
  CHECK(d.find(1) != d.find(2));
}

TEST_CASE("set partitions") {
  const SetPartition disc = discrete_partition(3);
  CHECK(disc.blocks == std::vector<std::vector<int>>{{1}, {2}, {3}});

  const SetPartition p = partition_from_pairs(5, {{4, 2}, {2, 1}});
  CHECK(p.blocks == std::vector<std::vector<int>>{{1, 2, 4}, {3}, {5}});
  CHECK(partition_text(p) == "{1,2,4} {3} {5}");
  CHECK(partition_block_sizes(p) == std::vector<int>{1, 1, 3});

  CHECK(partition_refines(disc, disc));
  CHECK(partition_refines(discrete_partition(5), p));
  CHECK_FALSE(partition_refines(p, discrete_partition(5)));

  const SetPartition q = partition_from_pairs(5, {{3, 5}});
  const SetPartition j = partition_join(p, q);
  CHECK(j.blocks == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}});
  CHECK(partition_refines(p, j));
  CHECK(partition_refines(q, j));
}

TEST_CASE("tie extraction on fixed words") {
  SUBCASE("tie-free words pass through with flavor demotion") {
    const auto tm = normalize_ties(mk("n=3 flavor=TM s1 S2"));
    CHECK(tm.pure.flavor == Flavor::B);
    CHECK(tm.pure.tokens == mk("n=3 flavor=B s1 S2").tokens);
    CHECK(tm.part == discrete_partition(3));

    const auto tpm = normalize_ties(mk("n=2 flavor=TPM p1"));
    CHECK(tpm.pure.flavor == Flavor::PM);

    const auto tsm = normalize_ties(mk("n=2 flavor=TSM t1"));
    CHECK(tsm.pure.flavor == Flavor::TSM);

    const auto b = normalize_ties(mk("n=2 flavor=B s1"));
    CHECK(b.pure.flavor == Flavor::B);
  }

  SUBCASE("a lone tie becomes a bottom pair") {
    const auto nf = normalize_ties(mk("n=2 flavor=TM e1"));
    CHECK(nf.pure.tokens.empty());
    CHECK(nf.part.blocks == std::vector<std::vector<int>>{{1, 2}});
  }

  SUBCASE("ties ride the strands below them") {
    // Tie on (1,2); below it s2 sends position 2 to 3.
    const auto nf = normalize_ties(mk("n=3 flavor=TM e1 s2"));
    CHECK(nf.pure.tokens == mk("n=3 flavor=B s2").tokens);
    CHECK(nf.part.blocks == std::vector<std::vector<int>>{{1, 3}, {2}});

    // Tie on (2,3); below it s1 s2 sends 2 -> 1 -> 1 and 3 -> 3 -> 2.
    const auto nf2 = normalize_ties(mk("n=3 flavor=TM e2 s1 s2"));
    CHECK(nf2.part.blocks == std::vector<std::vector<int>>{{1, 2}, {3}});
  }

  SUBCASE("terminal ties contribute their own positions") {
    const auto nf = normalize_ties(mk("n=3 flavor=TM s1 e1"));
    CHECK(nf.pure.tokens == mk("n=3 flavor=B s1").tokens);
    CHECK(nf.part.blocks == std::vector<std::vector<int>>{{1, 2}, {3}});
  }

  SUBCASE("multiple ties close transitively") {
    const auto nf = normalize_ties(mk("n=3 flavor=TM e1 e2"));
    CHECK(nf.pure.tokens.empty());
    CHECK(nf.part.blocks == std::vector<std::vector<int>>{{1, 2, 3}});
  }

  SUBCASE("idempotent on its own output") {
    const auto once = normalize_ties(mk("n=4 flavor=TPM e2 p1 s3 e1 S2"));
    for (const auto& t : once.pure.tokens) CHECK(t.kind != TokenKind::Tie);
    const auto twice = normalize_ties(once.pure);
    CHECK(twice.pure == once.pure);
    CHECK(twice.part == discrete_partition(4));
  }
}

TEST_CASE("tie mobility preserves the fingerprint") {
  std::mt19937 rng(20260815);
  const TokenKind kinds[] = {TokenKind::SigmaPos, TokenKind::SigmaNeg,
                             TokenKind::Pre, TokenKind::Tie};
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int len = static_cast<int>(rng() % 9);
    Word w{n, Flavor::TPM, {}};
    for (int k = 0; k < len; ++k)
      w.tokens.push_back(Token{kinds[rng() % 4],
                               1 + static_cast<int>(rng() % (n - 1))});
    const auto nf = normalize_ties(w);
    CAPTURE(word_text(w));
    CHECK(augmented_fingerprint(nf, n) == fingerprint_word(w));
  }
}
