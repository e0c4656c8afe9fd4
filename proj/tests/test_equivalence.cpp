#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpl/equivalence.hpp"
#include "tpl/word.hpp"

using namespace tpl;

namespace {

Word mk(const std::string& text) {
  auto r = parse_word(text);
  REQUIRE_MESSAGE(r.word.has_value(), r.error);
  return *r.word;
}

bool has_move(const std::vector<EquivalenceMove>& ms, MoveKind k,
              const Word& w) {
  return std::any_of(ms.begin(), ms.end(), [&](const EquivalenceMove& m) {
    return m.kind == k && m.word == w;
  });
}

}  // namespace

TEST_CASE("closure move generation") {
  const SearchLimits lim{6, 40};

  SUBCASE("tie stabilization joins the strand pair closing into one loop") {
    const auto ms = markov_neighbors(mk("n=2 flavor=TM s1"), lim);
    CHECK(has_move(ms, MoveKind::TStab, mk("n=2 flavor=TM s1 e1")));
    // Inverse direction: the tie can be removed again under the same gate.
    const auto back = markov_neighbors(mk("n=2 flavor=TM s1 e1"), lim);
    CHECK(has_move(back, MoveKind::TDestab, mk("n=2 flavor=TM s1")));
  }

  SUBCASE("tie stabilization respects the closure gate") {
    // The identity braid closes 1 and 2 into separate loops: no t-stab.
    for (const auto& m : markov_neighbors(mk("n=2 flavor=TM e1"), lim)) {
      CHECK(m.kind != MoveKind::TStab);
      CHECK(m.kind != MoveKind::TDestab);
    }
  }

  SUBCASE("pseudo stabilization lands on one more strand") {
    const auto ms = markov_neighbors(mk("n=2 flavor=PM s1"), lim);
    CHECK(has_move(ms, MoveKind::PseudoStab, mk("n=3 flavor=PM s1 p2")));
    CHECK(has_move(ms, MoveKind::RealStabPos, mk("n=3 flavor=PM s1 s2")));
    CHECK(has_move(ms, MoveKind::RealStabNeg, mk("n=3 flavor=PM s1 S2")));
  }

  SUBCASE("destabilization strips a terminal top-index letter") {
    const auto ms = markov_neighbors(mk("n=3 flavor=PM s1 p2"), lim);
    CHECK(has_move(ms, MoveKind::PseudoDestab, mk("n=2 flavor=PM s1")));
    const auto ms2 = markov_neighbors(mk("n=3 flavor=PM s1 s2"), lim);
    CHECK(has_move(ms2, MoveKind::RealDestab, mk("n=2 flavor=PM s1")));
  }

  SUBCASE("commuting moves cycle a terminal or leading letter") {
    const auto ms = markov_neighbors(mk("n=2 flavor=TPM p1 s1"), lim);
    CHECK(has_move(ms, MoveKind::Commuting, mk("n=2 flavor=TPM s1 p1")));
    const auto ts = markov_neighbors(mk("n=2 flavor=TSM t1 s1"), lim);
    CHECK(has_move(ts, MoveKind::SingularCommuting,
                   mk("n=2 flavor=TSM s1 t1")));
  }

  SUBCASE("conjugation by an invertible letter") {
    const auto ms = markov_neighbors(mk("n=2 flavor=B s1"), lim);
    CHECK(has_move(ms, MoveKind::Conjugation, mk("n=2 flavor=B s1 s1 S1")));
    CHECK(has_move(ms, MoveKind::Conjugation, mk("n=2 flavor=B S1 s1 s1")));
  }

  SUBCASE("l-move removal recognizes an inserted sandwich") {
    const auto ms = lmove_neighbors(mk("n=3 flavor=B s2 S1 S2 s1 s1"), lim);
    bool found = false;
    for (const auto& m : ms)
      if (m.kind == MoveKind::LMove && m.inverse &&
          m.word == mk("n=2 flavor=B s1 s1"))
        found = true;
    CHECK(found);
  }

  SUBCASE("neighbor lists are sorted, unique, and never contain the input") {
    for (const char* text : {"n=2 flavor=TPM s1 p1 e1", "n=3 flavor=TM s1 e2",
                             "n=2 flavor=B s1 S1"}) {
      const Word w = mk(text);
      for (auto* gen : {&markov_neighbors, &lmove_neighbors}) {
        const auto ms = (*gen)(w, lim);
        for (std::size_t k = 0; k + 1 < ms.size(); ++k) {
          CHECK(ms[k].word <= ms[k + 1].word);
          CHECK(ms[k] != ms[k + 1]);
        }
        for (const auto& m : ms) {
          CHECK(m.word != w);
          CHECK(validate_word(m.word) == std::nullopt);
          CHECK(m.word.flavor == w.flavor);
        }
      }
    }
  }

  SUBCASE("limits clamp strand count and length") {
    const Word w = mk("n=2 flavor=PM s1");
    for (const auto& m : markov_neighbors(w, SearchLimits{2, 3})) {
      CHECK(m.word.n <= 2);
      CHECK(m.word.tokens.size() <= 3);
    }
    // Unbounded limits admit the stabilizations again.
    CHECK(!markov_neighbors(w, SearchLimits{}).empty());
  }
}

TEST_CASE("move text") {
  EquivalenceMove m;
  m.kind = MoveKind::TStab;
  m.i = 1;
  m.j = 3;
  CHECK(move_text(m) == "t-stab(1,3)");
  m.kind = MoveKind::Conjugation;
  m.i = 2;
  m.j = -1;
  CHECK(move_text(m) == "conjugation(S2)");
  m.kind = MoveKind::LMove;
  m.lmove = LMoveSpec{2, 1, LMoveKind::Over, LMoveKink::None, 1};
  CHECK(move_text(m) == "l-move(slot=2 strand=1 over kink=none)");
  m.inverse = true;
  CHECK(move_text(m) == "l-move(slot=2 strand=1 over kink=none inverse)");
}

TEST_CASE("fingerprints of word closures") {
  const auto fp = fingerprint_word(mk("n=2 flavor=PM p1 p1"));
  CHECK(fp.components == 2);
  CHECK(fp.outcomes.size() == 3);

  const auto fpe = fingerprint_word(mk("n=2 flavor=B"));
  CHECK(fpe.components == 2);
  CHECK(fpe.outcomes.size() == 1);

  const auto fps = fingerprint_word(mk("n=2 flavor=TM s1 e1"));
  CHECK(fps.components == 1);

  // Singular words factor through the isomorphism onto pre-crossings.
  CHECK(fingerprint_word(mk("n=2 flavor=TSM t1 t1")) ==
        fingerprint_word(mk("n=2 flavor=PM p1 p1")));
}

TEST_CASE("closure equivalence search") {
  SUBCASE("stabilization pair under both move sets") {
    const Word a = mk("n=2 flavor=PM s1");
    const Word b = mk("n=3 flavor=PM s1 s2");
    for (MoveSet set : {MoveSet::Markov, MoveSet::LMove}) {
      const auto v = equivalent_closures(a, b, 200000, set);
      REQUIRE(v.verdict == Verdict::Equivalent);
      REQUIRE(v.certificate.size() == 1);
      CHECK(v.certificate.back().word == b);
      CHECK(certificate_replays(a, v.certificate, set, SearchLimits{5, 60}));
    }
  }

  SUBCASE("distinguished pair carries both fingerprints") {
    const auto v =
        equivalent_closures(mk("n=2 flavor=TM e1"), mk("n=2 flavor=TM"));
    CHECK(v.verdict == Verdict::Distinguished);
    CHECK(partition_block_sizes(v.fp1.partition) == std::vector<int>{2});
    CHECK(partition_block_sizes(v.fp2.partition) == std::vector<int>{1, 1});
  }

  SUBCASE("reflexive pairs need no moves") {
    const auto v = equivalent_closures(mk("n=2 flavor=TPM p1 e1"),
                                       mk("n=2 flavor=TPM p1 e1"));
    CHECK(v.verdict == Verdict::Equivalent);
    CHECK(v.certificate.empty());
  }

  SUBCASE("multi-move chain replays") {
    const Word a = mk("n=2 flavor=PM s1 s1 s1");
    const Word b = mk("n=2 flavor=PM s1 s1 S1 s1 s1");
    const auto v = equivalent_closures(a, b);
    REQUIRE(v.verdict == Verdict::Equivalent);
    CHECK(certificate_replays(a, v.certificate, MoveSet::Markov,
                              SearchLimits{5, 27}));
    CHECK(v.certificate.back().word == b);
    // Every intermediate word keeps the closure fingerprint.
    for (const auto& m : v.certificate)
      CHECK(fingerprint_word(m.word) == fingerprint_word(a));
  }

  SUBCASE("identical runs give identical certificates") {
    const Word a = mk("n=2 flavor=TPM s1 p1");
    const Word b = mk("n=3 flavor=TPM s1 p1 s2");
    const auto v1 = equivalent_closures(a, b);
    const auto v2 = equivalent_closures(a, b);
    CHECK(v1.verdict == Verdict::Equivalent);
    CHECK(v2.verdict == v1.verdict);
    CHECK(v1.certificate == v2.certificate);
    CHECK(v1.visited == v2.visited);
  }

  SUBCASE("tiny budgets give up without a wrong answer") {
    const auto v = equivalent_closures(mk("n=2 flavor=PM s1"),
                                       mk("n=3 flavor=PM s1 s2"), 3);
    CHECK(v.verdict == Verdict::Unknown);
    CHECK(v.visited <= 3);
  }

  SUBCASE("flavor mismatch and invalid words throw") {
    CHECK_THROWS_AS(equivalent_closures(mk("n=2 flavor=TM e1"),
                                        mk("n=2 flavor=TPM e1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        equivalent_closures(Word{2, Flavor::B, {tie(1)}}, mk("n=2 flavor=B")),
        std::invalid_argument);
  }
}

TEST_CASE("sampled moves preserve the closure fingerprint") {
  std::mt19937 rng(20250815);
  const Flavor flavors[] = {Flavor::B, Flavor::PM, Flavor::TM, Flavor::TSM,
                            Flavor::TPM};
  int checked = 0, gates = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Flavor f = flavors[rng() % 5];
    const int n = 2 + static_cast<int>(rng() % 3);
    Word w{n, f, {}};
    const int len = static_cast<int>(rng() % 6);
    for (int k = 0; k < len; ++k) {
      const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      switch (rng() % 5) {
        case 0: w.tokens.push_back(sigma(i)); break;
        case 1: w.tokens.push_back(sigma_inv(i)); break;
        case 2:
          w.tokens.push_back(kind_legal(f, TokenKind::Pre) ? pre(i) : sigma(i));
          break;
        case 3:
          w.tokens.push_back(kind_legal(f, TokenKind::Singular) ? singular(i)
                                                                : sigma_inv(i));
          break;
        default:
          w.tokens.push_back(kind_legal(f, TokenKind::Tie) ? tie(i) : sigma(i));
      }
    }
    const auto base = fingerprint_word(w);
    const auto gens = (trial % 2 == 0)
                          ? markov_neighbors(w, SearchLimits{n + 2, 30})
                          : lmove_neighbors(w, SearchLimits{n + 2, 30});
    for (std::size_t k = 0; k < gens.size(); k += 7) {  // stride sample
      CAPTURE(word_text(w));
      CAPTURE(move_text(gens[k]));
      CHECK(fingerprint_word(gens[k].word) == base);
      ++checked;
    }
    // Tie stabilizations must only join strands whose closure arcs already
    // meet: top position i must close onto top position j.
    const Permutation p = permutation_of(w);
    for (const auto& m : gens)
      if (m.kind == MoveKind::TStab || m.kind == MoveKind::TDestab) {
        CHECK(p(m.i) == m.j);
        ++gates;
      }
  }
  CHECK(checked > 100);
  MESSAGE("sampled " << checked << " moves, " << gates << " tie-gated");
}

TEST_CASE("singular certificates transport along the isomorphism") {
  // Map a singular-flavor certificate token-wise onto pre-crossings; the
  // result must replay verbatim as a pre-flavor certificate.
  const Word a = mk("n=2 flavor=TSM t1 s1");
  const Word b = mk("n=3 flavor=TSM s1 t1 s2");
  const auto v = equivalent_closures(a, b, 200000);
  REQUIRE(v.verdict == Verdict::Equivalent);
  REQUIRE(certificate_replays(a, v.certificate, MoveSet::Markov,
                              SearchLimits{6, 40}));

  EquivalenceCertificate mapped = v.certificate;
  for (auto& m : mapped) {
    m.word = map_flavor_mu(m.word);
    if (m.kind == MoveKind::SingularCommuting) m.kind = MoveKind::Commuting;
  }
  CHECK(certificate_replays(map_flavor_mu(a), mapped, MoveSet::Markov,
                            SearchLimits{6, 40}));
  CHECK(mapped.back().word == map_flavor_mu(b));
}
