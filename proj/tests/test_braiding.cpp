#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpl/braiding.hpp"
#include "tpl/diagram.hpp"
#include "tpl/word.hpp"

using namespace tpl;

namespace {

Word mk(const std::string& text) {
  auto r = parse_word(text);
  REQUIRE_MESSAGE(r.word.has_value(), r.error);
  return *r.word;
}

int pre_count(const MorseDiagram& d) {
  int k = 0;
  for (const auto& row : d.rows) k += row.kind == EventKind::PreCross;
  return k;
}

// Half-turn rotation of a closed diagram: rows reverse, cups and caps swap,
// lanes mirror within each gap's width. An ambient isotopy, so component
// count, partition and outcome multiset are all preserved; braiding the
// rotated diagram exercises every generic-position path in the algorithm.
MorseDiagram rotate_half_turn(const MorseDiagram& d) {
  std::vector<int> w(d.rows.size() + 1, 0);
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    const EventKind k = d.rows[r].kind;
    const int delta = k == EventKind::Cup ? 2 : k == EventKind::Cap ? -2 : 0;
    w[r + 1] = w[r] + delta;
  }
  MorseDiagram out{true, 0, {}};
  for (int r = static_cast<int>(d.rows.size()) - 1; r >= 0; --r) {
    const MorseEvent& e = d.rows[static_cast<std::size_t>(r)];
    const int above = w[static_cast<std::size_t>(r)];
    const int below = w[static_cast<std::size_t>(r) + 1];
    switch (e.kind) {
      case EventKind::Cup: out.rows.push_back(cap(below - e.i)); break;
      case EventKind::Cap: out.rows.push_back(cup(above - e.i)); break;
      case EventKind::CrossPos: out.rows.push_back(cross_pos(above - e.i)); break;
      case EventKind::CrossNeg: out.rows.push_back(cross_neg(above - e.i)); break;
      case EventKind::PreCross: out.rows.push_back(pre_cross(above - e.i)); break;
      case EventKind::Tie: {
        const int a = above + 1 - e.i, b = above + 1 - e.j;
        out.rows.push_back(tie_event(std::min(a, b), std::max(a, b)));
        break;
      }
    }
  }
  return out;
}

Word random_word(std::mt19937& rng, int max_n, int max_len, bool ties) {
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  Word w{n, Flavor::TPM, {}};
  for (int k = 0; k < len && n >= 2; ++k) {
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    switch (rng() % 5) {
      case 0:
      case 1: w.tokens.push_back(sigma(i)); break;
      case 2: w.tokens.push_back(sigma_inv(i)); break;
      case 3: w.tokens.push_back(pre(i)); break;
      default:
        w.tokens.push_back(ties ? tie(i) : sigma_inv(i));
        break;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("orienting pre-crossings downward") {
  SUBCASE("closure diagrams are already downward") {
    const MorseDiagram d = close_braid(mk("n=2 flavor=PM p1 p1"));
    CHECK(orient_precrossings_down(d) == d);
  }

  SUBCASE("a pre-kinked unknot gets rewired, keeping count and fingerprint") {
    const MorseDiagram d{true, 0, {cup(1), pre_cross(1), cap(1)}};
    REQUIRE(validate_diagram(d) == std::nullopt);
    const MorseDiagram o = orient_precrossings_down(d);
    CHECK(validate_diagram(o) == std::nullopt);
    CHECK(o != d);
    CHECK(pre_count(o) == 1);
    CHECK(fingerprint(o) == fingerprint(d));
  }

  SUBCASE("count and fingerprint are stable on rotated closures") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_word(rng, 3, 6, true);
      const MorseDiagram rot = rotate_half_turn(close_braid(w));
      REQUIRE(validate_diagram(rot) == std::nullopt);
      const MorseDiagram o = orient_precrossings_down(rot);
      CAPTURE(word_text(w));
      CHECK(validate_diagram(o) == std::nullopt);
      CHECK(pre_count(o) == pre_count(rot));
      CHECK(fingerprint(o) == fingerprint(rot));
    }
  }
}

TEST_CASE("braiding a diagram") {
  SUBCASE("unknot braids to the empty one-strand word") {
    const Word w = braid_diagram(MorseDiagram{true, 0, {cup(1), cap(1)}});
    CHECK(w.n == 1);
    CHECK(w.tokens.empty());
    CHECK(w.flavor == Flavor::TPM);
  }

  SUBCASE("a braid closure reads back as itself") {
    const Word h = mk("n=2 flavor=B s1 s1");
    const Word back = braid_diagram(close_braid(h));
    CHECK(back.n == 2);
    CHECK(back.tokens == h.tokens);
  }

  SUBCASE("pre-kinked unknot") {
    const Word w = braid_diagram(
        MorseDiagram{true, 0, {cup(1), pre_cross(1), cap(1)}});
    const auto fp = fingerprint(close_braid(w));
    CHECK(fp.components == 1);
    REQUIRE(fp.outcomes.size() == 1);
    CHECK(fp.outcomes[0].first.empty());
    CHECK(fp.outcomes[0].second == dyadic(1, 0));
  }

  SUBCASE("tied closure example") {
    const MorseDiagram d = close_braid(mk("n=2 flavor=TM e1 s1 s1"));
    const Word back = braid_diagram(d);
    const auto fp = fingerprint(close_braid(back));
    CHECK(fp.components == 2);
    CHECK(partition_block_sizes(fp.partition) == std::vector<int>{2});
    const std::vector<std::pair<std::vector<int>, Dyadic>> want{
        {{2}, dyadic(1, 0)}};
    CHECK(fp.outcomes == want);
  }

  SUBCASE("empty diagrams are rejected") {
    CHECK_THROWS_AS(braid_diagram(MorseDiagram{true, 0, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(braid_diagram(MorseDiagram{true, 0, {cup(2), cap(1)}}),
                    std::invalid_argument);
  }

  SUBCASE("random closures round-trip their fingerprints") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 120; ++trial) {
      const Word w = random_word(rng, 3, 6, true);
      const MorseDiagram d = close_braid(w);
      const Word back = braid_diagram(d);
      CAPTURE(word_text(w));
      CHECK(fingerprint(close_braid(back)) == fingerprint(d));
    }
  }

  SUBCASE("rotated closures round-trip their fingerprints") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word(rng, 3, 6, true);
      const MorseDiagram rot = rotate_half_turn(close_braid(w));
      REQUIRE(validate_diagram(rot) == std::nullopt);
      const InvariantFingerprint want = fingerprint(rot);
      const Word back = braid_diagram(rot);
      CAPTURE(word_text(w));
      CHECK(fingerprint(close_braid(back)) == want);
    }
  }
}

TEST_CASE("L-moves") {
  SUBCASE("bottom-right moves degenerate to stabilization") {
    const Word w = apply_l_move(Word{1, Flavor::B, {}},
                                {0, 1, LMoveKind::Over, LMoveKink::None, 1});
    CHECK(w.n == 2);
    CHECK(w.tokens == std::vector<Token>{sigma(1)});

    const Word u = apply_l_move(Word{1, Flavor::B, {}},
                                {0, 1, LMoveKind::Under, LMoveKink::None, 1});
    CHECK(u.tokens == std::vector<Token>{sigma_inv(1)});

    const Word p = apply_l_move(
        Word{1, Flavor::PM, {}},
        {0, 1, LMoveKind::Over, LMoveKink::PreCrossing, 1});
    CHECK(p.n == 2);
    CHECK(p.tokens == std::vector<Token>{pre(1)});
  }

  SUBCASE("interior move emits the crossing sandwich") {
    // Cutting strand 1 of s1 s1 before the first token: the new strand 3
    // crosses under everything on its way down and back.
    const Word w = apply_l_move(mk("n=2 flavor=B s1 s1"),
                                {0, 1, LMoveKind::Under, LMoveKink::None, 1});
    CHECK(w.n == 3);
    CHECK(w.tokens == mk("n=3 flavor=B s2 S1 S2 s1 s1").tokens);
  }

  SUBCASE("bad specs throw") {
    const Word w = mk("n=2 flavor=B s1");
    CHECK_THROWS_AS(apply_l_move(w, {2, 1, LMoveKind::Over, LMoveKink::None, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_l_move(w, {0, 3, LMoveKind::Over, LMoveKink::None, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_l_move(w, {0, 0, LMoveKind::Over, LMoveKink::None, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        apply_l_move(w, {0, 1, LMoveKind::Over, LMoveKink::PreCrossing, 1}),
        std::invalid_argument);
  }

  SUBCASE("random moves preserve the closure fingerprint") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = random_word(rng, 3, 5, false);
      LMoveSpec spec;
      spec.slot = static_cast<int>(
          rng() % static_cast<unsigned>(w.tokens.size() + 1));
      spec.strand = 1 + static_cast<int>(rng() % static_cast<unsigned>(w.n));
      spec.kind = (rng() % 2) ? LMoveKind::Over : LMoveKind::Under;
      switch (rng() % 3) {
        case 0: spec.kink = LMoveKink::None; break;
        case 1:
          spec.kink = LMoveKink::Classical;
          spec.kink_sign = (rng() % 2) ? 1 : -1;
          break;
        default: spec.kink = LMoveKink::PreCrossing; break;
      }
      const Word v = apply_l_move(w, spec);
      CAPTURE(word_text(w));
      CAPTURE(spec.slot);
      CAPTURE(spec.strand);
      CHECK(v.n == w.n + 1);
      CHECK(fingerprint(close_braid(v)) == fingerprint(close_braid(w)));
    }
  }
}
