#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpl/diagram.hpp"
#include "tpl/word.hpp"

using namespace tpl;

namespace {

Word mk(const std::string& text) {
  auto r = parse_word(text);
  REQUIRE_MESSAGE(r.word.has_value(), r.error);
  return *r.word;
}

}  // namespace

TEST_CASE("dyadic arithmetic") {
  CHECK(dyadic(2, 1) == Dyadic{1, 0});
  CHECK(dyadic(0, 7) == Dyadic{0, 0});
  CHECK(dyadic(3, 3) == Dyadic{3, 3});
  CHECK(dyadic_add(dyadic(1, 1), dyadic(1, 1)) == Dyadic{1, 0});
  CHECK(dyadic_add(dyadic(1, 2), dyadic(1, 3)) == Dyadic{3, 3});
  CHECK(dyadic_text(dyadic(3, 3)) == "3/8");
  CHECK(dyadic_text(dyadic(4, 2)) == "1");
  CHECK(dyadic_text(dyadic(2, 2)) == "1/2");
}

TEST_CASE("diagram validation") {
  CHECK(validate_diagram(MorseDiagram{true, 0, {cup(1), cap(1)}}) ==
        std::nullopt);
  CHECK(validate_diagram(MorseDiagram{false, 2, {cross_pos(1)}}) ==
        std::nullopt);
  CHECK(validate_diagram(MorseDiagram{false, 2, {}}) == std::nullopt);

  // Closed boundary left open.
  CHECK(validate_diagram(MorseDiagram{true, 0, {cup(1)}}) != std::nullopt);
  // Crossing out of range for the current width.
  CHECK(validate_diagram(MorseDiagram{true, 0, {cup(1), cross_pos(2), cap(1)}})
        != std::nullopt);
  // Cap before any strands exist.
  CHECK(validate_diagram(MorseDiagram{true, 0, {cap(1)}}) != std::nullopt);
  // Tie needs two distinct positions.
  CHECK(validate_diagram(MorseDiagram{true, 0, {cup(1), tie_event(1, 1), cap(1)}})
        != std::nullopt);
  // Braid boundary width must be restored at the bottom.
  CHECK(validate_diagram(MorseDiagram{false, 2, {cup(1)}}) != std::nullopt);
  // Cup can extend the width by two anywhere up to width+1.
  CHECK(validate_diagram(MorseDiagram{true, 0, {cup(1), cup(4), cap(1), cap(1)}})
        != std::nullopt);
}

TEST_CASE("diagram text round trip") {
  const MorseDiagram d{true, 0,
                       {cup(1), cup(2), cross_pos(2), cross_neg(1),
                        pre_cross(3), tie_event(1, 4), cap(2), cap(1)}};
  const auto parsed = parse_diagram(serialize_diagram(d));
  REQUIRE(parsed.diagram.has_value());
  CHECK(*parsed.diagram == d);

  const MorseDiagram braid{false, 3, {cross_pos(1), pre_cross(2)}};
  const auto parsed2 = parse_diagram(serialize_diagram(braid));
  REQUIRE(parsed2.diagram.has_value());
  CHECK(*parsed2.diagram == braid);

  CHECK_FALSE(parse_diagram("").diagram.has_value());
  CHECK_FALSE(parse_diagram("morse open").diagram.has_value());
  CHECK_FALSE(parse_diagram("morse braid n=0").diagram.has_value());
  CHECK_FALSE(parse_diagram("morse closed\nzz 1").diagram.has_value());
  CHECK_FALSE(parse_diagram("morse closed\ntie 1").diagram.has_value());
}

TEST_CASE("closing a braid word") {
  SUBCASE("empty word on one strand is the unknot") {
    const MorseDiagram d = close_braid(Word{1, Flavor::B, {}});
    CHECK(d.rows == std::vector<MorseEvent>{cup(1), cap(1)});
    const auto cr = components(d);
    CHECK(cr.map.count == 1);
    CHECK(cr.partition == discrete_partition(1));
  }

  SUBCASE("row layout: cups, body, caps") {
    const Word w = mk("n=2 flavor=TM s1 e1");
    const MorseDiagram d = close_braid(w);
    REQUIRE(d.closed);
    REQUIRE(d.rows.size() == 6);  // 2 cups + 2 body rows + 2 caps
    CHECK(d.rows[0].kind == EventKind::Cup);
    CHECK(d.rows[1].kind == EventKind::Cup);
    CHECK(d.rows[2] == cross_pos(1));  // braid lanes 1..n, return arcs right
    CHECK(d.rows[3].kind == EventKind::Tie);
    CHECK(d.rows[4].kind == EventKind::Cap);
    CHECK(d.rows[5].kind == EventKind::Cap);
    CHECK(validate_diagram(d) == std::nullopt);
  }

  SUBCASE("token kinds map to event kinds") {
    const MorseDiagram d = close_braid(mk("n=3 flavor=TPM s1 S2 p1"));
    std::vector<EventKind> body(3);
    for (int k = 0; k < 3; ++k) body[static_cast<std::size_t>(k)] =
        d.rows[static_cast<std::size_t>(3 + k)].kind;
    CHECK(body == std::vector<EventKind>{EventKind::CrossPos,
                                         EventKind::CrossNeg,
                                         EventKind::PreCross});
  }

  SUBCASE("singular words are rejected") {
    CHECK_THROWS_AS(close_braid(mk("n=2 flavor=TSM t1")),
                    std::invalid_argument);
    CHECK_NOTHROW(close_braid(map_flavor_mu(mk("n=2 flavor=TSM t1"))));
  }
}

TEST_CASE("component tracing and linking numbers") {
  SUBCASE("positive Hopf link") {
    const MorseDiagram d = close_braid(mk("n=2 flavor=B s1 s1"));
    const auto cr = components(d);
    CHECK(cr.map.count == 2);
    CHECK(cr.partition == discrete_partition(2));
    const auto recs = crossing_records(d, cr.map);
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) {
      CHECK(r.kind == EventKind::CrossPos);
      CHECK(r.comp_a != r.comp_b);
    }
    CHECK(linking_vector(d) == std::vector<int>{2});
  }

  SUBCASE("negative Hopf link") {
    CHECK(linking_vector(close_braid(mk("n=2 flavor=B S1 S1"))) ==
          std::vector<int>{-2});
  }

  SUBCASE("trefoil is a knot: empty linking vector") {
    const MorseDiagram d = close_braid(mk("n=2 flavor=B s1 s1 s1"));
    CHECK(components(d).map.count == 1);
    CHECK(linking_vector(d).empty());
  }

  SUBCASE("cancelling crossings give linking zero") {
    CHECK(linking_vector(close_braid(mk("n=2 flavor=B s1 S1"))) ==
          std::vector<int>{0});
  }

  SUBCASE("three-component closure") {
    // s1 s1 on 3 strands closes to a Hopf link plus a split unknot.
    const MorseDiagram d = close_braid(mk("n=3 flavor=B s1 s1"));
    CHECK(components(d).map.count == 3);
    CHECK(linking_vector(d) == std::vector<int>{0, 0, 2});
  }

  SUBCASE("pre-crossings are rejected") {
    CHECK_THROWS_AS(linking_vector(close_braid(mk("n=2 flavor=PM p1"))),
                    std::invalid_argument);
  }

  SUBCASE("ties merge the partition but not the components") {
    const auto cr = components(close_braid(mk("n=2 flavor=TM e1 s1 s1")));
    CHECK(cr.map.count == 2);
    CHECK(cr.partition.blocks == std::vector<std::vector<int>>{{1, 2}});
  }
}

TEST_CASE("resolution enumeration") {
  const MorseDiagram d = close_braid(mk("n=2 flavor=PM p1 p1"));

  std::vector<Resolution> seen;
  enumerate_resolutions(d, [&](const Resolution& r, const MorseDiagram& rd) {
    seen.push_back(r);
    CHECK(validate_diagram(rd) == std::nullopt);
    for (const auto& row : rd.rows) CHECK(row.kind != EventKind::PreCross);
  });
  const EventKind P = EventKind::CrossPos, N = EventKind::CrossNeg;
  CHECK(seen == std::vector<Resolution>{{{P, P}}, {{P, N}}, {{N, P}}, {{N, N}}});

  const auto all = all_resolutions(d);
  REQUIRE(all.size() == 4);
  CHECK(all[0].first == Resolution{{P, P}});
  CHECK(all[0].second.rows[2] == cross_pos(1));
  CHECK(all[3].second.rows[3] == cross_neg(1));

  // A classical diagram has exactly one (empty) resolution.
  CHECK(all_resolutions(close_braid(mk("n=2 flavor=B s1"))).size() == 1);

  CHECK_THROWS_AS(
      enumerate_resolutions(close_braid(mk("n=2 flavor=PM p1 p1 p1")),
                            [](const Resolution&, const MorseDiagram&) {}, 2),
      std::invalid_argument);
}

TEST_CASE("fingerprint basics") {
  SUBCASE("unknot") {
    const auto fp = fingerprint(close_braid(Word{1, Flavor::B, {}}));
    CHECK(fp.components == 1);
    CHECK(fp.outcomes ==
          std::vector<std::pair<std::vector<int>, Dyadic>>{{{}, dyadic(1, 0)}});
  }

  SUBCASE("two pre-crossings on two strands") {
    const auto fp = fingerprint(close_braid(mk("n=2 flavor=PM p1 p1")));
    CHECK(fp.components == 2);
    CHECK(fp.partition == discrete_partition(2));
    const std::vector<std::pair<std::vector<int>, Dyadic>> want{
        {{-2}, dyadic(1, 2)}, {{0}, dyadic(1, 1)}, {{2}, dyadic(1, 2)}};
    CHECK(fp.outcomes == want);
    CHECK(fingerprint_text(fp) ==
          "components=2\npartition={1} {2}\n[-2/2] 1/4\n[0/2] 1/2\n[2/2] 1/4\n");
  }

  SUBCASE("label-free comparison ignores component numbering") {
    InvariantFingerprint a{2, partition_from_pairs(2, {{1, 2}}), {}};
    InvariantFingerprint b{2, partition_from_pairs(2, {{2, 1}}), {}};
    CHECK(a == b);
    InvariantFingerprint c{2, discrete_partition(2), {}};
    CHECK(a != c);
  }

  SUBCASE("convolution fast path matches brute-force enumeration") {
    std::mt19937 rng(987654);
    const TokenKind kinds[] = {TokenKind::SigmaPos, TokenKind::SigmaNeg,
                               TokenKind::Pre, TokenKind::Tie};
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const int len = static_cast<int>(rng() % 9);
      Word w{n, Flavor::TPM, {}};
      for (int k = 0; k < len; ++k)
        w.tokens.push_back(Token{kinds[rng() % 4],
                                 1 + static_cast<int>(rng() % (n - 1))});
      const MorseDiagram d = close_braid(w);
      CAPTURE(word_text(w));
      const auto fast = fingerprint(d);
      const auto slow = fingerprint_by_enumeration(d);
      CHECK(fast == slow);
      // The labeled forms must agree exactly too: same traversal order.
      CHECK(fast.partition == slow.partition);
      CHECK(fast.outcomes == slow.outcomes);
      Dyadic total{0, 0};
      for (const auto& [vec, wgt] : fast.outcomes)
        total = dyadic_add(total, wgt);
      CHECK(total == Dyadic{1, 0});
    }
  }

  SUBCASE("pre-crossing cap") {
    Word w{2, Flavor::PM, {}};
    for (int k = 0; k < 21; ++k) w.tokens.push_back(pre(1));
    CHECK_THROWS_AS(fingerprint(close_braid(w)), std::invalid_argument);
    CHECK_NOTHROW(fingerprint(close_braid(w), 21));
  }

  SUBCASE("open diagrams are rejected") {
    CHECK_THROWS_AS(fingerprint(MorseDiagram{false, 2, {cross_pos(1)}}),
                    std::invalid_argument);
  }
}
