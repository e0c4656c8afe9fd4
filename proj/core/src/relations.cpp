#include "tpl/relations.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>

namespace tpl {

namespace {

using Tokens = std::vector<Token>;

// The flavor's transposition-like non-invertible crossing, if any.
std::optional<TokenKind> transposition_kind(Flavor f) {
  switch (f) {
    case Flavor::PM:
    case Flavor::TPM:
      return TokenKind::Pre;
    case Flavor::TSM:
      return TokenKind::Singular;
    default:
      return std::nullopt;
  }
}

bool has_ties(Flavor f) {
  return f == Flavor::TM || f == Flavor::TSM || f == Flavor::TPM;
}

Token tk(TokenKind k, int i) { return Token{k, i}; }

Tokens cat(std::initializer_list<Tokens> parts) {
  Tokens out;
  for (const Tokens& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

void add(std::vector<Relation>& rules, Tokens lhs, Tokens rhs) {
  rules.emplace_back(std::move(lhs), std::move(rhs));
}

constexpr TokenKind kS = TokenKind::SigmaPos;
constexpr TokenKind kN = TokenKind::SigmaNeg;
constexpr TokenKind kE = TokenKind::Tie;

}  // namespace

std::vector<Relation> dedupe_relations(std::vector<Relation> rules) {
  std::set<Relation> seen;
  std::vector<Relation> out;
  out.reserve(rules.size());
  for (Relation& r : rules) {
    if (r.first == r.second) continue;
    Relation key = std::min(r, Relation{r.second, r.first});
    if (seen.insert(std::move(key)).second) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Relation> relations_of(Flavor flavor, int n) {
  if (n < 2) throw std::invalid_argument("relations_of: need n >= 2");
  std::vector<Relation> rules;
  // Braid relations and sigma cancellation.
  for (int i = 1; i + 1 < n; ++i)
    for (int j = i + 2; j < n; ++j)
      add(rules, {sigma(i), sigma(j)}, {sigma(j), sigma(i)});
  for (int i = 1; i + 2 < n + 1; ++i)
    add(rules, {sigma(i), sigma(i + 1), sigma(i)},
        {sigma(i + 1), sigma(i), sigma(i + 1)});
  for (int i = 1; i < n; ++i) {
    add(rules, {sigma(i), sigma_inv(i)}, {});
    add(rules, {sigma_inv(i), sigma(i)}, {});
  }
  if (has_ties(flavor)) {
    // Ties commute with each other and are idempotent.
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        add(rules, {tie(i), tie(j)}, {tie(j), tie(i)});
    for (int i = 1; i < n; ++i)
      add(rules, {tie(i), sigma(i)}, {sigma(i), tie(i)});
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) > 1)
          add(rules, {tie(i), sigma(j)}, {sigma(j), tie(i)});
    // A tie passes an adjacent crossing pair, moving to the other strand pair.
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) == 1) {
          for (TokenKind e : {kS, kN})
            add(rules, {tie(i), sigma(j), tk(e, i)},
                {sigma(j), tk(e, i), tie(j)});
          Tokens w1{tie(i), tie(j), sigma(i)};
          Tokens w2{tie(j), sigma(i), tie(j)};
          Tokens w3{sigma(i), tie(i), tie(j)};
          add(rules, w1, w2);
          add(rules, w2, w3);
          add(rules, w1, w3);
        }
    for (int i = 1; i < n; ++i) add(rules, {tie(i), tie(i)}, {tie(i)});
  }
  if (auto pk = transposition_kind(flavor)) {
    TokenKind p = *pk;
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        add(rules, {tk(p, i), tk(p, j)}, {tk(p, j), tk(p, i)});
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) >= 2 || i == j)
          for (TokenKind a : {kS, kN})
            add(rules, {tk(p, i), tk(a, j)}, {tk(a, j), tk(p, i)});
    for (int i = 1; i + 1 < n; ++i) {
      add(rules, {sigma(i), sigma(i + 1), tk(p, i)},
          {tk(p, i + 1), sigma(i), sigma(i + 1)});
      add(rules, {sigma(i + 1), sigma(i), tk(p, i + 1)},
          {tk(p, i), sigma(i + 1), sigma(i)});
    }
  }
  if (flavor == Flavor::TSM || flavor == Flavor::TPM) {
    TokenKind p = *transposition_kind(flavor);
    for (int i = 1; i < n; ++i) {
      add(rules, {tk(p, i), tie(i)}, {tie(i), tk(p, i)});
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) >= 2)
          add(rules, {tk(p, i), tie(j)}, {tie(j), tk(p, i)});
    }
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) == 1) {
          add(rules, {tie(i), tk(p, j), tk(p, i)},
              {tk(p, j), tk(p, i), tie(j)});
          Tokens w1{tie(i), tie(j), tk(p, i)};
          Tokens w2{tie(j), tk(p, i), tie(j)};
          Tokens w3{tk(p, i), tie(i), tie(j)};
          add(rules, w1, w2);
          add(rules, w2, w3);
          add(rules, w1, w3);
          add(rules, {tie(i), tk(p, j), sigma(i)},
              {tk(p, j), sigma(i), tie(j)});
          add(rules, {tie(i), sigma(j), tk(p, i)},
              {sigma(j), tk(p, i), tie(j)});
          add(rules, {tk(p, i), tie(j)},
              {sigma(i), tie(j), sigma_inv(i), tk(p, i)});
        }
  }
  return dedupe_relations(std::move(rules));
}

std::vector<Relation> sign_variant_rules(Flavor flavor, int n) {
  std::vector<Relation> rules;
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      for (TokenKind a : {kS, kN})
        for (TokenKind b : {kS, kN})
          add(rules, {tk(a, i), tk(b, j)}, {tk(b, j), tk(a, i)});
  // Braid conjugation sign patterns s_i^a s_{i+1}^b s_i^c = s_{i+1}^c s_i^b
  // s_{i+1}^a; valid exactly when (a, b, c) is not (+,-,+) or (-,+,-).
  static constexpr TokenKind kTriples[6][3] = {
      {kS, kS, kS}, {kS, kS, kN}, {kS, kN, kN},
      {kN, kS, kS}, {kN, kN, kS}, {kN, kN, kN}};
  for (int i = 1; i + 1 < n; ++i)
    for (const auto& t : kTriples)
      add(rules, {tk(t[0], i), tk(t[1], i + 1), tk(t[2], i)},
          {tk(t[2], i + 1), tk(t[1], i), tk(t[0], i + 1)});
  if (has_ties(flavor)) {
    for (int i = 1; i < n; ++i) {
      add(rules, {tie(i), sigma_inv(i)}, {sigma_inv(i), tie(i)});
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) > 1)
          add(rules, {tie(i), sigma_inv(j)}, {sigma_inv(j), tie(i)});
    }
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) == 1) {
          for (TokenKind e : {kS, kN})
            add(rules, {tie(i), sigma_inv(j), tk(e, i)},
                {sigma_inv(j), tk(e, i), tie(j)});
          Tokens w1{tie(i), tie(j), sigma_inv(i)};
          Tokens w2{tie(j), sigma_inv(i), tie(j)};
          Tokens w3{sigma_inv(i), tie(i), tie(j)};
          add(rules, w1, w2);
          add(rules, w2, w3);
          add(rules, w1, w3);
        }
  }
  if (auto pk = transposition_kind(flavor)) {
    TokenKind p = *pk;
    for (int i = 1; i + 1 < n; ++i) {
      add(rules, {sigma_inv(i), sigma_inv(i + 1), tk(p, i)},
          {tk(p, i + 1), sigma_inv(i), sigma_inv(i + 1)});
      add(rules, {sigma_inv(i + 1), sigma_inv(i), tk(p, i + 1)},
          {tk(p, i), sigma_inv(i + 1), sigma_inv(i)});
      // Conjugation sign patterns s_i^a p_{i+1} s_i^c = s_{i+1}^c p_i
      // s_{i+1}^a; valid exactly for (a, c) in {(+,-), (-,+)}.
      for (auto [a, c] : {std::pair{kS, kN}, std::pair{kN, kS}})
        add(rules, {tk(a, i), tk(p, i + 1), tk(c, i)},
            {tk(c, i + 1), tk(p, i), tk(a, i + 1)});
    }
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) > 1)
          add(rules, {tk(p, i), sigma_inv(j)}, {sigma_inv(j), tk(p, i)});
  }
  if (flavor == Flavor::TSM || flavor == Flavor::TPM) {
    TokenKind p = *transposition_kind(flavor);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) == 1) {
          add(rules, {tie(i), tk(p, j), sigma_inv(i)},
              {tk(p, j), sigma_inv(i), tie(j)});
          add(rules, {tie(i), sigma_inv(j), tk(p, i)},
              {sigma_inv(j), tk(p, i), tie(j)});
          add(rules, {tk(p, i), tie(j)},
              {sigma_inv(i), tie(j), sigma(i), tk(p, i)});
        }
  }
  return dedupe_relations(std::move(rules));
}

std::vector<Relation> adjacent_tie_slide_rules(Flavor flavor, int n) {
  std::vector<Relation> rules;
  for (int a = 1; a + 1 < n; ++a)
    for (auto [e, f] : {std::pair{kS, kN}, std::pair{kN, kS}}) {
      add(rules, {tk(e, a), sigma(a + 1), sigma(a + 1), tk(f, a)},
          {tk(f, a + 1), sigma(a), sigma(a), tk(e, a + 1)});
      add(rules, {tk(e, a + 1), sigma(a), sigma(a), tk(f, a + 1)},
          {tk(f, a), sigma(a + 1), sigma(a + 1), tk(e, a)});
      add(rules, {tk(e, a), sigma_inv(a + 1), sigma_inv(a + 1), tk(f, a)},
          {tk(f, a + 1), sigma_inv(a), sigma_inv(a), tk(e, a + 1)});
      add(rules, {tk(e, a + 1), sigma_inv(a), sigma_inv(a), tk(f, a + 1)},
          {tk(f, a), sigma_inv(a + 1), sigma_inv(a + 1), tk(e, a)});
    }
  if (auto pk = transposition_kind(flavor)) {
    TokenKind p = *pk;
    for (int a = 1; a + 1 < n; ++a)
      for (auto [e, f] : {std::pair{kS, kN}, std::pair{kN, kS}}) {
        add(rules, {tk(e, a), sigma(a + 1), tk(p, a + 1), tk(f, a)},
            {tk(f, a + 1), sigma(a), tk(p, a), tk(e, a + 1)});
        add(rules, {tk(e, a + 1), sigma(a), tk(p, a), tk(f, a + 1)},
            {tk(f, a), sigma(a + 1), tk(p, a + 1), tk(e, a)});
      }
  }
  if (has_ties(flavor)) {
    for (int a = 1; a + 1 < n; ++a) {
      add(rules, {sigma(a), sigma(a), tie(a + 1)},
          {tie(a + 1), sigma(a), sigma(a)});
      add(rules, {sigma_inv(a), sigma_inv(a), tie(a + 1)},
          {tie(a + 1), sigma_inv(a), sigma_inv(a)});
      add(rules, {sigma(a + 1), sigma(a + 1), tie(a)},
          {tie(a), sigma(a + 1), sigma(a + 1)});
      add(rules, {sigma_inv(a + 1), sigma_inv(a + 1), tie(a)},
          {tie(a), sigma_inv(a + 1), sigma_inv(a + 1)});
    }
  }
  if (flavor == Flavor::TSM || flavor == Flavor::TPM) {
    TokenKind p = *transposition_kind(flavor);
    for (int a = 1; a + 1 < n; ++a) {
      add(rules, {sigma(a), tk(p, a), tie(a + 1)},
          {tie(a + 1), sigma(a), tk(p, a)});
      add(rules, {sigma(a + 1), tk(p, a + 1), tie(a)},
          {tie(a), sigma(a + 1), tk(p, a + 1)});
      add(rules, {tk(p, a), tie(a + 1), sigma(a)},
          {sigma(a), tie(a + 1), tk(p, a)});
      add(rules, {tk(p, a + 1), tie(a), sigma(a + 1)},
          {sigma(a + 1), tie(a), tk(p, a + 1)});
    }
  }
  return dedupe_relations(std::move(rules));
}

std::vector<Relation> far_block_slide_rules(Flavor flavor, int n, int max_span) {
  std::vector<Relation> rules;
  if (!has_ties(flavor)) return rules;
  std::vector<TokenKind> kinds{kS, kN};
  if (auto pk = transposition_kind(flavor)) kinds.push_back(*pk);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      int span = j - i - 1;
      if (max_span >= 0 && span > max_span) continue;
      Tokens block = generalized_tie_tokens(i, j);
      for (int a = 1; a < n; ++a) {
        if (!(a <= i - 2 || a >= j + 1)) continue;
        for (TokenKind k : kinds)
          add(rules, cat({{tk(k, a)}, block}), cat({block, {tk(k, a)}}));
      }
    }
  return dedupe_relations(std::move(rules));
}

std::vector<Relation> square_block_slide_rules(Flavor flavor, int n, int max_span) {
  std::vector<Relation> rules;
  if (!has_ties(flavor)) return rules;
  auto pk = transposition_kind(flavor);
  for (int a = 1; a < n; ++a)
    for (int j = a + 3; j <= n; ++j) {
      if (max_span >= 0 && j - a - 1 > max_span) continue;
      Tokens block = generalized_tie_tokens(a + 1, j);
      add(rules, cat({{sigma(a), sigma(a)}, block}),
          cat({block, {sigma(a), sigma(a)}}));
      add(rules, cat({{sigma_inv(a), sigma_inv(a)}, block}),
          cat({block, {sigma_inv(a), sigma_inv(a)}}));
      if (pk) {
        TokenKind p = *pk;
        add(rules, cat({{sigma(a), tk(p, a)}, block}),
            cat({block, {sigma(a), tk(p, a)}}));
        add(rules, cat({{tk(p, a)}, block, {sigma(a)}}),
            cat({{sigma(a)}, block, {tk(p, a)}}));
      }
    }
  return dedupe_relations(std::move(rules));
}

std::vector<std::vector<Token>> square_block_slide_chain(Flavor flavor, int a,
                                                         int j,
                                                         ChainKind kind) {
  if (!has_ties(flavor)) throw std::invalid_argument("flavor has no ties");
  if (j < a + 3) throw std::invalid_argument("block span must be >= 2");
  Tokens in = generalized_tie_tokens(a + 2, j);  // inner block
  Token sa = sigma(a), na = sigma_inv(a);
  Token sb = sigma(a + 1), nb = sigma_inv(a + 1);
  if (kind == ChainKind::PosSquare)
    return {
        cat({{sa, sa, sb}, in, {nb}}),
        cat({{sb, nb, sa, sa, sb}, in, {nb}}),
        cat({{sb, sa, sb, sb, na}, in, {nb}}),
        cat({{sb, sa, sb, sb}, in, {na, nb}}),
        cat({{sb, sa}, in, {sb, sb, na, nb}}),
        cat({{sb}, in, {sa, sb, sb, na, nb}}),
        cat({{sb}, in, {nb, sa, sa, sb, nb}}),
        cat({{sb}, in, {nb, sa, sa}}),
    };
  if (kind == ChainKind::NegSquare)
    return {
        cat({{na, na, sb}, in, {nb}}),
        cat({{sb, nb, na, na, sb}, in, {nb}}),
        cat({{sb, sa, nb, nb, na}, in, {nb}}),
        cat({{sb, sa, nb, nb}, in, {na, nb}}),
        cat({{sb, sa}, in, {nb, nb, na, nb}}),
        cat({{sb}, in, {sa, nb, nb, na, nb}}),
        cat({{sb}, in, {nb, na, na, sb, nb}}),
        cat({{sb}, in, {nb, na, na}}),
    };
  auto pk = transposition_kind(flavor);
  if (!pk) throw std::invalid_argument("flavor has no pre/singular crossings");
  Token pa = tk(*pk, a), pb = tk(*pk, a + 1);
  if (kind == ChainKind::PreSlider)
    return {
        cat({{sa, pa, sb}, in, {nb}}),
        cat({{sb, nb, sa, pa, sb}, in, {nb}}),
        cat({{sb, sa, sb, pb, na}, in, {nb}}),
        cat({{sb, sa, sb, pb}, in, {na, nb}}),
        cat({{sb, sa}, in, {sb, pb, na, nb}}),
        cat({{sb}, in, {sa, sb, pb, na, nb}}),
        cat({{sb}, in, {nb, sa, pa, sb, nb}}),
        cat({{sb}, in, {nb, sa, pa}}),
    };
  // CrossedSlide
  return {
      cat({{pa, sb}, in, {nb, sa}}),
      cat({{pa, sb, sa, na}, in, {nb, sa}}),
      cat({{sb, sa, pb, na}, in, {nb, sa}}),
      cat({{sb, sa, pb}, in, {na, nb, sa}}),
      cat({{sb, sa, pb}, in, {sb, na, nb}}),
      cat({{sb, sa, sb}, in, {pb, na, nb}}),
      cat({{sa, sb, sa}, in, {pb, na, nb}}),
      cat({{sa, sb}, in, {sa, pb, na, nb}}),
      cat({{sa, sb}, in, {nb, pa, sb, nb}}),
      cat({{sa, sb}, in, {nb, pa}}),
  };
}

std::vector<Relation> block_slide_rules(Flavor flavor, int n, int max_span) {
  std::vector<Relation> rules;
  if (!has_ties(flavor)) return rules;
  std::vector<TokenKind> kinds{kS, kN};
  if (flavor == Flavor::TPM) kinds.push_back(TokenKind::Pre);
  if (flavor == Flavor::TSM) kinds.push_back(TokenKind::Singular);
  auto transp = [](int a, int x) {
    return x == a ? a + 1 : (x == a + 1 ? a : x);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int a = 1; a < n; ++a) {
        int i2 = transp(a, i), j2 = transp(a, j);
        if (i2 > j2) std::swap(i2, j2);
        int span = std::max(j - i, j2 - i2);
        if (span < 2) continue;  // two-token slides live in lower strata
        if (max_span >= 0 && span > max_span) continue;
        if (j2 > n) continue;
        Tokens block = generalized_tie_tokens(i, j);
        Tokens moved = generalized_tie_tokens(i2, j2);
        for (TokenKind k : kinds)
          add(rules, cat({{tk(k, a)}, block}), cat({moved, {tk(k, a)}}));
      }
  return dedupe_relations(std::move(rules));
}

std::vector<Relation> block_fusion_rules(Flavor flavor, int n, int max_span) {
  std::vector<Relation> rules;
  if (!has_ties(flavor)) return rules;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (max_span >= 0 && c - a > max_span) continue;
        Tokens A = cat({generalized_tie_tokens(a, b),
                        generalized_tie_tokens(b, c)});
        Tokens B = cat({generalized_tie_tokens(a, b),
                        generalized_tie_tokens(a, c)});
        Tokens C = cat({generalized_tie_tokens(b, c),
                        generalized_tie_tokens(a, c)});
        add(rules, A, B);
        add(rules, B, C);
        add(rules, A, C);
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (max_span >= 0 && j - i > max_span) continue;
      Tokens block = generalized_tie_tokens(i, j);
      add(rules, cat({block, block}), block);
    }
  return dedupe_relations(std::move(rules));
}

const std::vector<Relation>& rewrite_rules(Flavor flavor, int n) {
  static std::mutex mu;
  static std::map<std::pair<Flavor, int>, std::vector<Relation>> cache;
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace({flavor, n});
  if (inserted && n >= 2) {
    std::vector<Relation> all = relations_of(flavor, n);
    for (auto gen : {sign_variant_rules, adjacent_tie_slide_rules}) {
      auto part = gen(flavor, n);
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    for (auto gen : {block_slide_rules, block_fusion_rules}) {
      auto part = gen(flavor, n, -1);
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    it->second = dedupe_relations(std::move(all));
  }
  return it->second;
}

}  // namespace tpl
