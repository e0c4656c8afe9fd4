#include "tpl/equivalence.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tpl/relations.hpp"
#include "tpl/rewrite.hpp"

namespace tpl {
namespace {

bool len_ok(std::size_t len, const SearchLimits& limits) {
  return limits.max_len < 0 || len <= static_cast<std::size_t>(limits.max_len);
}

bool n_ok(int n, const SearchLimits& limits) {
  return limits.max_n < 0 || n <= limits.max_n;
}

// True when every token fits on m strands (all generators act on a pair
// (i, i+1), so the condition is uniform across kinds).
bool tokens_fit(const std::vector<Token>& tokens, int m) {
  for (const Token& t : tokens) {
    if (t.index + 1 > m) return false;
  }
  return true;
}

std::tuple<int, int, int, int, int, int, int, int, int> move_key(
    const EquivalenceMove& m) {
  return {static_cast<int>(m.kind),
          m.i,
          m.j,
          m.inverse ? 1 : 0,
          m.lmove.slot,
          m.lmove.strand,
          static_cast<int>(m.lmove.kind),
          static_cast<int>(m.lmove.kink),
          m.lmove.kink_sign};
}

bool move_less(const EquivalenceMove& a, const EquivalenceMove& b) {
  if (a.word != b.word) return a.word < b.word;
  return move_key(a) < move_key(b);
}

void finish_moves(std::vector<EquivalenceMove>& out, const Word& self) {
  std::erase_if(out, [&](const EquivalenceMove& m) { return m.word == self; });
  std::sort(out.begin(), out.end(), move_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

void push(std::vector<EquivalenceMove>& out, MoveKind kind, Word word,
          int i = 0, int j = 0, bool inverse = false, LMoveSpec lm = {}) {
  out.push_back(EquivalenceMove{kind, i, j, inverse, lm, std::move(word)});
}

// Relation rewrites (including inverse-pair insertion/deletion), shared by
// both move sets.
void add_rewrites(const Word& w, const SearchLimits& limits,
                  std::vector<EquivalenceMove>& out) {
  for (Word& v : rewrite_neighbors(w)) {
    if (!len_ok(v.tokens.size(), limits)) continue;
    push(out, MoveKind::RelationRewrite, std::move(v));
  }
}

// Cyclic transfer of a terminal/leading pre-crossing or singular crossing.
void add_commuting(const Word& w, const SearchLimits& limits,
                   std::vector<EquivalenceMove>& out) {
  if (w.tokens.empty() || !len_ok(w.tokens.size(), limits)) return;
  auto kind_of = [](TokenKind k) -> std::optional<MoveKind> {
    if (k == TokenKind::Pre) return MoveKind::Commuting;
    if (k == TokenKind::Singular) return MoveKind::SingularCommuting;
    return std::nullopt;
  };
  if (auto mk = kind_of(w.tokens.back().kind)) {
    Word v = w;
    Token t = v.tokens.back();
    v.tokens.pop_back();
    v.tokens.insert(v.tokens.begin(), t);
    push(out, *mk, std::move(v), 0, +1);
  }
  if (auto mk = kind_of(w.tokens.front().kind)) {
    Word v = w;
    Token t = v.tokens.front();
    v.tokens.erase(v.tokens.begin());
    v.tokens.push_back(t);
    push(out, *mk, std::move(v), 0, -1);
  }
}

// Tie stabilization w -> w E<i>,<j> when w's permutation sends i to j, and
// the matching destabilization.
void add_tie_stabs(const Word& w, const SearchLimits& limits,
                   std::vector<EquivalenceMove>& out) {
  if (!kind_legal(w.flavor, TokenKind::Tie)) return;
  const Permutation perm = permutation_of(w);
  for (int i = 1; i < w.n; ++i) {
    for (int j = i + 1; j <= w.n; ++j) {
      const std::vector<Token> e = generalized_tie_tokens(i, j);
      if (perm(i) == j && len_ok(w.tokens.size() + e.size(), limits)) {
        Word v = w;
        v.tokens.insert(v.tokens.end(), e.begin(), e.end());
        push(out, MoveKind::TStab, std::move(v), i, j);
      }
      if (w.tokens.size() >= e.size() &&
          std::equal(e.begin(), e.end(), w.tokens.end() - e.size())) {
        Word v = w;
        v.tokens.resize(v.tokens.size() - e.size());
        // E<i>,<j> acts trivially on the permutation, so the gate on the
        // shortened word equals the gate on w.
        if (perm(i) == j) push(out, MoveKind::TDestab, std::move(v), i, j);
      }
    }
  }
}

void add_conjugations(const Word& w, const SearchLimits& limits,
                      std::vector<EquivalenceMove>& out) {
  if (!len_ok(w.tokens.size() + 2, limits)) return;
  for (int i = 1; i < w.n; ++i) {
    for (int s : {+1, -1}) {
      Word v = w;
      v.tokens.insert(v.tokens.begin(), s > 0 ? sigma(i) : sigma_inv(i));
      v.tokens.push_back(s > 0 ? sigma_inv(i) : sigma(i));
      push(out, MoveKind::Conjugation, std::move(v), i, s);
    }
  }
}

void add_stabilizations(const Word& w, const SearchLimits& limits,
                        std::vector<EquivalenceMove>& out) {
  const bool pseudo = kind_legal(w.flavor, TokenKind::Pre);
  if (n_ok(w.n + 1, limits) && len_ok(w.tokens.size() + 1, limits)) {
    auto stab = [&](Token t, MoveKind mk) {
      Word v{w.n + 1, w.flavor, w.tokens};
      v.tokens.push_back(t);
      push(out, mk, std::move(v));
    };
    stab(sigma(w.n), MoveKind::RealStabPos);
    stab(sigma_inv(w.n), MoveKind::RealStabNeg);
    if (pseudo) stab(pre(w.n), MoveKind::PseudoStab);
  }
  if (w.n >= 2 && !w.tokens.empty()) {
    const Token last = w.tokens.back();
    const bool real = (last.kind == TokenKind::SigmaPos ||
                       last.kind == TokenKind::SigmaNeg);
    if (last.index == w.n - 1 && (real || last.kind == TokenKind::Pre)) {
      std::vector<Token> rest(w.tokens.begin(), w.tokens.end() - 1);
      if (tokens_fit(rest, w.n - 1)) {
        push(out, real ? MoveKind::RealDestab : MoveKind::PseudoDestab,
             Word{w.n - 1, w.flavor, std::move(rest)});
      }
    }
  }
}

std::vector<std::pair<LMoveKink, int>> legal_kinks(Flavor f) {
  std::vector<std::pair<LMoveKink, int>> ks = {
      {LMoveKink::None, 1},
      {LMoveKink::Classical, +1},
      {LMoveKink::Classical, -1},
  };
  if (kind_legal(f, TokenKind::Pre)) ks.emplace_back(LMoveKink::PreCrossing, 1);
  return ks;
}

void add_l_moves(const Word& w, const SearchLimits& limits,
                 std::vector<EquivalenceMove>& out) {
  // Insertions.
  if (n_ok(w.n + 1, limits)) {
    const auto kinks = legal_kinks(w.flavor);
    for (int slot = 0; slot <= static_cast<int>(w.tokens.size()); ++slot) {
      for (int strand = 1; strand <= w.n; ++strand) {
        for (LMoveKind mk : {LMoveKind::Over, LMoveKind::Under}) {
          for (auto [kink, sign] : kinks) {
            const LMoveSpec spec{slot, strand, mk, kink, sign};
            Word v = apply_l_move(w, spec);
            if (!len_ok(v.tokens.size(), limits)) continue;
            push(out, MoveKind::LMove, std::move(v), 0, 0, false, spec);
          }
        }
      }
    }
  }
  // Removals: find an exact copy of an inserted block whose complement never
  // touches the top strand.
  if (w.n >= 2) {
    const Word empty_small{w.n - 1, w.flavor, {}};
    const auto kinks = legal_kinks(w.flavor);
    for (int strand = 1; strand <= w.n - 1; ++strand) {
      for (LMoveKind mk : {LMoveKind::Over, LMoveKind::Under}) {
        for (auto [kink, sign] : kinks) {
          const LMoveSpec probe{0, strand, mk, kink, sign};
          const std::vector<Token> block = apply_l_move(empty_small, probe)
                                               .tokens;
          if (block.size() > w.tokens.size()) continue;
          for (std::size_t q = 0; q + block.size() <= w.tokens.size(); ++q) {
            if (!std::equal(block.begin(), block.end(),
                            w.tokens.begin() + q)) {
              continue;
            }
            std::vector<Token> rest(w.tokens.begin(), w.tokens.begin() + q);
            rest.insert(rest.end(), w.tokens.begin() + q + block.size(),
                        w.tokens.end());
            if (!tokens_fit(rest, w.n - 1)) continue;
            const LMoveSpec spec{static_cast<int>(q), strand, mk, kink, sign};
            push(out, MoveKind::LMove,
                 Word{w.n - 1, w.flavor, std::move(rest)}, 0, 0, true, spec);
          }
        }
      }
    }
  }
}

// The move taking m.word back to `from`, with parameters matching how the
// neighbor generators emit it.
EquivalenceMove invert_move(const EquivalenceMove& m, const Word& from) {
  EquivalenceMove inv;
  inv.word = from;
  switch (m.kind) {
    case MoveKind::RelationRewrite:
      inv.kind = MoveKind::RelationRewrite;
      break;
    case MoveKind::Conjugation:
      inv.kind = MoveKind::Conjugation;
      inv.i = m.i;
      inv.j = -m.j;
      break;
    case MoveKind::Commuting:
    case MoveKind::SingularCommuting:
      inv.kind = m.kind;
      inv.j = -m.j;
      break;
    case MoveKind::RealStabPos:
    case MoveKind::RealStabNeg:
      inv.kind = MoveKind::RealDestab;
      break;
    case MoveKind::RealDestab:
      inv.kind = from.tokens.back().kind == TokenKind::SigmaPos
                     ? MoveKind::RealStabPos
                     : MoveKind::RealStabNeg;
      break;
    case MoveKind::PseudoStab:
      inv.kind = MoveKind::PseudoDestab;
      break;
    case MoveKind::PseudoDestab:
      inv.kind = MoveKind::PseudoStab;
      break;
    case MoveKind::TStab:
    case MoveKind::TDestab:
      inv.kind =
          m.kind == MoveKind::TStab ? MoveKind::TDestab : MoveKind::TStab;
      inv.i = m.i;
      inv.j = m.j;
      break;
    case MoveKind::LMove:
      inv.kind = MoveKind::LMove;
      inv.lmove = m.lmove;
      inv.inverse = !m.inverse;
      break;
  }
  return inv;
}

std::vector<EquivalenceMove> neighbors(const Word& w, MoveSet set,
                                       const SearchLimits& limits) {
  return set == MoveSet::Markov ? markov_neighbors(w, limits)
                                : lmove_neighbors(w, limits);
}

}  // namespace

std::string_view move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::RelationRewrite: return "relation-rewrite";
    case MoveKind::Conjugation: return "conjugation";
    case MoveKind::Commuting: return "commuting";
    case MoveKind::SingularCommuting: return "singular-commuting";
    case MoveKind::RealStabPos: return "real-stab+";
    case MoveKind::RealStabNeg: return "real-stab-";
    case MoveKind::RealDestab: return "real-destab";
    case MoveKind::PseudoStab: return "pseudo-stab";
    case MoveKind::PseudoDestab: return "pseudo-destab";
    case MoveKind::TStab: return "t-stab";
    case MoveKind::TDestab: return "t-destab";
    case MoveKind::LMove: return "l-move";
  }
  return "?";
}

std::string move_text(const EquivalenceMove& m) {
  std::string s{move_kind_name(m.kind)};
  switch (m.kind) {
    case MoveKind::Conjugation:
      s += '(';
      s += token_text(m.j > 0 ? sigma(m.i) : sigma_inv(m.i));
      s += ')';
      break;
    case MoveKind::Commuting:
    case MoveKind::SingularCommuting:
      s += m.j > 0 ? "(to-front)" : "(to-back)";
      break;
    case MoveKind::TStab:
    case MoveKind::TDestab:
      s += '(' + std::to_string(m.i) + ',' + std::to_string(m.j) + ')';
      break;
    case MoveKind::LMove: {
      s += "(slot=" + std::to_string(m.lmove.slot) +
           " strand=" + std::to_string(m.lmove.strand);
      s += m.lmove.kind == LMoveKind::Over ? " over" : " under";
      s += " kink=";
      switch (m.lmove.kink) {
        case LMoveKink::None: s += "none"; break;
        case LMoveKink::Classical:
          s += m.lmove.kink_sign > 0 ? "+" : "-";
          break;
        case LMoveKink::PreCrossing: s += "pre"; break;
      }
      if (m.inverse) s += " inverse";
      s += ')';
      break;
    }
    default:
      break;
  }
  return s;
}

std::string certificate_text(const EquivalenceCertificate& cert) {
  std::string out;
  for (const EquivalenceMove& m : cert) {
    out += move_text(m);
    out += " -> n=" + std::to_string(m.word.n) + " flavor=";
    out += flavor_name(m.word.flavor);
    if (!m.word.tokens.empty()) {
      out += ' ';
      out += word_text(m.word);
    }
    out += '\n';
  }
  return out;
}

std::vector<EquivalenceMove> markov_neighbors(const Word& w,
                                              const SearchLimits& limits) {
  std::vector<EquivalenceMove> out;
  add_rewrites(w, limits, out);
  add_conjugations(w, limits, out);
  add_commuting(w, limits, out);
  add_stabilizations(w, limits, out);
  add_tie_stabs(w, limits, out);
  finish_moves(out, w);
  return out;
}

std::vector<EquivalenceMove> lmove_neighbors(const Word& w,
                                             const SearchLimits& limits) {
  std::vector<EquivalenceMove> out;
  add_rewrites(w, limits, out);
  add_l_moves(w, limits, out);
  add_commuting(w, limits, out);
  add_tie_stabs(w, limits, out);
  finish_moves(out, w);
  return out;
}

bool certificate_replays(const Word& start, const EquivalenceCertificate& cert,
                         MoveSet move_set, const SearchLimits& limits) {
  Word cur = start;
  for (const EquivalenceMove& step : cert) {
    const auto options = neighbors(cur, move_set, limits);
    if (std::find(options.begin(), options.end(), step) == options.end()) {
      return false;
    }
    cur = step.word;
  }
  return true;
}

InvariantFingerprint fingerprint_word(const Word& w, int cap) {
  const Word& closed = w.flavor == Flavor::TSM ? map_flavor_mu(w) : w;
  return fingerprint(close_braid(closed), cap);
}

SearchVerdict equivalent_closures(const Word& w1, const Word& w2,
                                  std::uint64_t budget, MoveSet move_set,
                                  std::optional<SearchLimits> limits) {
  if (w1.flavor != w2.flavor) {
    throw std::invalid_argument(
        "equivalent_closures: flavors differ; map through the "
        "singular-to-pseudo isomorphism first");
  }
  for (const Word* w : {&w1, &w2}) {
    if (auto err = validate_word(*w)) {
      throw std::invalid_argument("equivalent_closures: " + *err);
    }
  }

  SearchVerdict result;
  if (w1 == w2) {
    result.verdict = Verdict::Equivalent;
    return result;
  }

  result.fp1 = fingerprint_word(w1);
  result.fp2 = fingerprint_word(w2);
  if (result.fp1 != result.fp2) {
    result.verdict = Verdict::Distinguished;
    return result;
  }

  SearchLimits lim;
  if (limits) {
    lim = *limits;
  } else {
    lim.max_n = std::max(w1.n, w2.n) + 3;
    lim.max_len = static_cast<int>(std::max(w1.tokens.size(),
                                            w2.tokens.size())) +
                  2 * (2 * lim.max_n + 1);
  }

  std::vector<Word> words{w1, w2};
  std::vector<int> parent{-1, -1};
  std::vector<int> side{0, 1};
  std::vector<EquivalenceMove> via(2);
  std::unordered_map<Word, int, WordHash> index;
  index.emplace(w1, 0);
  index.emplace(w2, 1);
  std::uint64_t visited = 2;

  // Path of moves from the root of `leaf`'s side down to `leaf`.
  auto forward_path = [&](int leaf) {
    std::vector<int> chain;
    for (int x = leaf; parent[x] >= 0; x = parent[x]) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    EquivalenceCertificate part;
    for (int x : chain) part.push_back(via[x]);
    return part;
  };
  // Moves from `leaf` back up to the root of its side.
  auto backward_path = [&](int leaf) {
    EquivalenceCertificate part;
    for (int x = leaf; parent[x] >= 0; x = parent[x]) {
      part.push_back(invert_move(via[x], words[parent[x]]));
    }
    return part;
  };

  std::vector<int> frontier[2] = {{0}, {1}};
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<int> next;
    for (int u : frontier[s]) {
      for (EquivalenceMove& mv : neighbors(words[u], move_set, lim)) {
        auto it = index.find(mv.word);
        if (it != index.end()) {
          if (side[it->second] == s) continue;
          const int v = it->second;
          EquivalenceCertificate cert;
          if (s == 0) {
            cert = forward_path(u);
            cert.push_back(mv);
            auto back = backward_path(v);
            cert.insert(cert.end(), back.begin(), back.end());
          } else {
            cert = forward_path(v);
            cert.push_back(invert_move(mv, words[u]));
            auto back = backward_path(u);
            cert.insert(cert.end(), back.begin(), back.end());
          }
          result.verdict = Verdict::Equivalent;
          result.certificate = std::move(cert);
          result.visited = visited;
          return result;
        }
        if (visited + 1 > budget) {
          result.verdict = Verdict::Unknown;
          result.visited = visited;
          return result;
        }
        ++visited;
        const int id = static_cast<int>(words.size());
        words.push_back(mv.word);
        parent.push_back(u);
        side.push_back(s);
        via.push_back(std::move(mv));
        index.emplace(words.back(), id);
        next.push_back(id);
      }
    }
    frontier[s] = std::move(next);
  }

  result.verdict = Verdict::Unknown;
  result.visited = visited;
  return result;
}

}  // namespace tpl
