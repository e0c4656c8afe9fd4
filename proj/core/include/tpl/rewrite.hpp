#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tpl/relations.hpp"
#include "tpl/word.hpp"

namespace tpl {

// All token sequences obtained from `tokens` by one application of a rule
// side (either direction, any position). Sequences longer than max_len are
// dropped; pass -1 for no bound. Sorted, duplicate-free, never contains the
// input itself.
std::vector<std::vector<Token>> token_neighbors(
    const std::vector<Token>& tokens, const std::vector<Relation>& rules,
    int max_len = -1);

// One-step rewrite closure of a word over rewrite_rules(w.flavor, w.n);
// includes insertion and deletion of adjacent inverse sigma pairs. Sorted,
// duplicate-free.
std::vector<Word> rewrite_neighbors(const Word& w);

// Result of a bounded equality search. `equal` answers are sound: the
// certificate is a path whose consecutive entries differ by one rewrite.
// When `equal` is false the search ran out of budget; that is never a
// proof of inequality.
struct TokenSearchResult {
  bool equal = false;
  std::vector<std::vector<Token>> certificate;  // from -> ... -> to when equal
  std::uint64_t visited = 0;                    // words interned, both sides
};

// Bidirectional breadth-first search between two token sequences over an
// explicit rule set. Explores sequences of length at most
// max(|from|, |to|) + slack; budget bounds the number of distinct sequences
// interned across both sides. Deterministic: expansion order depends only on
// the inputs.
TokenSearchResult bidirectional_token_search(const std::vector<Token>& from,
                                             const std::vector<Token>& to,
                                             const std::vector<Relation>& rules,
                                             std::uint64_t budget,
                                             int slack = 6);

// Same result type with Word entries.
struct WordEqualityResult {
  bool equal = false;
  std::vector<Word> certificate;
  std::uint64_t visited = 0;
};

// Word-problem oracle over the monoid presentation: bidirectional BFS with
// the production rewrite system. Requires matching n and flavor (throws
// std::invalid_argument otherwise). Budget counts interned words.
WordEqualityResult words_equal_in_monoid(const Word& w1, const Word& w2,
                                         std::uint64_t budget);

// True when every consecutive pair of the path differs by exactly one
// rewrite over `rules` (replay check for certificates).
bool certificate_replays(const std::vector<std::vector<Token>>& path,
                         const std::vector<Relation>& rules);

}  // namespace tpl
