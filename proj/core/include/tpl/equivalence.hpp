#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpl/braiding.hpp"
#include "tpl/diagram.hpp"
#include "tpl/word.hpp"

namespace tpl {

// One closure-preserving move on a braid-monoid word.
enum class MoveKind : unsigned char {
  RelationRewrite,    // one defining-relation rewrite, either direction
  Conjugation,        // w -> a w a^-1, a a single sigma generator
  Commuting,          // cyclic transfer of a terminal/leading pre-crossing
  SingularCommuting,  // same for a singular crossing (TSM only)
  RealStabPos,        // w -> w s<n> on n+1 strands
  RealStabNeg,        // w -> w S<n> on n+1 strands
  RealDestab,         // inverse of a real stabilization
  PseudoStab,         // w -> w p<n> on n+1 strands (PM, TPM)
  PseudoDestab,       // inverse of a pseudo stabilization
  TStab,              // w -> w E<i>,<j>, legal when w's permutation maps i to j
  TDestab,            // inverse of a tie stabilization
  LMove,              // strand insertion (or, flagged, its removal)
};

std::string_view move_kind_name(MoveKind k);

// A move together with its parameters and the word it produces.
//   RelationRewrite          no parameters
//   Conjugation              i = generator index, j = +1/-1 (sign of the
//                            left factor: w -> s<i>^j w s<i>^-j)
//   Commuting / Singular     j = +1 when a terminal token moved to the front,
//                            -1 when a leading token moved to the back
//   Real/Pseudo stab/destab  no parameters
//   TStab / TDestab          (i, j) = tied top positions, i < j
//   LMove                    lmove = insertion description; inverse = true
//                            when the move removes that strand instead
struct EquivalenceMove {
  MoveKind kind = MoveKind::RelationRewrite;
  int i = 0;
  int j = 0;
  bool inverse = false;
  LMoveSpec lmove{};
  Word word;

  friend bool operator==(const EquivalenceMove&, const EquivalenceMove&) =
      default;
};

// Move name plus parameters, e.g. "t-stab(1,3)" or "l-move(slot=2 strand=1
// over kink=none)".
std::string move_text(const EquivalenceMove& m);

// Replayable proof that two closures agree: applying the moves in order to
// the start word yields the end word.
using EquivalenceCertificate = std::vector<EquivalenceMove>;

// One line per move: "<move> -> n=<n> flavor=<name> <tokens>".
std::string certificate_text(const EquivalenceCertificate& cert);

// Bounds applied while generating neighbors. Words that would exceed either
// bound are not emitted; -1 means unbounded.
struct SearchLimits {
  int max_n = -1;
  int max_len = -1;
};

// Which move set a closure-equivalence search uses.
enum class MoveSet : unsigned char {
  Markov,  // relation rewrites, conjugation, commuting, stabilizations
  LMove,   // strand insertions/removals, rewrites, commuting, tie stabs
};

// All words one Markov move away from w: relation rewrites, conjugation by a
// single sigma generator, commuting transfers, real/pseudo/tie
// (de)stabilizations. Tie stabilization by E<i>,<j> is emitted only when w's
// permutation sends i to j. Sorted by (word, move), duplicate-free,
// deterministic; never contains w itself.
std::vector<EquivalenceMove> markov_neighbors(const Word& w,
                                              const SearchLimits& limits);

// Neighbor set for the L-move calculus: one strand insertion for every legal
// LMoveSpec, every matching strand removal, plus relation rewrites, commuting
// transfers and tie (de)stabilizations. Same guarantees as markov_neighbors.
std::vector<EquivalenceMove> lmove_neighbors(const Word& w,
                                             const SearchLimits& limits);

// Checks that consecutive certificate entries are single moves from the
// chosen set: every step must appear, with identical kind and parameters,
// among the neighbors of the previous word.
bool certificate_replays(const Word& start, const EquivalenceCertificate& cert,
                         MoveSet move_set, const SearchLimits& limits);

// Fingerprint of the closure of a word: TSM words are first carried across
// the singular-to-pseudo isomorphism, then closed. cap bounds the number of
// pre-crossings resolved (throws std::invalid_argument beyond it).
InvariantFingerprint fingerprint_word(const Word& w, int cap = 20);

enum class Verdict : unsigned char {
  Equivalent,     // certificate holds a replayable move sequence
  Distinguished,  // fingerprints differ; closures are inequivalent
  Unknown,        // search budget exhausted without meeting
};

struct SearchVerdict {
  Verdict verdict = Verdict::Unknown;
  EquivalenceCertificate certificate;  // Equivalent only
  InvariantFingerprint fp1, fp2;       // always filled (unless w1 == w2)
  std::uint64_t visited = 0;           // words interned, both sides
};

// Decides closure equivalence of two same-flavor words. The fingerprint is
// compared first: a mismatch is an authoritative Distinguished verdict. On a
// match, a bidirectional breadth-first search over the chosen move set looks
// for a connecting move sequence; budget bounds the number of distinct words
// interned across both sides. When limits is nullopt they default to
//   max_n   = max(w1.n, w2.n) + 3
//   max_len = max(len1, len2) + 2 * (2 * max_n + 1).
// Deterministic: identical inputs give identical verdicts and certificates.
// Throws std::invalid_argument on a flavor mismatch.
SearchVerdict equivalent_closures(
    const Word& w1, const Word& w2, std::uint64_t budget = 200000,
    MoveSet move_set = MoveSet::Markov,
    std::optional<SearchLimits> limits = std::nullopt);

}  // namespace tpl
