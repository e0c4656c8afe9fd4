#pragma once

#include "tpl/diagram.hpp"
#include "tpl/word.hpp"

namespace tpl {

// Rewires every pre-crossing that has an upward-oriented strand through a
// locally isotopic cup/cap detour until both strands run downward.
// Pre-crossing count and fingerprint are unchanged; diagrams already in
// downward form are returned untouched. Requires a valid closed diagram.
MorseDiagram orient_precrossings_down(const MorseDiagram& d);

// Alexander-direction braiding: turns a valid closed diagram into a word
// (flavor TPM) with fingerprint(close_braid(w)) == fingerprint(d).
//
// Pipeline: orient pre-crossings downward; repeatedly pick the topmost
// upward arc that is not already a closure return, split it where its
// crossing type changes (over/under), and slide each homogeneous piece to
// the right edge as a fresh innermost return, crossing everything all-over
// or all-under per the piece's label (crossing-free pieces default to
// under). Ties ride along to the replacement strand. The surviving rows
// form a literal braid closure and are read off as tokens.
//
// Throws std::invalid_argument for invalid or empty (0-component) diagrams.
Word braid_diagram(const MorseDiagram& d);

// An L-move: cut the strand at `strand` position in the between-token slot
// `slot`, pulling the cut ends to the bottom as a new rightmost strand pair
// that crosses everything over (Over) or under (Under), with an optional
// kink where the ends rejoin.
enum class LMoveKind : unsigned char { Over, Under };
enum class LMoveKink : unsigned char { None, Classical, PreCrossing };

struct LMoveSpec {
  int slot = 0;    // 0 .. len(w)
  int strand = 1;  // 1 .. n
  LMoveKind kind = LMoveKind::Over;
  LMoveKink kink = LMoveKink::None;
  int kink_sign = 1;  // Classical kink only: +1 or -1

  friend bool operator==(const LMoveSpec&, const LMoveSpec&) = default;
};

// Returns the word on n+1 strands:
//   w1 . sigma_n^a .. sigma_{j+1}^a . K_j . sigma_{j+1}^b .. sigma_n^b . w2
// where (a, b) = (-1, +1) for Over and (+1, -1) for Under, and K is
// sigma_j^{+-1} (no kink: +1 for Over, -1 for Under; classical kink: the
// kink's sign) or p_j (pre-crossing kink). The closure fingerprint is
// preserved. Plain bottom-right moves degenerate to stabilization.
// Throws std::invalid_argument on bad slot/strand, or a pre-crossing kink
// for flavors without pre tokens.
Word apply_l_move(const Word& w, const LMoveSpec& spec);

}  // namespace tpl
