#pragma once

#include <utility>
#include <vector>

#include "tpl/word.hpp"

namespace tpl {

// A rewrite rule: lhs tokens may be replaced by rhs tokens wherever lhs
// occurs as a contiguous factor (and vice versa; rules are unoriented).
// An empty side encodes insertion/deletion of the other side.
using Relation = std::pair<std::vector<Token>, std::vector<Token>>;

// Removes duplicates (up to swapping sides) and trivial rules.
std::vector<Relation> dedupe_relations(std::vector<Relation> rules);

// The defining relations of the monoid on n strands: braid relations, sigma
// cancellation (two-sided, with empty right-hand side), and the pre/singular/
// tie relations admitted by the flavor.  Throws std::invalid_argument for
// n < 2 (no generators).
std::vector<Relation> relations_of(Flavor flavor, int n);

// ---------------------------------------------------------------------------
// Derived rule strata.  Every rule below is a consequence of the defining
// relations; the test suite checks each family both against an independent
// semantic model and for derivability from the strata preceding it.  Their
// role is to keep equality searches shallow: without them, routine
// identities sit at rewrite distances that explode a breadth-first search.
//
// A "block" is the expanded word of a generalized tie joining strands i < j
// (see expand_generalized_tie); its span is the number of strands it
// straddles.  Families taking max_span restrict to blocks of span at most
// max_span (pass -1 for no bound), which the soundness tests use to prove
// wider instances from narrower ones.
// ---------------------------------------------------------------------------

// Two- and three-token identities obtained from the defining relations by
// flipping crossing signs: inverse-inverse far commutation, the mixed-sign
// braid conjugations that hold in the braid group, inverse-sign tie and
// pre-crossing slides, and pre-crossing conjugations.
std::vector<Relation> sign_variant_rules(Flavor flavor, int n);

// Four-token conjugated-square identities
//     s_a^e  s_{a+1}^{+-2}       s_a^-e = s_{a+1}^-e  s_a^{+-2}      s_{a+1}^e
//     s_a^e (s_{a+1} p_{a+1})    s_a^-e = s_{a+1}^-e (s_a p_a)       s_{a+1}^e
// plus the slides of an adjacent tie over a squared or sign-resolved pair:
//     s_a^{+-2} e_{a+1} = e_{a+1} s_a^{+-2},   s_a p_a e_{a+1} = e_{a+1} s_a p_a,
//     p_a e_{a+1} s_a   = s_a e_{a+1} p_a      (and index mirrors).
std::vector<Relation> adjacent_tie_slide_rules(Flavor flavor, int n);

// A single generator commutes with a block whose strand interval does not
// touch the generator's pair: g_a E(i,j) = E(i,j) g_a for a <= i-2 or
// a >= j+1.  Empty for flavors without ties.
std::vector<Relation> far_block_slide_rules(Flavor flavor, int n, int max_span = -1);

// A squared crossing (or crossing/pre-crossing pair) at the left edge of a
// block slides through it:
//     s_a^{+-2} E(a+1, j) = E(a+1, j) s_a^{+-2}
//     s_a p_a   E(a+1, j) = E(a+1, j) s_a p_a
//     p_a E(a+1, j) s_a   = s_a E(a+1, j) p_a
std::vector<Relation> square_block_slide_rules(Flavor flavor, int n, int max_span = -1);

// Which square-block slide a derivation chain establishes.
enum class ChainKind {
  PosSquare,     // s_a^2  E = E s_a^2
  NegSquare,     // s_a^-2 E = E s_a^-2
  PreSlider,     // s_a p_a E = E s_a p_a
  CrossedSlide,  // p_a E s_a = s_a E p_a
};

// Step-by-step derivation of the span-(j-a-1) square block slide at position
// a: consecutive entries differ by exactly one rewrite from the strata below
// square_block_slide_rules (checked by the test suite).  Requires
// j >= a + 3; PreSlider/CrossedSlide additionally require a flavor with
// pre-crossings or singular crossings.
std::vector<std::vector<Token>> square_block_slide_chain(Flavor flavor, int a,
                                                         int j, ChainKind kind);

// A single generator slides through an arbitrary block, transposing the
// block's endpoints: g_a E(i,j) = E(sort(t_a(i), t_a(j))) g_a where t_a
// swaps a and a+1.  Only instances where some side has span >= 2; narrower
// ones already appear in the defining relations or sign variants.
std::vector<Relation> block_slide_rules(Flavor flavor, int n, int max_span = -1);

// Merging identities for concatenated blocks over a strand triple a < b < c:
// any two of E(a,b)E(b,c), E(a,b)E(a,c), E(b,c)E(a,c) are equal, and blocks
// are idempotent: E(i,j)E(i,j) = E(i,j).
std::vector<Relation> block_fusion_rules(Flavor flavor, int n, int max_span = -1);

// The production rewrite system used by word-equality search: defining
// relations plus all derived strata except the far/square block slides
// (those exist to structure the soundness proofs and are implied by
// block_slide_rules).  Cached per (flavor, n); thread-safe.
const std::vector<Relation>& rewrite_rules(Flavor flavor, int n);

}  // namespace tpl
