#pragma once

#include "tpl/partition.hpp"
#include "tpl/word.hpp"

namespace tpl {

// Result of sliding every tie to the bottom of the word.
struct TieNormalForm {
  Word pure;          // w with tie tokens deleted (flavor demoted: TM -> B,
                      // TPM -> PM; TSM stays TSM, just tie-free)
  SetPartition part;  // strand partition induced at the bottom
};

// Deletes the tie tokens and records the partition they induce at the
// bottom: each tie joining strands (i, i+1) at position k contributes the
// unordered pair of bottom positions reached by those strands through the
// sub-word strictly below k; the partition is the transitive closure of all
// contributed pairs. Tie-free flavors pass through with the discrete
// partition.
TieNormalForm normalize_ties(const Word& w);

}  // namespace tpl
