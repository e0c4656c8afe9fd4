#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpl/partition.hpp"
#include "tpl/word.hpp"

namespace tpl {

// One row of a Morse-encoded diagram. Positions are 1-based within the
// current width. Cup inserts two strands at positions i, i+1; Cap consumes
// positions i, i+1; crossings and pre-crossings act on i, i+1; Tie marks
// positions i != j without altering strands.
enum class EventKind : unsigned char { Cup, Cap, CrossPos, CrossNeg, PreCross, Tie };

struct MorseEvent {
  EventKind kind;
  int i = 0;
  int j = 0;  // Tie only

  friend auto operator<=>(const MorseEvent&, const MorseEvent&) = default;
};

MorseEvent cup(int i);
MorseEvent cap(int i);
MorseEvent cross_pos(int i);
MorseEvent cross_neg(int i);
MorseEvent pre_cross(int i);
MorseEvent tie_event(int i, int j);

// A diagram is a row sequence with either closed boundary (width 0 at top
// and bottom) or braid boundary (width n at both).
struct MorseDiagram {
  bool closed = true;
  int braid_n = 0;  // braid boundary width; ignored when closed
  std::vector<MorseEvent> rows;

  friend auto operator<=>(const MorseDiagram&, const MorseDiagram&) = default;
};

// Width bookkeeping, boundary condition, index bounds, tie distinctness.
// std::nullopt when valid, else a message naming the first offending row.
std::optional<std::string> validate_diagram(const MorseDiagram& d);

// Arc-level component assignment. Arcs are the lane segments between
// consecutive rows: gap g (0 .. rows+1 exclusive) lies between row g-1 and
// row g. comp[g][l-1] is the 1-based component id of the segment in lane l
// at gap g; down[g][l-1] is its orientation along the component traversal.
//
// Components are numbered in discovery order: closed components start at
// their topmost cup and are traversed from its left leg downward; braid
// boundary arcs start at the top boundary, left to right.
struct ComponentMap {
  int count = 0;
  std::vector<std::vector<int>> comp;
  std::vector<std::vector<bool>> down;
};

struct ComponentsResult {
  ComponentMap map;
  SetPartition partition;  // over component ids, induced by tie events
};

// Traces every arc and maps each Tie event to the component pair owning its
// positions; the partition is the transitive closure of those pairs.
ComponentsResult components(const MorseDiagram& d);

// One classical or pre-crossing together with the components and
// orientations of the two strands entering it (upper-left and upper-right
// legs). The topological sign of a classical crossing is
//   (+1 for CrossPos, -1 for CrossNeg) * (+1 if both legs share orientation,
//    -1 otherwise).
struct CrossingRecord {
  int row = 0;
  EventKind kind = EventKind::CrossPos;
  int comp_a = 0, comp_b = 0;  // components of lanes i, i+1 above the row
  bool down_a = true, down_b = true;
};

std::vector<CrossingRecord> crossing_records(const MorseDiagram& d,
                                             const ComponentMap& cm);

// Standard closure: n cups, the braid body, n caps, with return strands
// routed disjointly to the right. Sigma tokens become classical crossings,
// pre tokens become pre-crossings, ties become Tie rows. TSM words are
// rejected (map through map_flavor_mu first); throws std::invalid_argument.
MorseDiagram close_braid(const Word& w);

// Assignment of each pre-crossing (in row order) to a classical kind.
struct Resolution {
  std::vector<EventKind> choice;  // CrossPos or CrossNeg per pre-crossing

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

// Streams all 2^k resolved diagrams in lexicographic order over the
// pre-crossings in row order with CrossPos < CrossNeg. Throws
// std::invalid_argument when k exceeds cap.
void enumerate_resolutions(
    const MorseDiagram& d,
    const std::function<void(const Resolution&, const MorseDiagram&)>& fn,
    int cap = 20);

// Convenience materialized form.
std::vector<std::pair<Resolution, MorseDiagram>> all_resolutions(
    const MorseDiagram& d, int cap = 20);

// Pairwise linking numbers of a classical closed diagram, doubled to stay
// integral: entry = sum of signs of the crossings between a component pair
// (the linking number is half that). One entry per unordered pair of
// distinct components, sorted ascending; empty for knots. Throws
// std::invalid_argument on pre-crossings.
std::vector<int> linking_vector(const MorseDiagram& d);

// An exact dyadic weight num / 2^log2_den, kept reduced.
struct Dyadic {
  std::int64_t num = 0;
  int log2_den = 0;  // denominator exponent

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

Dyadic dyadic(std::int64_t num, int log2_den);  // reduces
Dyadic dyadic_add(Dyadic a, Dyadic b);
std::string dyadic_text(const Dyadic& d);  // "3/8", "1", "1/2"

// The resolution-set invariant: component count, tie-induced component
// partition, and the weighted multiset of doubled linking vectors over all
// resolutions. Outcomes are sorted by vector; weights sum to 1.
struct InvariantFingerprint {
  int components = 0;
  SetPartition partition;  // labeled, for display
  std::vector<std::pair<std::vector<int>, Dyadic>> outcomes;
};

// Label-free comparison: component count, partition block sizes, and the
// outcome multiset. Component numbering is a traversal artifact, so labeled
// partitions are not compared directly.
bool operator==(const InvariantFingerprint& a, const InvariantFingerprint& b);
bool operator!=(const InvariantFingerprint& a, const InvariantFingerprint& b);

std::string fingerprint_text(const InvariantFingerprint& fp);

// Computes the fingerprint of a (possibly pre-crossed, possibly tied)
// closed diagram. Pre-crossing resolutions factor through independent
// per-component-pair convolutions, so the cost is polynomial in practice;
// cap still bounds the pre-crossing count for parity with enumeration.
InvariantFingerprint fingerprint(const MorseDiagram& d, int cap = 20);

// Reference implementation by explicit enumeration of all 2^k resolutions;
// used as a cross-check oracle in tests.
InvariantFingerprint fingerprint_by_enumeration(const MorseDiagram& d,
                                                int cap = 20);

// Diagram text format: header "morse closed" or "morse braid n=<int>", then
// one event per line: "cup <i>", "cap <i>", "x+ <i>", "x- <i>", "p <i>",
// "tie <i> <j>".
std::string serialize_diagram(const MorseDiagram& d);
struct DiagramParseResult {
  std::optional<MorseDiagram> diagram;
  std::string error;
};
DiagramParseResult parse_diagram(std::string_view text);

}  // namespace tpl
