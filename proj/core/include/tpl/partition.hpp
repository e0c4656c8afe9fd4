#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tpl {

// Union-find over {1..n}.
class DisjointSets {
 public:
  explicit DisjointSets(int n = 0);
  void reset(int n);
  int find(int x) const;          // path-halving, logically const
  bool unite(int a, int b);       // returns true if two sets merged
  int count() const { return sets_; }
  int size() const { return static_cast<int>(parent_.size()) - 1; }

 private:
  mutable std::vector<int> parent_;  // 1-based; parent_[0] unused
  int sets_ = 0;
};

// A partition of {1..n} into disjoint nonempty blocks. Canonical form:
// each block sorted ascending, blocks ordered by their minimum element.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

SetPartition discrete_partition(int n);
SetPartition partition_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
SetPartition partition_from_dsu(const DisjointSets& dsu);

// True when every pair inside each block of q is already joined in p.
bool partition_refines(const SetPartition& q, const SetPartition& p);

// Coarsest common refinement-join: union of both pair sets.
SetPartition partition_join(const SetPartition& a, const SetPartition& b);

// Sorted ascending multiset of block sizes (the label-free shape).
std::vector<int> partition_block_sizes(const SetPartition& p);

// Text form "{1,3} {2}" with canonical ordering.
std::string partition_text(const SetPartition& p);

}  // namespace tpl
