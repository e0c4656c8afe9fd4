#include "tpl/partition.hpp"

#include <algorithm>
#include <map>

namespace tpl {

DisjointSets::DisjointSets(int n) { reset(n); }

void DisjointSets::reset(int n) {
  parent_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  sets_ = n;
}

int DisjointSets::find(int x) const {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    parent_[static_cast<std::size_t>(x)] =
        parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
    x = parent_[static_cast<std::size_t>(x)];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);  // keep the smaller label as root
  parent_[static_cast<std::size_t>(b)] = a;
  --sets_;
  return true;
}

SetPartition discrete_partition(int n) {
  SetPartition p;
  p.n = n;
  p.blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) p.blocks.push_back({i});
  return p;
}

SetPartition partition_from_dsu(const DisjointSets& dsu) {
  std::map<int, std::vector<int>> by_root;
  for (int i = 1; i <= dsu.size(); ++i) by_root[dsu.find(i)].push_back(i);
  SetPartition p;
  p.n = dsu.size();
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    p.blocks.push_back(std::move(members));
  }
  // map keys are roots = block minima, already ascending
  return p;
}

SetPartition partition_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  DisjointSets dsu(n);
  for (auto [a, b] : pairs) dsu.unite(a, b);
  return partition_from_dsu(dsu);
}

bool partition_refines(const SetPartition& q, const SetPartition& p) {
  DisjointSets dsu(p.n);
  for (const auto& block : p.blocks)
    for (std::size_t k = 1; k < block.size(); ++k) dsu.unite(block[0], block[k]);
  for (const auto& block : q.blocks)
    for (std::size_t k = 1; k < block.size(); ++k)
      if (dsu.find(block[0]) != dsu.find(block[k])) return false;
  return true;
}

SetPartition partition_join(const SetPartition& a, const SetPartition& b) {
  DisjointSets dsu(a.n);
  for (const auto& block : a.blocks)
    for (std::size_t k = 1; k < block.size(); ++k) dsu.unite(block[0], block[k]);
  for (const auto& block : b.blocks)
    for (std::size_t k = 1; k < block.size(); ++k) dsu.unite(block[0], block[k]);
  return partition_from_dsu(dsu);
}

std::vector<int> partition_block_sizes(const SetPartition& p) {
  std::vector<int> sizes;
  sizes.reserve(p.blocks.size());
  for (const auto& b : p.blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string partition_text(const SetPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += ' ';
    out += '{';
    for (std::size_t k = 0; k < p.blocks[i].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(p.blocks[i][k]);
    }
    out += '}';
  }
  return out;
}

}  // namespace tpl
