#include "tpl/normalize.hpp"

#include <utility>

namespace tpl {

TieNormalForm normalize_ties(const Word& w) {
  TieNormalForm out;
  out.part = discrete_partition(w.n);
  out.pure.n = w.n;
  switch (w.flavor) {
    case Flavor::TM:
      out.pure.flavor = Flavor::B;
      break;
    case Flavor::TPM:
      out.pure.flavor = Flavor::PM;
      break;
    default:
      out.pure.flavor = w.flavor;
      break;
  }
  if (w.flavor == Flavor::B || w.flavor == Flavor::PM) {
    out.pure = w;
    return out;
  }

  // suffix[k] = permutation of the sub-word strictly below position k,
  // built back to front; suffix(i) = bottom position of strand at level k
  // entering lane i.
  const int n = w.n;
  std::vector<int> suffix(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) suffix[static_cast<std::size_t>(i - 1)] = i;

  DisjointSets dsu(n);
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    const Token& t = *it;
    if (t.kind == TokenKind::Tie) {
      dsu.unite(suffix[static_cast<std::size_t>(t.index - 1)],
                suffix[static_cast<std::size_t>(t.index)]);
    } else {
      std::swap(suffix[static_cast<std::size_t>(t.index - 1)],
                suffix[static_cast<std::size_t>(t.index)]);
    }
  }
  out.part = partition_from_dsu(dsu);

  out.pure.tokens.reserve(w.tokens.size());
  for (const Token& t : w.tokens)
    if (t.kind != TokenKind::Tie) out.pure.tokens.push_back(t);
  return out;
}

}  // namespace tpl
