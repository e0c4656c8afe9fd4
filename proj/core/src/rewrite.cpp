#include "tpl/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace tpl {

namespace {

using Tokens = std::vector<Token>;

struct TokensHash {
  std::size_t operator()(const Tokens& t) const {
    std::size_t h = 1469598103934665603ull;
    for (const Token& x : t) {
      h = (h ^ static_cast<std::size_t>(x.kind)) * 1099511628211ull;
      h = (h ^ static_cast<std::size_t>(x.index)) * 1099511628211ull;
    }
    return h;
  }
};

void apply_side(const Tokens& w, const Tokens& from, const Tokens& to,
                int max_len, std::set<Tokens>& out) {
  const std::size_t lw = w.size(), lf = from.size();
  if (lf == 0) {
    if (max_len >= 0 && lw + to.size() > static_cast<std::size_t>(max_len))
      return;
    for (std::size_t pos = 0; pos <= lw; ++pos) {
      Tokens nw;
      nw.reserve(lw + to.size());
      nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
      nw.insert(nw.end(), to.begin(), to.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(pos), w.end());
      out.insert(std::move(nw));
    }
    return;
  }
  if (lf > lw) return;
  if (max_len >= 0 &&
      lw - lf + to.size() > static_cast<std::size_t>(max_len))
    return;
  for (std::size_t pos = 0; pos + lf <= lw; ++pos) {
    if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<long>(pos)))
      continue;
    Tokens nw;
    nw.reserve(lw - lf + to.size());
    nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
    nw.insert(nw.end(), to.begin(), to.end());
    nw.insert(nw.end(), w.begin() + static_cast<long>(pos + lf), w.end());
    out.insert(std::move(nw));
  }
}

}  // namespace

std::vector<Tokens> token_neighbors(const Tokens& tokens,
                                    const std::vector<Relation>& rules,
                                    int max_len) {
  std::set<Tokens> out;
  for (const Relation& rule : rules) {
    apply_side(tokens, rule.first, rule.second, max_len, out);
    apply_side(tokens, rule.second, rule.first, max_len, out);
  }
  out.erase(tokens);
  return {std::make_move_iterator(out.begin()),
          std::make_move_iterator(out.end())};
}

std::vector<Word> rewrite_neighbors(const Word& w) {
  std::vector<Word> result;
  if (w.n < 2) return result;
  const std::vector<Relation>& rules = rewrite_rules(w.flavor, w.n);
  for (Tokens& t : token_neighbors(w.tokens, rules))
    result.push_back(Word{w.n, w.flavor, std::move(t)});
  return result;
}

TokenSearchResult bidirectional_token_search(const Tokens& from,
                                             const Tokens& to,
                                             const std::vector<Relation>& rules,
                                             std::uint64_t budget, int slack) {
  TokenSearchResult res;
  if (from == to) {
    res.equal = true;
    res.certificate = {from};
    res.visited = 1;
    return res;
  }
  const int max_len =
      static_cast<int>(std::max(from.size(), to.size())) + std::max(slack, 0);

  // Per side: interned sequences with parent links for path reconstruction.
  struct Side {
    std::vector<Tokens> nodes;
    std::vector<int> parent;
    std::unordered_map<Tokens, int, TokensHash> index;
    std::vector<int> frontier;

    int intern(Tokens t, int par) {
      int id = static_cast<int>(nodes.size());
      index.emplace(t, id);
      nodes.push_back(std::move(t));
      parent.push_back(par);
      return id;
    }
    std::vector<Tokens> chain(int id) const {  // root ... id
      std::vector<Tokens> path;
      for (int cur = id; cur >= 0; cur = parent[static_cast<std::size_t>(cur)])
        path.push_back(nodes[static_cast<std::size_t>(cur)]);
      std::reverse(path.begin(), path.end());
      return path;
    }
  };
  Side side[2];
  side[0].frontier.push_back(side[0].intern(from, -1));
  side[1].frontier.push_back(side[1].intern(to, -1));
  res.visited = 2;

  auto meet = [&](int k, int u, int v) {
    // Path: from-root ... meet ... to-root, with the meeting sequence shared.
    std::vector<Tokens> left =
        side[0].chain(k == 0 ? u : v);
    std::vector<Tokens> right =
        side[1].chain(k == 0 ? v : u);
    // left ends at the meet as the freshly interned node on side k; right
    // ends at the same sequence discovered from the other direction.
    left.insert(left.end(), right.rbegin() + 1, right.rend());
    res.equal = true;
    res.certificate = std::move(left);
  };

  while (!side[0].frontier.empty() && !side[1].frontier.empty() &&
         res.visited < budget) {
    const int k =
        side[0].frontier.size() <= side[1].frontier.size() ? 0 : 1;
    std::vector<int> next;
    for (int u : side[k].frontier) {
      // nodes may reallocate during interning; copy the tokens first
      const Tokens cur = side[k].nodes[static_cast<std::size_t>(u)];
      for (Tokens& nb : token_neighbors(cur, rules, max_len)) {
        if (side[k].index.count(nb)) continue;
        auto other = side[1 - k].index.find(nb);
        const int id = side[k].intern(std::move(nb), u);
        ++res.visited;
        if (other != side[1 - k].index.end()) {
          meet(k, id, other->second);
          return res;
        }
        next.push_back(id);
        if (res.visited >= budget) return res;
      }
    }
    side[k].frontier = std::move(next);
  }
  return res;
}

WordEqualityResult words_equal_in_monoid(const Word& w1, const Word& w2,
                                         std::uint64_t budget) {
  if (w1.n != w2.n || w1.flavor != w2.flavor)
    throw std::invalid_argument(
        "words_equal_in_monoid: words must share n and flavor");
  WordEqualityResult out;
  if (w1.n < 2) {
    out.equal = w1.tokens == w2.tokens;
    if (out.equal) out.certificate = {w1};
    out.visited = 1;
    return out;
  }
  TokenSearchResult r = bidirectional_token_search(
      w1.tokens, w2.tokens, rewrite_rules(w1.flavor, w1.n), budget);
  out.equal = r.equal;
  out.visited = r.visited;
  out.certificate.reserve(r.certificate.size());
  for (Tokens& t : r.certificate)
    out.certificate.push_back(Word{w1.n, w1.flavor, std::move(t)});
  return out;
}

bool certificate_replays(const std::vector<Tokens>& path,
                         const std::vector<Relation>& rules) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    std::vector<Tokens> nb = token_neighbors(path[k], rules);
    if (!std::binary_search(nb.begin(), nb.end(), path[k + 1])) return false;
  }
  return true;
}

}  // namespace tpl
