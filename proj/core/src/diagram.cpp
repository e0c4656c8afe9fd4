#include "tpl/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tpl {

MorseEvent cup(int i) { return {EventKind::Cup, i, 0}; }
MorseEvent cap(int i) { return {EventKind::Cap, i, 0}; }
MorseEvent cross_pos(int i) { return {EventKind::CrossPos, i, 0}; }
MorseEvent cross_neg(int i) { return {EventKind::CrossNeg, i, 0}; }
MorseEvent pre_cross(int i) { return {EventKind::PreCross, i, 0}; }
MorseEvent tie_event(int i, int j) { return {EventKind::Tie, i, j}; }

namespace {

int width_delta(EventKind k) {
  switch (k) {
    case EventKind::Cup:
      return 2;
    case EventKind::Cap:
      return -2;
    default:
      return 0;
  }
}

// widths[g] = number of lanes at gap g (between row g-1 and row g).
std::vector<int> widths_of(const MorseDiagram& d) {
  std::vector<int> w;
  w.reserve(d.rows.size() + 1);
  int cur = d.closed ? 0 : d.braid_n;
  w.push_back(cur);
  for (const MorseEvent& e : d.rows) {
    cur += width_delta(e.kind);
    w.push_back(cur);
  }
  return w;
}

// A traversal position: lane l at gap g, moving down or up.
struct State {
  int g = 0;
  int l = 0;
  bool down = true;

  friend bool operator==(const State&, const State&) = default;
};

// One traversal step through the adjacent row. Caller guarantees the row
// exists (no boundary in the way).
State advance(const MorseDiagram& d, State s) {
  if (s.down) {
    const MorseEvent& e = d.rows[static_cast<std::size_t>(s.g)];
    switch (e.kind) {
      case EventKind::Cup:
        return {s.g + 1, s.l < e.i ? s.l : s.l + 2, true};
      case EventKind::Cap:
        if (s.l == e.i) return {s.g, e.i + 1, false};
        if (s.l == e.i + 1) return {s.g, e.i, false};
        return {s.g + 1, s.l < e.i ? s.l : s.l - 2, true};
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
      case EventKind::PreCross:
        if (s.l == e.i) return {s.g + 1, e.i + 1, true};
        if (s.l == e.i + 1) return {s.g + 1, e.i, true};
        return {s.g + 1, s.l, true};
      case EventKind::Tie:
        return {s.g + 1, s.l, true};
    }
  } else {
    const MorseEvent& e = d.rows[static_cast<std::size_t>(s.g - 1)];
    switch (e.kind) {
      case EventKind::Cup:
        if (s.l == e.i) return {s.g, e.i + 1, true};
        if (s.l == e.i + 1) return {s.g, e.i, true};
        return {s.g - 1, s.l < e.i ? s.l : s.l - 2, false};
      case EventKind::Cap:
        return {s.g - 1, s.l < e.i ? s.l : s.l + 2, false};
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
      case EventKind::PreCross:
        if (s.l == e.i) return {s.g - 1, e.i + 1, false};
        if (s.l == e.i + 1) return {s.g - 1, e.i, false};
        return {s.g - 1, s.l, false};
      case EventKind::Tie:
        return {s.g - 1, s.l, false};
    }
  }
  return s;  // unreachable
}

}  // namespace

std::optional<std::string> validate_diagram(const MorseDiagram& d) {
  if (!d.closed && d.braid_n < 1)
    return "braid boundary requires n >= 1";
  int width = d.closed ? 0 : d.braid_n;
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    const MorseEvent& e = d.rows[r];
    const std::string at = "row " + std::to_string(r + 1) + ": ";
    switch (e.kind) {
      case EventKind::Cup:
        if (e.i < 1 || e.i > width + 1)
          return at + "cup position " + std::to_string(e.i) +
                 " outside 1.." + std::to_string(width + 1);
        width += 2;
        break;
      case EventKind::Cap:
        if (width < 2)
          return at + "cap with width " + std::to_string(width) + " < 2";
        if (e.i < 1 || e.i > width - 1)
          return at + "cap position " + std::to_string(e.i) +
                 " outside 1.." + std::to_string(width - 1);
        width -= 2;
        break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
      case EventKind::PreCross:
        if (width < 2)
          return at + "crossing with width " + std::to_string(width) + " < 2";
        if (e.i < 1 || e.i > width - 1)
          return at + "crossing position " + std::to_string(e.i) +
                 " outside 1.." + std::to_string(width - 1);
        break;
      case EventKind::Tie:
        if (e.i == e.j) return at + "tie positions must be distinct";
        if (e.i < 1 || e.i > width || e.j < 1 || e.j > width)
          return at + "tie positions outside 1.." + std::to_string(width);
        break;
    }
  }
  const int want = d.closed ? 0 : d.braid_n;
  if (width != want)
    return "final width " + std::to_string(width) + ", expected " +
           std::to_string(want);
  return std::nullopt;
}

ComponentsResult components(const MorseDiagram& d) {
  if (auto err = validate_diagram(d))
    throw std::invalid_argument("components: invalid diagram: " + *err);
  const std::vector<int> widths = widths_of(d);
  const int rows = static_cast<int>(d.rows.size());

  ComponentMap cm;
  cm.comp.resize(widths.size());
  cm.down.resize(widths.size());
  for (std::size_t g = 0; g < widths.size(); ++g) {
    cm.comp[g].assign(static_cast<std::size_t>(widths[g]), 0);
    cm.down[g].assign(static_cast<std::size_t>(widths[g]), true);
  }

  auto assigned = [&](const State& s) {
    return cm.comp[static_cast<std::size_t>(s.g)]
                  [static_cast<std::size_t>(s.l - 1)] != 0;
  };
  auto mark = [&](const State& s, int id) {
    cm.comp[static_cast<std::size_t>(s.g)][static_cast<std::size_t>(s.l - 1)] =
        id;
    cm.down[static_cast<std::size_t>(s.g)][static_cast<std::size_t>(s.l - 1)] =
        s.down;
  };
  auto at_boundary = [&](const State& s) {
    return s.down ? s.g == rows : s.g == 0;
  };

  // Closed-curve traversal: walk until the start state recurs.
  auto run_loop = [&](State start, int id) {
    mark(start, id);
    State s = start;
    while (true) {
      State t = advance(d, s);
      if (t == start) break;
      mark(t, id);
      s = t;
    }
  };
  // Boundary-to-boundary arc traversal (braid diagrams).
  auto run_arc = [&](State start, int id) {
    mark(start, id);
    State s = start;
    while (!at_boundary(s)) {
      s = advance(d, s);
      mark(s, id);
    }
  };

  if (!d.closed) {
    for (int l = 1; l <= widths.front(); ++l) {
      State top{0, l, true};
      if (!assigned(top)) run_arc(top, ++cm.count);
    }
    for (int l = 1; l <= widths.back(); ++l) {
      State bottom{rows, l, false};
      if (!assigned(bottom)) run_arc(bottom, ++cm.count);
    }
  }
  // Anything left is a closed loop; start at its topmost cup, left leg down.
  for (int r = 0; r < rows; ++r) {
    if (d.rows[static_cast<std::size_t>(r)].kind != EventKind::Cup) continue;
    State left{r + 1, d.rows[static_cast<std::size_t>(r)].i, true};
    if (!assigned(left)) run_loop(left, ++cm.count);
  }

  DisjointSets dsu(cm.count);
  for (int r = 0; r < rows; ++r) {
    const MorseEvent& e = d.rows[static_cast<std::size_t>(r)];
    if (e.kind != EventKind::Tie) continue;
    const int a = cm.comp[static_cast<std::size_t>(r)]
                         [static_cast<std::size_t>(e.i - 1)];
    const int b = cm.comp[static_cast<std::size_t>(r)]
                         [static_cast<std::size_t>(e.j - 1)];
    dsu.unite(a, b);
  }
  return {std::move(cm), partition_from_dsu(dsu)};
}

std::vector<CrossingRecord> crossing_records(const MorseDiagram& d,
                                             const ComponentMap& cm) {
  std::vector<CrossingRecord> out;
  for (int r = 0; r < static_cast<int>(d.rows.size()); ++r) {
    const MorseEvent& e = d.rows[static_cast<std::size_t>(r)];
    if (e.kind != EventKind::CrossPos && e.kind != EventKind::CrossNeg &&
        e.kind != EventKind::PreCross)
      continue;
    CrossingRecord rec;
    rec.row = r;
    rec.kind = e.kind;
    rec.comp_a = cm.comp[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(e.i - 1)];
    rec.comp_b = cm.comp[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(e.i)];
    rec.down_a = cm.down[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(e.i - 1)];
    rec.down_b = cm.down[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(e.i)];
    out.push_back(rec);
  }
  return out;
}

MorseDiagram close_braid(const Word& w) {
  if (auto err = validate_word(w))
    throw std::invalid_argument("close_braid: invalid word: " + *err);
  if (w.flavor == Flavor::TSM)
    throw std::invalid_argument(
        "close_braid: singular words must be mapped through map_flavor_mu "
        "first");
  MorseDiagram d;
  d.closed = true;
  d.rows.reserve(2 * static_cast<std::size_t>(w.n) + w.tokens.size());
  for (int k = 1; k <= w.n; ++k) d.rows.push_back(cup(k));
  for (const Token& t : w.tokens) {
    switch (t.kind) {
      case TokenKind::SigmaPos:
        d.rows.push_back(cross_pos(t.index));
        break;
      case TokenKind::SigmaNeg:
        d.rows.push_back(cross_neg(t.index));
        break;
      case TokenKind::Pre:
        d.rows.push_back(pre_cross(t.index));
        break;
      case TokenKind::Tie:
        d.rows.push_back(tie_event(t.index, t.index + 1));
        break;
      case TokenKind::Singular:
        throw std::invalid_argument("close_braid: unexpected singular token");
    }
  }
  for (int k = w.n; k >= 1; --k) d.rows.push_back(cap(k));
  return d;
}

namespace {

std::vector<int> pre_crossing_rows(const MorseDiagram& d) {
  std::vector<int> rows;
  for (int r = 0; r < static_cast<int>(d.rows.size()); ++r)
    if (d.rows[static_cast<std::size_t>(r)].kind == EventKind::PreCross)
      rows.push_back(r);
  return rows;
}

void check_cap(std::size_t k, int cap, const char* who) {
  if (static_cast<int>(k) > cap)
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(k) +
                                " pre-crossings exceed the cap of " +
                                std::to_string(cap));
}

}  // namespace

void enumerate_resolutions(
    const MorseDiagram& d,
    const std::function<void(const Resolution&, const MorseDiagram&)>& fn,
    int cap) {
  if (auto err = validate_diagram(d))
    throw std::invalid_argument("enumerate_resolutions: invalid diagram: " +
                                *err);
  const std::vector<int> prs = pre_crossing_rows(d);
  const std::size_t k = prs.size();
  check_cap(k, cap, "enumerate_resolutions");
  MorseDiagram resolved = d;
  Resolution res;
  res.choice.assign(k, EventKind::CrossPos);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (std::size_t t = 0; t < k; ++t) {
      const bool neg = (mask >> (k - 1 - t)) & 1;
      res.choice[t] = neg ? EventKind::CrossNeg : EventKind::CrossPos;
      resolved.rows[static_cast<std::size_t>(prs[t])].kind = res.choice[t];
    }
    fn(res, resolved);
  }
}

std::vector<std::pair<Resolution, MorseDiagram>> all_resolutions(
    const MorseDiagram& d, int cap) {
  std::vector<std::pair<Resolution, MorseDiagram>> out;
  enumerate_resolutions(
      d, [&](const Resolution& r, const MorseDiagram& rd) {
        out.emplace_back(r, rd);
      },
      cap);
  return out;
}

std::vector<int> linking_vector(const MorseDiagram& d) {
  if (!d.closed)
    throw std::invalid_argument("linking_vector: diagram must be closed");
  ComponentsResult cr = components(d);
  // doubled linking number per unordered component pair = sum of signs
  std::map<std::pair<int, int>, int> sums;
  for (int a = 1; a <= cr.map.count; ++a)
    for (int b = a + 1; b <= cr.map.count; ++b) sums[{a, b}] = 0;
  for (const CrossingRecord& rec : crossing_records(d, cr.map)) {
    if (rec.kind == EventKind::PreCross)
      throw std::invalid_argument(
          "linking_vector: diagram has unresolved pre-crossings");
    if (rec.comp_a == rec.comp_b) continue;
    const int kind_sign = rec.kind == EventKind::CrossPos ? 1 : -1;
    const int orient = rec.down_a == rec.down_b ? 1 : -1;
    auto key = std::minmax(rec.comp_a, rec.comp_b);
    sums[{key.first, key.second}] += kind_sign * orient;
  }
  std::vector<int> out;
  out.reserve(sums.size());
  for (const auto& [pair, s] : sums) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

Dyadic dyadic(std::int64_t num, int log2_den) {
  Dyadic d{num, log2_den};
  if (d.num == 0) {
    d.log2_den = 0;
    return d;
  }
  while (d.log2_den > 0 && d.num % 2 == 0) {
    d.num /= 2;
    --d.log2_den;
  }
  return d;
}

Dyadic dyadic_add(Dyadic a, Dyadic b) {
  const int e = std::max(a.log2_den, b.log2_den);
  const std::int64_t num = (a.num << (e - a.log2_den)) +
                           (b.num << (e - b.log2_den));
  return dyadic(num, e);
}

std::string dyadic_text(const Dyadic& d) {
  if (d.log2_den == 0) return std::to_string(d.num);
  return std::to_string(d.num) + "/" +
         std::to_string(std::int64_t{1} << d.log2_den);
}

namespace {

std::int64_t binomial(int m, int t) {
  std::int64_t r = 1;
  for (int s = 0; s < t; ++s) r = r * (m - s) / (s + 1);
  return r;
}

std::vector<std::pair<std::vector<int>, Dyadic>> sorted_outcomes(
    std::map<std::vector<int>, Dyadic>&& acc) {
  std::vector<std::pair<std::vector<int>, Dyadic>> out;
  out.reserve(acc.size());
  for (auto& [vec, w] : acc) out.emplace_back(vec, w);
  return out;
}

}  // namespace

InvariantFingerprint fingerprint(const MorseDiagram& d, int cap) {
  if (!d.closed)
    throw std::invalid_argument("fingerprint: diagram must be closed");
  ComponentsResult cr = components(d);
  const std::vector<CrossingRecord> recs = crossing_records(d, cr.map);
  std::size_t k = 0;
  for (const CrossingRecord& r : recs)
    if (r.kind == EventKind::PreCross) ++k;
  check_cap(k, cap, "fingerprint");

  InvariantFingerprint fp;
  fp.components = cr.map.count;
  fp.partition = cr.partition;

  // Each crossing touches exactly one component pair, so the resolution
  // outcomes factor into independent per-pair distributions: classical
  // crossings fix a base sum, and each pre-crossing between distinct
  // components adds +-1 (its orientation factor only mirrors a symmetric
  // set). Pre-crossings within one component never affect linking.
  std::map<std::pair<int, int>, int> base;
  std::map<std::pair<int, int>, int> pre_count;
  for (int a = 1; a <= cr.map.count; ++a)
    for (int b = a + 1; b <= cr.map.count; ++b) base[{a, b}] = 0;
  for (const CrossingRecord& rec : recs) {
    if (rec.comp_a == rec.comp_b) continue;
    auto mm = std::minmax(rec.comp_a, rec.comp_b);
    const std::pair<int, int> key{mm.first, mm.second};
    if (rec.kind == EventKind::PreCross) {
      ++pre_count[key];
    } else {
      const int kind_sign = rec.kind == EventKind::CrossPos ? 1 : -1;
      const int orient = rec.down_a == rec.down_b ? 1 : -1;
      base[key] += kind_sign * orient;
    }
  }

  // Fixed values for pairs without pre-crossings; option lists for the rest.
  std::vector<int> fixed;
  struct PairOptions {
    std::vector<std::pair<int, std::int64_t>> values;  // (sum, count)
    int m = 0;
  };
  std::vector<PairOptions> varying;
  for (const auto& [key, b] : base) {
    auto it = pre_count.find(key);
    const int m = it == pre_count.end() ? 0 : it->second;
    if (m == 0) {
      fixed.push_back(b);
      continue;
    }
    PairOptions opts;
    opts.m = m;
    for (int t = 0; t <= m; ++t)
      opts.values.emplace_back(b + m - 2 * t, binomial(m, t));
    varying.push_back(std::move(opts));
  }

  int total_m = 0;
  for (const PairOptions& v : varying) total_m += v.m;

  std::map<std::vector<int>, Dyadic> acc;
  std::vector<int> chosen(varying.size(), 0);
  std::vector<int> outcome;
  auto emit = [&](std::int64_t count) {
    outcome = fixed;
    for (std::size_t idx = 0; idx < varying.size(); ++idx)
      outcome.push_back(
          varying[idx].values[static_cast<std::size_t>(chosen[idx])].first);
    std::sort(outcome.begin(), outcome.end());
    auto [it, inserted] = acc.try_emplace(outcome, dyadic(count, total_m));
    if (!inserted) it->second = dyadic_add(it->second, dyadic(count, total_m));
  };
  // Depth-first product over the per-pair distributions.
  std::function<void(std::size_t, std::int64_t)> walk =
      [&](std::size_t idx, std::int64_t count) {
        if (idx == varying.size()) {
          emit(count);
          return;
        }
        for (int t = 0; t <= varying[idx].m; ++t) {
          chosen[idx] = t;
          walk(idx + 1,
               count *
                   varying[idx].values[static_cast<std::size_t>(t)].second);
        }
      };
  walk(0, 1);
  fp.outcomes = sorted_outcomes(std::move(acc));
  return fp;
}

InvariantFingerprint fingerprint_by_enumeration(const MorseDiagram& d,
                                                int cap) {
  if (!d.closed)
    throw std::invalid_argument("fingerprint: diagram must be closed");
  ComponentsResult cr = components(d);
  const int k = static_cast<int>(pre_crossing_rows(d).size());
  check_cap(static_cast<std::size_t>(k), cap, "fingerprint");

  InvariantFingerprint fp;
  fp.components = cr.map.count;
  fp.partition = cr.partition;
  std::map<std::vector<int>, Dyadic> acc;
  enumerate_resolutions(
      d,
      [&](const Resolution&, const MorseDiagram& rd) {
        std::vector<int> lk = linking_vector(rd);
        auto [it, inserted] = acc.try_emplace(lk, dyadic(1, k));
        if (!inserted) it->second = dyadic_add(it->second, dyadic(1, k));
      },
      cap);
  fp.outcomes = sorted_outcomes(std::move(acc));
  return fp;
}

bool operator==(const InvariantFingerprint& a, const InvariantFingerprint& b) {
  return a.components == b.components &&
         partition_block_sizes(a.partition) ==
             partition_block_sizes(b.partition) &&
         a.outcomes == b.outcomes;
}

bool operator!=(const InvariantFingerprint& a, const InvariantFingerprint& b) {
  return !(a == b);
}

std::string fingerprint_text(const InvariantFingerprint& fp) {
  std::ostringstream os;
  os << "components=" << fp.components << "\n";
  os << "partition=" << partition_text(fp.partition) << "\n";
  for (const auto& [vec, w] : fp.outcomes) {
    os << "[";
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (i) os << " ";
      os << vec[i] << "/2";
    }
    os << "] " << dyadic_text(w) << "\n";
  }
  return os.str();
}

std::string serialize_diagram(const MorseDiagram& d) {
  std::ostringstream os;
  if (d.closed)
    os << "morse closed\n";
  else
    os << "morse braid n=" << d.braid_n << "\n";
  for (const MorseEvent& e : d.rows) {
    switch (e.kind) {
      case EventKind::Cup:
        os << "cup " << e.i << "\n";
        break;
      case EventKind::Cap:
        os << "cap " << e.i << "\n";
        break;
      case EventKind::CrossPos:
        os << "x+ " << e.i << "\n";
        break;
      case EventKind::CrossNeg:
        os << "x- " << e.i << "\n";
        break;
      case EventKind::PreCross:
        os << "p " << e.i << "\n";
        break;
      case EventKind::Tie:
        os << "tie " << e.i << " " << e.j << "\n";
        break;
    }
  }
  return os.str();
}

DiagramParseResult parse_diagram(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  if (!(is >> tok) || tok != "morse")
    return {std::nullopt, "expected header starting with 'morse'"};
  MorseDiagram d;
  if (!(is >> tok)) return {std::nullopt, "missing boundary kind"};
  if (tok == "closed") {
    d.closed = true;
  } else if (tok == "braid") {
    d.closed = false;
    if (!(is >> tok) || tok.rfind("n=", 0) != 0)
      return {std::nullopt, "braid boundary requires n=<int>"};
    try {
      d.braid_n = std::stoi(tok.substr(2));
    } catch (const std::exception&) {
      return {std::nullopt, "bad strand count '" + tok + "'"};
    }
  } else {
    return {std::nullopt, "boundary must be 'closed' or 'braid'"};
  }
  auto read_int = [&](int& out) {
    std::string s;
    if (!(is >> s)) return false;
    try {
      out = std::stoi(s);
    } catch (const std::exception&) {
      return false;
    }
    return true;
  };
  while (is >> tok) {
    MorseEvent e;
    if (tok == "cup")
      e.kind = EventKind::Cup;
    else if (tok == "cap")
      e.kind = EventKind::Cap;
    else if (tok == "x+")
      e.kind = EventKind::CrossPos;
    else if (tok == "x-")
      e.kind = EventKind::CrossNeg;
    else if (tok == "p")
      e.kind = EventKind::PreCross;
    else if (tok == "tie")
      e.kind = EventKind::Tie;
    else
      return {std::nullopt, "unknown event '" + tok + "'"};
    if (!read_int(e.i)) return {std::nullopt, "missing position after '" + tok + "'"};
    if (e.kind == EventKind::Tie && !read_int(e.j))
      return {std::nullopt, "tie requires two positions"};
    d.rows.push_back(e);
  }
  if (auto err = validate_diagram(d)) return {std::nullopt, *err};
  return {std::move(d), ""};
}

}  // namespace tpl
