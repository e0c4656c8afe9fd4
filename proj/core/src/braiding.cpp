#include "tpl/braiding.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tpl {

namespace {

std::vector<int> gap_widths(const std::vector<MorseEvent>& rows) {
  std::vector<int> w(rows.size() + 1, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int delta = 0;
    if (rows[r].kind == EventKind::Cup) delta = 2;
    if (rows[r].kind == EventKind::Cap) delta = -2;
    w[r + 1] = w[r] + delta;
  }
  return w;
}

// Lane of the same strand just above row `e` for a strand sitting at lane
// `l` just below it; -1 when the strand ends in the row (a cup leg reached
// while moving upward).
int lane_above(const MorseEvent& e, int l) {
  switch (e.kind) {
    case EventKind::Cup:
      if (l == e.i || l == e.i + 1) return -1;
      return l > e.i + 1 ? l - 2 : l;
    case EventKind::Cap:
      return l >= e.i ? l + 2 : l;
    case EventKind::CrossPos:
    case EventKind::CrossNeg:
    case EventKind::PreCross:
      if (l == e.i) return e.i + 1;
      if (l == e.i + 1) return e.i;
      return l;
    case EventKind::Tie:
      return l;
  }
  return l;
}

// A maximal upward run of one curve: from a cap's departing leg up to the
// cup leg it arrives at. `lanes[g - (cup_row + 1)]` is the run's lane at
// gap g for g in [cup_row + 1, cap_row].
struct UpArc {
  int cup_row = -1;
  int cap_row = -1;
  std::vector<int> lanes;
  // Crossing rows the run passes through, top to bottom, with whether the
  // run's strand passes over.
  std::vector<std::pair<int, bool>> crossings;
  bool has_pre = false;

  int lane_at(int gap) const { return lanes[gap - (cup_row + 1)]; }
};

std::vector<UpArc> collect_up_arcs(const std::vector<MorseEvent>& rows,
                                   const ComponentMap& cm) {
  std::vector<UpArc> arcs;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    const MorseEvent& cap = rows[r];
    if (cap.kind != EventKind::Cap) continue;
    UpArc arc;
    arc.cap_row = r;
    int g = r;
    int l = cm.down[r][cap.i - 1] ? cap.i + 1 : cap.i;
    std::vector<std::pair<int, int>> segs;  // (gap, lane), bottom to top
    for (;;) {
      segs.emplace_back(g, l);
      const MorseEvent& e = rows[g - 1];
      int up = lane_above(e, l);
      if (up < 0) {
        arc.cup_row = g - 1;
        break;
      }
      if ((l == e.i || l == e.i + 1) &&
          (e.kind == EventKind::CrossPos || e.kind == EventKind::CrossNeg ||
           e.kind == EventKind::PreCross)) {
        if (e.kind == EventKind::PreCross) {
          arc.has_pre = true;
        } else {
          bool left_over = e.kind == EventKind::CrossPos;
          bool over = (up == e.i) ? left_over : !left_over;
          arc.crossings.emplace_back(g - 1, over);
        }
      }
      l = up;
      --g;
    }
    arc.lanes.resize(segs.size());
    for (const auto& [gap, lane] : segs) arc.lanes[gap - (arc.cup_row + 1)] = lane;
    arcs.push_back(std::move(arc));
  }
  return arcs;
}

// Rewrites the rows so that the arc's upward travel happens on a fresh
// innermost closure return at the right edge. The replacement strand slides
// out over (or under) everything per the arc's label; the arc's own cup,
// cap, and crossings disappear; tie endpoints on the arc move to the new
// return channel.
std::vector<MorseEvent> eliminate_arc(const std::vector<MorseEvent>& rows,
                                      const std::vector<int>& widths, int t,
                                      const UpArc& arc, bool over) {
  const int rt = arc.cup_row;
  const int rb = arc.cap_row;
  const int len = static_cast<int>(rows.size());
  auto alpha = [&](int g) -> int {
    return (g >= rt + 1 && g <= rb) ? arc.lane_at(g) : -1;
  };

  std::vector<MorseEvent> out;
  out.reserve(rows.size() + 8);
  for (int r = 0; r < t; ++r) out.push_back(rows[r]);
  out.push_back(cup(t + 1));

  for (int r = t; r < len - t; ++r) {
    const MorseEvent& e = rows[r];
    const int W = widths[r];
    if (r == rt) {
      // Deleted cup: the new strand cuts left from the right edge of the
      // body into the slot the cup vacated.
      for (int q = W - t + 1; q > e.i; --q)
        out.push_back(over ? cross_neg(q - 1)
                           : cross_pos(q - 1));
      continue;
    }
    if (r == rb) {
      // Deleted cap: the surviving leg cuts right to the new return pair.
      const int target = widths[r + 1] - t + 1;
      for (int q = e.i; q < target; ++q)
        out.push_back(over ? cross_pos(q)
                           : cross_neg(q));
      continue;
    }
    const int a = alpha(r);
    if (a < 0) {
      // Above the cup or below the cap: only tie endpoints resting on older
      // return channels shift (the floating strand and its channel slot in
      // to their left).
      if (e.kind == EventKind::Tie) {
        int i2 = e.i > W - t ? e.i + 2 : e.i;
        int j2 = e.j > W - t ? e.j + 2 : e.j;
        out.push_back(tie_event(i2, j2));
      } else {
        out.push_back(e);
      }
      continue;
    }
    // Rows the arc's lane runs through.
    switch (e.kind) {
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
        if (a == e.i || a == e.i + 1) continue;  // the arc's own crossing
        out.push_back(MorseEvent{e.kind, a < e.i ? e.i - 1 : e.i, 0});
        break;
      case EventKind::PreCross:
        assert(a != e.i && a != e.i + 1);
        out.push_back(pre_cross(a < e.i ? e.i - 1 : e.i));
        break;
      case EventKind::Cup:
        out.push_back(cup(a < e.i ? e.i - 1 : e.i));
        break;
      case EventKind::Cap:
        assert(a != e.i && a != e.i + 1);
        out.push_back(cap(a < e.i ? e.i - 1 : e.i));
        break;
      case EventKind::Tie: {
        auto fix = [&](int p) {
          if (p == a) return W - t;  // ride to the new channel
          if (p > W - t) return p;   // older channel: net shift is zero
          return a < p ? p - 1 : p;
        };
        int i2 = fix(e.i), j2 = fix(e.j);
        if (i2 != j2)
          out.push_back(tie_event(std::min(i2, j2), std::max(i2, j2)));
        break;
      }
    }
  }

  out.push_back(cap(t + 1));
  for (int r = len - t; r < len; ++r) out.push_back(rows[r]);
  return out;
}

}  // namespace

MorseDiagram orient_precrossings_down(const MorseDiagram& d) {
  if (auto err = validate_diagram(d))
    throw std::invalid_argument("orient_precrossings_down: " + *err);
  if (!d.closed)
    throw std::invalid_argument("orient_precrossings_down: need a closed diagram");
  MorseDiagram cur = d;
  for (;;) {
    ComponentsResult res = components(cur);
    int pick = -1;
    bool right_leg_up = false;
    for (int r = static_cast<int>(cur.rows.size()) - 1; r >= 0; --r) {
      const MorseEvent& e = cur.rows[r];
      if (e.kind != EventKind::PreCross) continue;
      bool left_down = res.map.down[r][e.i - 1];
      bool right_down = res.map.down[r][e.i];
      if (left_down && right_down) continue;
      pick = r;
      right_leg_up = !right_down;
      break;
    }
    if (pick < 0) return cur;
    const int i = cur.rows[pick].i;
    // Detour the upward strand through a cup/cap pair so it runs downward
    // through the pre-crossing. With the right leg up the detour sits on
    // the left; with only the left leg up it sits on the right. A crossing
    // with both legs up becomes right-leg-down first, then the other rule
    // finishes the job on a later pass.
    std::vector<MorseEvent> rep;
    if (right_leg_up)
      rep = {cup(i), pre_cross(i + 1),
             cap(i + 2)};
    else
      rep = {cup(i + 2), pre_cross(i + 1),
             cap(i)};
    cur.rows.erase(cur.rows.begin() + pick);
    cur.rows.insert(cur.rows.begin() + pick, rep.begin(), rep.end());
  }
}

Word braid_diagram(const MorseDiagram& d) {
  if (auto err = validate_diagram(d))
    throw std::invalid_argument("braid_diagram: " + *err);
  if (!d.closed)
    throw std::invalid_argument("braid_diagram: need a closed diagram");
  if (d.rows.empty())
    throw std::invalid_argument("braid_diagram: empty diagram has no braid form");

  MorseDiagram cur = orient_precrossings_down(d);
  int t = 0;  // closure returns built so far (prefix cups / suffix caps)

  for (int pass = 0;; ++pass) {
    if (pass > 200000)
      throw std::logic_error("braid_diagram: pass limit exceeded");
    if (auto err = validate_diagram(cur))
      throw std::logic_error("braid_diagram: internal surgery broke the diagram: " + *err);
    ComponentsResult res = components(cur);
    std::vector<UpArc> arcs = collect_up_arcs(cur.rows, res.map);

    // Arcs whose cup is not one of the prefix return cups still need work;
    // process the one with the topmost cup.
    const int len = static_cast<int>(cur.rows.size());
    const UpArc* bad = nullptr;
    for (const UpArc& a : arcs) {
      if (a.cup_row < t || a.cup_row >= len - t) continue;
      if (!bad || a.cup_row < bad->cup_row) bad = &a;
    }
    if (!bad) break;
    if (bad->has_pre)
      throw std::logic_error("braid_diagram: upward strand through a pre-crossing");

    std::vector<std::pair<int, bool>> crossings = bad->crossings;
    std::sort(crossings.begin(), crossings.end());
    std::size_t run = 0;
    while (run + 1 < crossings.size() &&
           crossings[run + 1].second == crossings[run].second)
      ++run;
    if (run + 1 < crossings.size()) {
      // Mixed crossing types: split the arc right below its topmost
      // homogeneous run with a cup/cap wiggle; the top piece is handled on
      // the next pass.
      const int at = crossings[run].first + 1;
      const int a = bad->lane_at(at);
      const MorseEvent wiggle[] = {cup(a + 1), cap(a)};
      cur.rows.insert(cur.rows.begin() + at, std::begin(wiggle), std::end(wiggle));
      continue;
    }
    const bool over = !crossings.empty() && crossings.front().second;
    cur.rows = eliminate_arc(cur.rows, gap_widths(cur.rows), t, *bad, over);
    ++t;
  }

  // The rows now spell out a literal braid closure: t nested cups, a body
  // of crossings and ties on the first t lanes, t nested caps.
  const int len = static_cast<int>(cur.rows.size());
  const int n = t;
  for (int r = 0; r < t; ++r) {
    if (cur.rows[r].kind != EventKind::Cup || cur.rows[r].i != r + 1 ||
        cur.rows[len - 1 - r].kind != EventKind::Cap ||
        cur.rows[len - 1 - r].i != r + 1)
      throw std::logic_error("braid_diagram: closure frame out of shape");
  }

  ComponentsResult fin = components(cur);
  std::vector<Token> tokens;
  for (int r = t; r < len - t; ++r) {
    const MorseEvent& e = cur.rows[r];
    switch (e.kind) {
      case EventKind::CrossPos:
        tokens.push_back(sigma(e.i));
        break;
      case EventKind::CrossNeg:
        tokens.push_back(sigma_inv(e.i));
        break;
      case EventKind::PreCross:
        tokens.push_back(pre(e.i));
        break;
      case EventKind::Tie: {
        // Endpoints that rode to a return channel reattach to the leftmost
        // braid strand of the same component at this height.
        auto anchor = [&](int p) {
          if (p <= n) return p;
          int cid = fin.map.comp[r][p - 1];
          for (int l = 1; l <= n; ++l)
            if (fin.map.comp[r][l - 1] == cid) return l;
          throw std::logic_error("braid_diagram: component missing from body");
        };
        int i2 = anchor(e.i), j2 = anchor(e.j);
        if (i2 == j2) break;  // a tie within one strand says nothing
        std::vector<Token> tie_tokens =
            generalized_tie_tokens(std::min(i2, j2), std::max(i2, j2));
        tokens.insert(tokens.end(), tie_tokens.begin(), tie_tokens.end());
        break;
      }
      case EventKind::Cup:
      case EventKind::Cap:
        throw std::logic_error("braid_diagram: cup or cap left in the body");
    }
  }
  return Word{n, Flavor::TPM, std::move(tokens)};
}

Word apply_l_move(const Word& w, const LMoveSpec& spec) {
  if (auto err = validate_word(w))
    throw std::invalid_argument("apply_l_move: " + *err);
  const int n = w.n;
  const int len = static_cast<int>(w.tokens.size());
  if (spec.slot < 0 || spec.slot > len)
    throw std::invalid_argument("apply_l_move: slot out of range");
  if (spec.strand < 1 || spec.strand > n)
    throw std::invalid_argument("apply_l_move: strand position out of range");
  if (spec.kink == LMoveKink::Classical && spec.kink_sign != 1 && spec.kink_sign != -1)
    throw std::invalid_argument("apply_l_move: classical kink sign must be +1 or -1");
  if (spec.kink == LMoveKink::PreCrossing && w.flavor != Flavor::PM &&
      w.flavor != Flavor::TPM)
    throw std::invalid_argument(
        "apply_l_move: pre-crossing kink needs a flavor with pre tokens");

  const bool over = spec.kind == LMoveKind::Over;
  const int j = spec.strand;
  std::vector<Token> toks(w.tokens.begin(), w.tokens.begin() + spec.slot);
  toks.reserve(w.tokens.size() + 2 * (n - j) + 1);
  for (int k = n; k > j; --k) toks.push_back(over ? sigma_inv(k) : sigma(k));
  switch (spec.kink) {
    case LMoveKink::None:
      toks.push_back(over ? sigma(j) : sigma_inv(j));
      break;
    case LMoveKink::Classical:
      toks.push_back(spec.kink_sign > 0 ? sigma(j) : sigma_inv(j));
      break;
    case LMoveKink::PreCrossing:
      toks.push_back(pre(j));
      break;
  }
  for (int k = j + 1; k <= n; ++k) toks.push_back(over ? sigma(k) : sigma_inv(k));
  toks.insert(toks.end(), w.tokens.begin() + spec.slot, w.tokens.end());
  return Word{n + 1, w.flavor, std::move(toks)};
}

}  // namespace tpl
