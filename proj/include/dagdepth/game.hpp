// Copyright 2026 The dagdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dagdepth/dg_format.hpp"
#include "dagdepth/decomposition.hpp"
#include "dagdepth/digraph.hpp"

namespace dagdepth {

/// Default vertex ceiling for exhaustive strategy verification.
inline constexpr int kDefaultVerifyLimit = 12;
/// Default vertex ceiling for the brute-force game value.
inline constexpr int kDefaultCopnumberLimit = 8;

/// One position of the placement game. Cops are never lifted, so `covered`
/// only grows; the robber always sits on an uncovered vertex; `cursor` is
/// the copy that justified the latest placement (empty before the first).
struct GameState {
  std::set<std::string> covered;
  std::string robber;
  std::optional<std::string> cursor;
};

// ---------------------------------------------------------------------------
// Traces

enum class TraceEventKind { RobberMove, CopPlace, CopSkip, Capture, Stuck };

struct TraceEvent {
  TraceEventKind kind;
  std::string copy;    // CopPlace, CopSkip
  std::string vertex;  // RobberMove, CopPlace

  friend bool operator==(const TraceEvent& a, const TraceEvent& b) {
    return a.kind == b.kind && a.copy == b.copy && a.vertex == b.vertex;
  }
};

using Trace = std::vector<TraceEvent>;

/// One event per line: "R <vertex>" robber move, "C <copy-id> <vertex>"
/// placement, "S <copy-id>" skip, "X" capture, "!" stuck.
inline std::string serialize_trace(const Trace& trace) {
  std::ostringstream out;
  for (const TraceEvent& e : trace) {
    switch (e.kind) {
      case TraceEventKind::RobberMove: out << "R " << e.vertex << "\n"; break;
      case TraceEventKind::CopPlace:
        out << "C " << e.copy << " " << e.vertex << "\n";
        break;
      case TraceEventKind::CopSkip: out << "S " << e.copy << "\n"; break;
      case TraceEventKind::Capture: out << "X\n"; break;
      case TraceEventKind::Stuck: out << "!\n"; break;
    }
  }
  return out.str();
}

inline Trace parse_trace(const std::string& text) {
  Trace trace;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> tok = detail::tokenize_line(raw);
    if (tok.empty()) continue;
    TraceEvent e;
    if (tok[0] == "R" && tok.size() == 2) {
      e.kind = TraceEventKind::RobberMove;
      e.vertex = tok[1];
    } else if (tok[0] == "C" && tok.size() == 3) {
      e.kind = TraceEventKind::CopPlace;
      e.copy = tok[1];
      e.vertex = tok[2];
    } else if (tok[0] == "S" && tok.size() == 2) {
      e.kind = TraceEventKind::CopSkip;
      e.copy = tok[1];
    } else if (tok[0] == "X" && tok.size() == 1) {
      e.kind = TraceEventKind::Capture;
    } else if (tok[0] == "!" && tok.size() == 1) {
      e.kind = TraceEventKind::Stuck;
    } else {
      throw ParseError(lineno, "unrecognized trace event");
    }
    trace.push_back(e);
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Moves

/// Vertices the robber can occupy next: everything reachable from pos by
/// directed paths through uncovered vertices (including staying), minus the
/// announced target if one is given. The target may be passed through but
/// not ended on. pos must be uncovered.
inline std::set<std::string> robber_options(
    const Digraph& d, const std::set<std::string>& covered,
    const std::string& pos,
    const std::optional<std::string>& target = std::nullopt) {
  int s = d.index_of(pos);
  std::vector<char> active(d.vertex_count(), 1);
  for (const std::string& c : covered) {
    active[d.index_of(c)] = 0;
  }
  if (!active[s]) throw Error("robber position '" + pos + "' is covered");
  if (target) d.index_of(*target);  // existence check
  std::vector<char> seen = detail::reach_within(d, active, s);
  std::set<std::string> out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (seen[v]) out.insert(d.name_of(v));
  }
  if (target) out.erase(*target);
  return out;
}

namespace detail {

/// True when some copy reachable from `from` in P (including `from`) maps
/// to the original vertex `v`.
inline bool reaches_copy_of(const Digraph& p, const std::vector<int>& org_idx,
                            int from, int v) {
  std::vector<char> seen(p.vertex_count(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    if (org_idx[c] == v) return true;
    for (int w : p.out_neighbors(c)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace detail

/// Copies the cop player may choose next: the roots of the decomposition
/// when there is no cursor, otherwise the children of the cursor, filtered
/// to those with a directed path (length >= 0, the candidate itself counts)
/// to some copy of the robber's current position. An empty result means the
/// strategy is stuck.
inline std::set<std::string> legal_cop_choices(
    const Decomposition& dec, const std::optional<std::string>& cursor,
    const std::string& robber) {
  const Digraph& p = dec.structure;
  if (!dag_structure(p).is_dag) {
    throw Error("decomposition structure has a cycle");
  }
  // Mark the copies of the robber's vertex; the path test targets them.
  std::vector<int> org_idx(p.vertex_count(), -1);
  for (int c = 0; c < p.vertex_count(); ++c) {
    auto it = dec.org.find(p.name_of(c));
    if (it == dec.org.end()) {
      throw Error("copy '" + p.name_of(c) + "' has no org entry");
    }
    if (it->second == robber) org_idx[c] = 0;
  }
  std::vector<int> candidates;
  if (cursor) {
    candidates = p.out_neighbors(p.index_of(*cursor));
  } else {
    for (int c = 0; c < p.vertex_count(); ++c) {
      if (p.indegree(c) == 0) candidates.push_back(c);
    }
  }
  std::set<std::string> out;
  for (int w : candidates) {
    if (detail::reaches_copy_of(p, org_idx, w, 0)) out.insert(p.name_of(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive verification

struct VerifyReport {
  bool win = false;
  int max_cops = 0;      // meaningful when win: worst-case placements
  Trace counterexample;  // nonempty when !win: shortest losing play
};

namespace detail {

/// Shared move logic for the verifier, the deterministic runner, and the
/// replayer. The round order is: the robber relocates freely; the cop picks
/// a compliant copy, announcing its original as the target; the robber
/// relocates again, barred from ending on the target; the target is covered
/// (skipped without consuming a cop if already covered); capture happens
/// exactly when the second relocation had no options.
struct GameView {
  const Digraph& d;
  const Digraph& p;
  DecContext ctx;

  GameView(const Digraph& digraph, const Decomposition& dec)
      : d(digraph), p(dec.structure), ctx(digraph, dec) {}

  /// Uncovered vertices reachable from pos, ascending, pos included.
  std::vector<int> reach_list(const std::vector<char>& covered,
                              int pos) const {
    std::vector<char> active(d.vertex_count(), 1);
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (covered[v]) active[v] = 0;
    }
    std::vector<char> seen = reach_within(d, active, pos);
    std::vector<int> out;
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (seen[v]) out.push_back(v);
    }
    return out;
  }

  /// Compliant cop choices, ascending copy indices. cursor < 0 means none.
  std::vector<int> choices(int cursor, int robber) const {
    std::vector<int> candidates;
    if (cursor < 0) {
      candidates = ctx.root_idx;
    } else {
      candidates = p.out_neighbors(cursor);
    }
    std::vector<int> out;
    for (int w : candidates) {
      if (reaches_copy_of(p, ctx.org_idx, w, robber)) out.push_back(w);
    }
    return out;
  }
};

struct VerifyKey {
  std::uint64_t covered;
  std::int32_t robber;
  std::int32_t cursor;
  friend bool operator==(const VerifyKey& a, const VerifyKey& b) {
    return a.covered == b.covered && a.robber == b.robber &&
           a.cursor == b.cursor;
  }
};

struct VerifyKeyHash {
  std::size_t operator()(const VerifyKey& k) const {
    std::uint64_t h = k.covered * 0x9E3779B97F4A7C15ull;
    h ^= (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.robber)) +
          0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2));
    h ^= (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.cursor)) +
          0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h);
  }
};

struct VerifyValue {
  bool win;
  int value;  // win: max further placements; lose: min further events
};

/// Explores every compliant play from the round start (robber about to
/// relocate). A state loses when some play from it gets the cop player
/// stuck; it wins when every play captures.
class VerifyEngine {
 public:
  VerifyEngine(const GameView& view) : view_(view) {}

  VerifyValue eval(std::uint64_t cov_mask, int robber, int cursor) {
    VerifyKey key{cov_mask, robber, cursor};
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    std::vector<char> covered = unpack(cov_mask);
    bool any_lose = false;
    int best_lose = INT_MAX;
    int max_cops = 0;
    for (int r1 : view_.reach_list(covered, robber)) {
      int move1 = (r1 != robber) ? 1 : 0;
      std::vector<int> ws = view_.choices(cursor, r1);
      if (ws.empty()) {
        any_lose = true;
        best_lose = std::min(best_lose, move1 + 1);
        continue;
      }
      std::vector<int> escape = view_.reach_list(covered, r1);
      for (int w : ws) {
        int t = view_.ctx.org_idx[w];
        int place = covered[t] ? 0 : 1;
        bool captured = true;
        for (int r2 : escape) {
          if (r2 != t) {
            captured = false;
            break;
          }
        }
        if (captured) {
          max_cops = std::max(max_cops, 1);
          continue;
        }
        std::uint64_t ncov = cov_mask | (std::uint64_t(1) << t);
        for (int r2 : escape) {
          if (r2 == t) continue;
          VerifyValue sub = eval(ncov, r2, w);
          if (sub.win) {
            max_cops = std::max(max_cops, place + sub.value);
          } else {
            any_lose = true;
            best_lose = std::min(
                best_lose, move1 + 1 + (r2 != r1 ? 1 : 0) + sub.value);
          }
        }
      }
    }
    VerifyValue out = any_lose ? VerifyValue{false, best_lose}
                               : VerifyValue{true, max_cops};
    memo_.emplace(key, out);
    return out;
  }

  /// Rebuilds the first shortest losing play in canonical order from the
  /// memo table. Only called on losing states.
  void reconstruct(std::uint64_t cov_mask, int robber, int cursor,
                   Trace& trace) {
    VerifyValue val = memo_.at(VerifyKey{cov_mask, robber, cursor});
    std::vector<char> covered = unpack(cov_mask);
    for (int r1 : view_.reach_list(covered, robber)) {
      int move1 = (r1 != robber) ? 1 : 0;
      std::vector<int> ws = view_.choices(cursor, r1);
      if (ws.empty()) {
        if (move1 + 1 != val.value) continue;
        if (move1) push_move(trace, r1);
        trace.push_back({TraceEventKind::Stuck, "", ""});
        return;
      }
      std::vector<int> escape = view_.reach_list(covered, r1);
      for (int w : ws) {
        int t = view_.ctx.org_idx[w];
        std::uint64_t ncov = cov_mask | (std::uint64_t(1) << t);
        for (int r2 : escape) {
          if (r2 == t) continue;
          auto sub = memo_.find(VerifyKey{ncov, r2, w});
          if (sub == memo_.end() || sub->second.win) continue;
          int cost = move1 + 1 + (r2 != r1 ? 1 : 0) + sub->second.value;
          if (cost != val.value) continue;
          if (move1) push_move(trace, r1);
          if (covered[t]) {
            trace.push_back({TraceEventKind::CopSkip, view_.p.name_of(w), ""});
          } else {
            trace.push_back({TraceEventKind::CopPlace, view_.p.name_of(w),
                             view_.d.name_of(t)});
          }
          if (r2 != r1) push_move(trace, r2);
          reconstruct(ncov, r2, w, trace);
          return;
        }
      }
    }
    throw Error("internal error: losing play reconstruction failed");
  }

 private:
  std::vector<char> unpack(std::uint64_t mask) const {
    std::vector<char> covered(view_.d.vertex_count(), 0);
    for (int v = 0; v < view_.d.vertex_count(); ++v) {
      if (mask >> v & 1) covered[v] = 1;
    }
    return covered;
  }

  void push_move(Trace& trace, int vertex) {
    trace.push_back({TraceEventKind::RobberMove, "", view_.d.name_of(vertex)});
  }

  const GameView& view_;
  std::unordered_map<VerifyKey, VerifyValue, VerifyKeyHash> memo_;
};

}  // namespace detail

/// Exhaustively checks that every compliant play of the placement game
/// captures the robber: all robber starts, all robber relocations, and all
/// compliant cop choices are explored. Reports the worst-case number of
/// placements on a win, or the shortest losing play (canonical tie-break)
/// as a counterexample.
inline VerifyReport verify_strategy(const Digraph& d, const Decomposition& dec,
                                    int limit = kDefaultVerifyLimit) {
  detail::require_exact_size(d, limit, "strategy verifier");
  detail::GameView view(d, dec);
  detail::VerifyEngine engine(view);
  VerifyReport report;
  report.win = true;
  int lose_start = -1;
  int lose_events = INT_MAX;
  for (int v = 0; v < d.vertex_count(); ++v) {
    detail::VerifyValue val = engine.eval(0, v, -1);
    if (val.win) {
      report.max_cops = std::max(report.max_cops, val.value);
    } else if (report.win || 1 + val.value < lose_events) {
      report.win = false;
      lose_start = v;
      lose_events = 1 + val.value;
    }
  }
  if (report.win) {
    int depth = dag_depth_and_levels(dec.structure).depth;
    if (report.max_cops > depth) {
      throw Error("internal error: more placements than the depth");
    }
    return report;
  }
  report.max_cops = 0;
  report.counterexample.push_back(
      {TraceEventKind::RobberMove, "", d.name_of(lose_start)});
  engine.reconstruct(0, lose_start, -1, report.counterexample);
  return report;
}

// ---------------------------------------------------------------------------
// Brute-force game value

namespace detail {

/// Minimax value of the unconstrained lift-free game: the cop player may
/// target any uncovered vertex, the robber relocates adversarially before
/// and after every announcement. Equals the exact depth of the digraph.
class CopnumberEngine {
 public:
  explicit CopnumberEngine(const Digraph& d) : d_(d) {}

  /// Robber at `robber`, free to relocate: adversarial choice.
  int before_move(std::uint64_t cov_mask, int robber) {
    std::uint64_t key = pack(cov_mask, robber);
    auto hit = memo1_.find(key);
    if (hit != memo1_.end()) return hit->second;
    std::vector<char> covered = unpack(cov_mask);
    int worst = 0;
    for (int r1 : reach(covered, robber)) {
      worst = std::max(worst, after_move(cov_mask, r1));
    }
    memo1_.emplace(key, worst);
    return worst;
  }

 private:
  /// Robber committed to `pos`; the cop announces the best target.
  int after_move(std::uint64_t cov_mask, int pos) {
    std::uint64_t key = pack(cov_mask, pos);
    auto hit = memo2_.find(key);
    if (hit != memo2_.end()) return hit->second;
    std::vector<char> covered = unpack(cov_mask);
    std::vector<int> escape_base = reach(covered, pos);
    int best = INT_MAX;
    for (int t = 0; t < d_.vertex_count(); ++t) {
      if (covered[t]) continue;
      bool captured = true;
      for (int r2 : escape_base) {
        if (r2 != t) {
          captured = false;
          break;
        }
      }
      if (captured) {
        best = 1;
        break;  // no announcement does better than an immediate capture
      }
      std::uint64_t ncov = cov_mask | (std::uint64_t(1) << t);
      int worst = 0;
      for (int r2 : escape_base) {
        if (r2 == t) continue;
        worst = std::max(worst, before_move(ncov, r2));
      }
      best = std::min(best, 1 + worst);
    }
    memo2_.emplace(key, best);
    return best;
  }

  std::vector<int> reach(const std::vector<char>& covered, int pos) const {
    std::vector<char> active(d_.vertex_count(), 1);
    for (int v = 0; v < d_.vertex_count(); ++v) {
      if (covered[v]) active[v] = 0;
    }
    std::vector<char> seen = reach_within(d_, active, pos);
    std::vector<int> out;
    for (int v = 0; v < d_.vertex_count(); ++v) {
      if (seen[v]) out.push_back(v);
    }
    return out;
  }

  std::uint64_t pack(std::uint64_t cov, int v) const {
    return cov * 64 + static_cast<std::uint64_t>(v);
  }

  std::vector<char> unpack(std::uint64_t mask) const {
    std::vector<char> covered(d_.vertex_count(), 0);
    for (int v = 0; v < d_.vertex_count(); ++v) {
      if (mask >> v & 1) covered[v] = 1;
    }
    return covered;
  }

  const Digraph& d_;
  std::unordered_map<std::uint64_t, int> memo1_, memo2_;
};

}  // namespace detail

/// Minimum number of cops that capture the robber in the unconstrained
/// lift-free game, by exhaustive minimax. Independent of any decomposition;
/// agrees with the exact depth.
inline int copnumber_bruteforce(const Digraph& d,
                                int limit = kDefaultCopnumberLimit) {
  detail::require_exact_size(d, limit, "brute-force game value");
  detail::CopnumberEngine engine(d);
  int worst = 0;
  for (int v = 0; v < d.vertex_count(); ++v) {
    worst = std::max(worst, engine.before_move(0, v));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Deterministic single play

/// Resolves a cop choice among the compliant candidates (ascending
/// copy-ids). The default policy picks the lexicographically smallest.
using CopPolicy = std::function<std::string(const std::vector<std::string>&)>;

/// Plays one game: the robber follows the script (the first entry is the
/// start; each later entry is consumed by the next relocation and must be
/// legal there; missing entries mean stay if legal, otherwise the smallest
/// option), the cop follows the policy. Returns the full trace, which ends
/// in a capture or a stuck event.
inline Trace run_trace(const Digraph& d, const Decomposition& dec,
                       const std::vector<std::string>& script,
                       const CopPolicy& policy = {}) {
  if (script.empty()) {
    throw Error("robber script must contain a start vertex");
  }
  detail::GameView view(d, dec);
  int pos = d.index_of(script[0]);
  std::size_t script_idx = 1;
  int turn = 0;
  std::vector<char> covered(d.vertex_count(), 0);
  int cursor = -1;
  Trace trace;
  trace.push_back({TraceEventKind::RobberMove, "", d.name_of(pos)});

  // Consumes the next script entry at a relocation point, or applies the
  // stay-if-legal default. `options` is ascending and nonempty.
  auto relocate = [&](const std::vector<int>& options) {
    ++turn;
    if (script_idx < script.size()) {
      int want = d.index_of(script[script_idx]);
      if (!std::binary_search(options.begin(), options.end(), want)) {
        throw Error("turn " + std::to_string(turn) + ": scripted move to '" +
                    script[script_idx] + "' is not available");
      }
      ++script_idx;
      return want;
    }
    if (std::binary_search(options.begin(), options.end(), pos)) return pos;
    return options.front();
  };

  while (true) {
    // Free relocation.
    std::vector<int> opts = view.reach_list(covered, pos);
    int r1 = relocate(opts);
    if (r1 != pos) {
      trace.push_back({TraceEventKind::RobberMove, "", d.name_of(r1)});
      pos = r1;
    }
    // Cop choice.
    std::vector<int> ws = view.choices(cursor, pos);
    if (ws.empty()) {
      trace.push_back({TraceEventKind::Stuck, "", ""});
      break;
    }
    int w;
    if (policy) {
      std::vector<std::string> names;
      names.reserve(ws.size());
      for (int c : ws) names.push_back(view.p.name_of(c));
      std::string picked = policy(names);
      auto it = std::find(names.begin(), names.end(), picked);
      if (it == names.end()) {
        throw Error("cop policy picked a non-compliant copy '" + picked + "'");
      }
      w = ws[it - names.begin()];
    } else {
      w = ws.front();
    }
    int t = view.ctx.org_idx[w];
    // Escape relocation, barred from the target.
    std::vector<int> escape;
    for (int v : view.reach_list(covered, pos)) {
      if (v != t) escape.push_back(v);
    }
    if (escape.empty()) {
      trace.push_back(
          {TraceEventKind::CopPlace, view.p.name_of(w), d.name_of(t)});
      trace.push_back({TraceEventKind::Capture, "", ""});
      break;
    }
    if (covered[t]) {
      trace.push_back({TraceEventKind::CopSkip, view.p.name_of(w), ""});
    } else {
      trace.push_back(
          {TraceEventKind::CopPlace, view.p.name_of(w), d.name_of(t)});
      covered[t] = 1;
    }
    ++turn;
    int r2;
    if (script_idx < script.size()) {
      int want = d.index_of(script[script_idx]);
      if (!std::binary_search(escape.begin(), escape.end(), want)) {
        throw Error("turn " + std::to_string(turn) + ": scripted move to '" +
                    script[script_idx] + "' is not available");
      }
      ++script_idx;
      r2 = want;
    } else if (std::binary_search(escape.begin(), escape.end(), pos)) {
      r2 = pos;
    } else {
      r2 = escape.front();
    }
    if (r2 != pos) {
      trace.push_back({TraceEventKind::RobberMove, "", d.name_of(r2)});
      pos = r2;
    }
    cursor = w;
  }
  if (script_idx < script.size()) {
    throw Error("script entry " + std::to_string(script_idx) +
                " has no turn to apply to: the game already ended");
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Trace replay

/// Validates a trace against the game semantics and returns its terminal
/// event kind. Cop choices must be compliant, placements must match the
/// covered state, robber moves must be available at their relocation point
/// (a single move between cop events may be either the escape or the
/// following free relocation; both interpretations yield the same state,
/// and a move legal under either is accepted).
inline TraceEventKind replay_trace(const Digraph& d, const Decomposition& dec,
                                   const Trace& trace) {
  detail::GameView view(d, dec);
  if (trace.empty() || trace[0].kind != TraceEventKind::RobberMove) {
    throw Error("trace must begin with the robber's start");
  }
  int pos = d.index_of(trace[0].vertex);
  std::vector<char> covered(d.vertex_count(), 0);
  int cursor = -1;
  bool pending = false;  // a cop event announced `target` but its covering
  int target = -1;       // has not been applied to `covered` yet
  auto in_reach = [&](const std::vector<char>& cov, int from, int to) {
    std::vector<int> r = view.reach_list(cov, from);
    return std::binary_search(r.begin(), r.end(), to);
  };
  auto apply_pending = [&]() {
    if (pending) {
      covered[target] = 1;
      pending = false;
    }
  };
  std::size_t i = 1;
  while (i < trace.size()) {
    const TraceEvent& e = trace[i];
    if (e.kind == TraceEventKind::RobberMove) {
      // Gather the run of at most two moves before the next non-move event.
      int first = d.index_of(e.vertex);
      int second = -1;
      std::size_t used = 1;
      if (i + 1 < trace.size() &&
          trace[i + 1].kind == TraceEventKind::RobberMove) {
        second = d.index_of(trace[i + 1].vertex);
        used = 2;
      }
      if (!pending) {
        // Only the free relocation is available here.
        if (second != -1) {
          throw Error("trace event " + std::to_string(i + 2) +
                      ": two consecutive moves need a pending target");
        }
        if (first == pos || !in_reach(covered, pos, first)) {
          throw Error("trace event " + std::to_string(i + 1) +
                      ": move to '" + e.vertex + "' is not available");
        }
        pos = first;
      } else {
        std::vector<char> covered_new = covered;
        covered_new[target] = 1;
        bool ok;
        if (second == -1) {
          ok = (first != pos) &&
               ((first != target && in_reach(covered, pos, first)) ||
                (pos != target && in_reach(covered_new, pos, first)));
          if (ok) pos = first;
        } else {
          ok = (first != pos && first != target &&
                in_reach(covered, pos, first)) &&
               (second != first && in_reach(covered_new, first, second));
          if (ok) pos = second;
        }
        if (!ok) {
          throw Error("trace event " + std::to_string(i + 1) +
                      ": move is not available");
        }
        covered = covered_new;
        pending = false;
      }
      i += used;
      continue;
    }
    if (e.kind == TraceEventKind::CopPlace ||
        e.kind == TraceEventKind::CopSkip) {
      if (pending) {
        // The robber stayed through both relocation points.
        if (pos == target) {
          throw Error("trace event " + std::to_string(i + 1) +
                      ": robber cannot stay on the announced target");
        }
        apply_pending();
      }
      std::vector<int> ws = view.choices(cursor, pos);
      if (!view.p.has_vertex(e.copy)) {
        throw Error("trace event " + std::to_string(i + 1) +
                    ": unknown copy '" + e.copy + "'");
      }
      int w = view.p.index_of(e.copy);
      if (!std::binary_search(ws.begin(), ws.end(), w)) {
        throw Error("trace event " + std::to_string(i + 1) + ": copy '" +
                    e.copy + "' is not a compliant choice");
      }
      int t = view.ctx.org_idx[w];
      if (e.kind == TraceEventKind::CopPlace) {
        if (covered[t]) {
          throw Error("trace event " + std::to_string(i + 1) +
                      ": target already covered; expected a skip");
        }
        if (e.vertex != d.name_of(t)) {
          throw Error("trace event " + std::to_string(i + 1) +
                      ": placement vertex does not match the copy's org");
        }
      } else if (!covered[t]) {
        throw Error("trace event " + std::to_string(i + 1) +
                    ": target not covered; expected a placement");
      }
      pending = true;
      target = t;
      cursor = w;
      ++i;
      continue;
    }
    if (e.kind == TraceEventKind::Capture) {
      if (i != trace.size() - 1) {
        throw Error("capture must be the final event");
      }
      if (!pending || trace[i - 1].kind != TraceEventKind::CopPlace) {
        throw Error("capture must directly follow a placement");
      }
      for (int v : view.reach_list(covered, pos)) {
        if (v != target) {
          throw Error("capture with an escape available");
        }
      }
      return TraceEventKind::Capture;
    }
    if (e.kind == TraceEventKind::Stuck) {
      if (i != trace.size() - 1) {
        throw Error("stuck must be the final event");
      }
      if (pending) {
        if (pos == target) {
          throw Error("robber cannot stay on the announced target");
        }
        apply_pending();
      }
      if (!view.choices(cursor, pos).empty()) {
        throw Error("stuck declared while compliant choices remain");
      }
      return TraceEventKind::Stuck;
    }
  }
  throw Error("trace ends without a capture or stuck event");
}

}  // namespace dagdepth
