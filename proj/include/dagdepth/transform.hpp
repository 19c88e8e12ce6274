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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dagdepth/decomposition.hpp"
#include "dagdepth/digraph.hpp"

namespace dagdepth {

// ---------------------------------------------------------------------------
// Merging copies

namespace detail {

/// Contracts copy `b` into copy `a`: the survivor keeps a's id and org,
/// inherits the union of both in- and out-edges, and edges between the two
/// disappear. No legality checks.
inline Decomposition merge_unchecked(const Decomposition& dec,
                                     const std::string& a,
                                     const std::string& b) {
  std::set<std::string> verts;
  for (const std::string& id : dec.structure.vertex_names()) {
    if (id != b) verts.insert(id);
  }
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : dec.structure.edge_list()) {
    std::string x = (e.first == b) ? a : e.first;
    std::string y = (e.second == b) ? a : e.second;
    if (x != y) edges.insert({x, y});
  }
  std::map<std::string, std::string> org = dec.org;
  org.erase(b);
  return Decomposition{Digraph(verts, edges), org};
}

}  // namespace detail

/// Merges two copies of the same original vertex; the result keeps a's id.
/// Throws on unknown ids, a == b, or differing originals. The result is not
/// checked for validity; see merge_verdict.
inline Decomposition merge_pair(const Decomposition& dec, const std::string& a,
                                const std::string& b) {
  for (const std::string* id : {&a, &b}) {
    if (!dec.structure.has_vertex(*id)) {
      throw Error("unknown copy-id '" + *id + "'");
    }
    if (!dec.org.count(*id)) {
      throw Error("copy '" + *id + "' has no org entry");
    }
  }
  if (a == b) throw Error("cannot merge a copy with itself");
  if (dec.org.at(a) != dec.org.at(b)) {
    throw Error("cannot merge copies of different originals ('" +
                dec.org.at(a) + "' and '" + dec.org.at(b) + "')");
  }
  return detail::merge_unchecked(dec, a, b);
}

/// Outcome of a candidate merge, one flag per requirement. Later flags are
/// still reported when earlier ones fail, except that a cyclic result makes
/// cover and depth unevaluable (both false).
struct MergeVerdict {
  bool same_org = false;    // both copies map to the same original
  bool stays_dag = false;   // the contracted structure is still acyclic
  bool keeps_cover = false; // the contracted decomposition is still valid
  bool keeps_depth = false; // depth is unchanged by the contraction

  bool mergeable() const { return same_org && stays_dag && keeps_cover; }
  bool optimally_mergeable() const { return mergeable() && keeps_depth; }
};

/// Evaluates the merge of b into a against a decomposition of d. Throws on
/// unknown ids or a == b; a well-formed input decomposition is required.
inline MergeVerdict merge_verdict(const Digraph& d, const Decomposition& dec,
                                  const std::string& a, const std::string& b) {
  for (const std::string* id : {&a, &b}) {
    if (!dec.structure.has_vertex(*id)) {
      throw Error("unknown copy-id '" + *id + "'");
    }
  }
  if (a == b) throw Error("cannot merge a copy with itself");
  detail::DecContext input_check(d, dec);
  (void)input_check;
  MergeVerdict verdict;
  verdict.same_org = dec.org.at(a) == dec.org.at(b);
  Decomposition merged = detail::merge_unchecked(dec, a, b);
  verdict.stays_dag = dag_structure(merged.structure).is_dag;
  if (!verdict.stays_dag) return verdict;
  try {
    verdict.keeps_cover = !check_valid(d, merged).has_value();
  } catch (const Error&) {
    verdict.keeps_cover = false;  // e.g. the merge removed a last copy
  }
  verdict.keeps_depth =
      dag_depth_and_levels(merged.structure).depth <= dec.depth();
  return verdict;
}

// ---------------------------------------------------------------------------
// Reduction

namespace detail {

/// First merge candidate in canonical order: originals ascending, copies of
/// each ordered by (level, id), pairs in lexicographic index order. Returns
/// the first pair whose merge keeps validity and depth.
inline std::optional<std::pair<std::string, std::string>> find_reduction(
    const Digraph& d, const Decomposition& dec) {
  std::map<std::string, int> level = dag_depth_and_levels(dec.structure).level;
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& kv : dec.org) groups[kv.second].push_back(kv.first);
  for (auto& group : groups) {
    std::vector<std::string>& ids = group.second;
    if (ids.size() < 2) continue;
    std::sort(ids.begin(), ids.end(),
              [&](const std::string& x, const std::string& y) {
                int lx = level.at(x), ly = level.at(y);
                if (lx != ly) return lx < ly;
                return x < y;
              });
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (merge_verdict(d, dec, ids[i], ids[j]).optimally_mergeable()) {
          return std::make_pair(ids[i], ids[j]);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Greedily merges copies while validity and depth are preserved, restarting
/// the scan after every merge. The input must be valid; the result is valid,
/// has the same depth, and admits no further depth-preserving merge. The
/// canonical scan order makes the result deterministic.
inline Decomposition reduce(const Digraph& d, const Decomposition& dec) {
  if (auto viol = check_valid(d, dec)) {
    throw Error("cannot reduce: copy '" + viol->copy +
                "' does not cover neighbor '" + viol->neighbor + "'");
  }
  Decomposition current = dec;
  while (auto pair = detail::find_reduction(d, current)) {
    current = detail::merge_unchecked(current, pair->first, pair->second);
  }
  return current;
}

// ---------------------------------------------------------------------------
// Closure

/// Largest supergraph of d on the same vertices for which the decomposition
/// stays valid: the edge (u, v) is admitted exactly when every copy of u
/// already covers v in the required sense. Single pass over ordered pairs;
/// the input edges are always kept. The input must be valid for d.
inline Digraph closure(const Digraph& d, const Decomposition& dec) {
  if (auto viol = check_valid(d, dec)) {
    throw Error("closure requires a valid decomposition; copy '" +
                viol->copy + "' does not cover neighbor '" + viol->neighbor +
                "'");
  }
  detail::DecContext ctx(d, dec);
  const Digraph& p = dec.structure;
  int n = d.vertex_count();
  // Originals of proper descendants, per copy.
  std::vector<std::vector<char>> desc_orgs(p.vertex_count());
  for (int c = 0; c < p.vertex_count(); ++c) {
    std::vector<char> desc = ctx.descendants(c);
    desc_orgs[c].assign(n, 0);
    for (int pc = 0; pc < p.vertex_count(); ++pc) {
      if (desc[pc]) desc_orgs[c][ctx.org_idx[pc]] = 1;
    }
  }
  std::vector<std::vector<char>> avoid_reach(n);
  for (int v = 0; v < n; ++v) avoid_reach[v] = ctx.root_reach_avoiding(v);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : d.edge_list()) edges.insert(e);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool admitted = true;
      for (int c : ctx.copies_of[u]) {
        if (!desc_orgs[c][v] && avoid_reach[v][c]) {
          admitted = false;
          break;
        }
      }
      if (admitted) edges.insert({d.name_of(u), d.name_of(v)});
    }
  }
  return Digraph(d.vertex_set(), edges);
}

/// True when c keeps d's edges and the decomposition is still valid for c.
/// The vertex sets must agree.
inline bool is_partial_closure(const Digraph& d, const Decomposition& dec,
                               const Digraph& c) {
  if (d.vertex_set() != c.vertex_set()) {
    throw Error("closure candidate must keep the vertex set");
  }
  for (const auto& e : d.edge_list()) {
    if (!c.has_edge(e.first, e.second)) return false;
  }
  return !check_valid(c, dec).has_value();
}

}  // namespace dagdepth
