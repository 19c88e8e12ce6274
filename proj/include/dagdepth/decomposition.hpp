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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dagdepth/digraph.hpp"
#include "dagdepth/solver.hpp"

namespace dagdepth {

/// A depth decomposition candidate: a DAG over copy-ids plus the mapping
/// from each copy to the original vertex it stands for. Several copies may
/// map to the same original; org must be surjective onto the digraph the
/// decomposition is used with, which is checked at operation time.
struct Decomposition {
  Digraph structure;                        // DAG over copy-ids
  std::map<std::string, std::string> org;   // copy-id -> original vertex

  int copy_count() const { return structure.vertex_count(); }
  int depth() const { return dag_depth_and_levels(structure).depth; }
};

/// Witness that the cover condition fails: no copy of `neighbor` is a
/// descendant of `copy`, and `witness_path` is a root-to-`copy` path in the
/// decomposition that avoids all copies of `neighbor`.
struct Violation {
  std::string copy;
  std::string original;
  std::string neighbor;
  std::vector<std::string> witness_path;
};

namespace detail {

/// Index-level view of a decomposition against its digraph, built after
/// well-formedness checks: P is a DAG, org is total on the copies, its
/// image lies in V(D), and it is surjective onto V(D).
struct DecContext {
  const Digraph& d;
  const Digraph& p;
  std::vector<int> org_idx;                // copy index -> D vertex index
  std::vector<std::vector<int>> copies_of; // D vertex index -> copy indices
  std::vector<int> root_idx;               // indegree-0 copies, ascending

  DecContext(const Digraph& digraph, const Decomposition& dec)
      : d(digraph), p(dec.structure) {
    if (!dag_structure(p).is_dag) {
      throw Error("decomposition structure has a cycle");
    }
    if (static_cast<int>(dec.org.size()) != p.vertex_count()) {
      for (const auto& kv : dec.org) {
        if (!p.has_vertex(kv.first)) {
          throw Error("org maps unknown copy-id '" + kv.first + "'");
        }
      }
      throw Error("org must map every copy-id exactly once");
    }
    org_idx.assign(p.vertex_count(), -1);
    copies_of.assign(d.vertex_count(), {});
    for (const auto& kv : dec.org) {
      if (!p.has_vertex(kv.first)) {
        throw Error("org maps unknown copy-id '" + kv.first + "'");
      }
      if (!d.has_vertex(kv.second)) {
        throw Error("copy '" + kv.first + "' maps to '" + kv.second +
                    "', which is not a vertex of the digraph");
      }
      int c = p.index_of(kv.first);
      org_idx[c] = d.index_of(kv.second);
      copies_of[org_idx[c]].push_back(c);
    }
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (copies_of[v].empty()) {
        throw Error("vertex '" + d.name_of(v) + "' has no copy");
      }
    }
    for (int c = 0; c < p.vertex_count(); ++c) {
      if (p.indegree(c) == 0) root_idx.push_back(c);
    }
  }

  /// Proper descendants of a copy (path length >= 1; the copy itself never
  /// counts).
  std::vector<char> descendants(int c) const {
    std::vector<char> seen(p.vertex_count(), 0);
    std::vector<int> stack;
    for (int w : p.out_neighbors(c)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : p.out_neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  /// Copies reachable from some root of P after deleting every copy of the
  /// original vertex `avoid`. A copy is in this set exactly when some
  /// root-to-copy path avoids all copies of `avoid`.
  std::vector<char> root_reach_avoiding(int avoid) const {
    std::vector<char> banned(p.vertex_count(), 0);
    for (int c : copies_of[avoid]) banned[c] = 1;
    std::vector<char> seen(p.vertex_count(), 0);
    std::vector<int> stack;
    for (int r : root_idx) {
      if (!banned[r] && !seen[r]) {
        seen[r] = 1;
        stack.push_back(r);
      }
    }
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : p.out_neighbors(u)) {
        if (!banned[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  /// Shortest root-to-target path avoiding all copies of `avoid`, found by
  /// breadth-first search with roots and neighbors visited in canonical
  /// order. Only called when such a path exists.
  std::vector<std::string> witness_path(int target, int avoid) const {
    std::vector<char> banned(p.vertex_count(), 0);
    for (int c : copies_of[avoid]) banned[c] = 1;
    std::vector<int> parent(p.vertex_count(), -2);
    std::vector<int> queue;
    for (int r : root_idx) {
      if (!banned[r] && parent[r] == -2) {
        parent[r] = -1;
        queue.push_back(r);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      if (u == target) break;
      for (int w : p.out_neighbors(u)) {
        if (!banned[w] && parent[w] == -2) {
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::string> path;
    for (int u = target; u != -1; u = parent[u]) {
      path.push_back(p.name_of(u));
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
};

}  // namespace detail

/// Checks the cover condition: for every copy c and every out-neighbor u of
/// org(c), either some copy of u is a proper descendant of c, or every
/// root-to-c path in the decomposition passes through a copy of u. Returns
/// the first failing (copy, neighbor) pair in canonical order (copy-id,
/// then neighbor name), or nothing if the decomposition is valid.
inline std::optional<Violation> check_valid(const Digraph& d,
                                            const Decomposition& dec) {
  detail::DecContext ctx(d, dec);
  const Digraph& p = dec.structure;
  std::map<int, std::vector<char>> avoid_cache;
  for (int c = 0; c < p.vertex_count(); ++c) {
    std::vector<char> desc = ctx.descendants(c);
    int v = ctx.org_idx[c];
    for (int u : d.out_neighbors(v)) {
      bool covered_below = false;
      for (int uc : ctx.copies_of[u]) {
        if (desc[uc]) {
          covered_below = true;
          break;
        }
      }
      if (covered_below) continue;
      auto it = avoid_cache.find(u);
      if (it == avoid_cache.end()) {
        it = avoid_cache.emplace(u, ctx.root_reach_avoiding(u)).first;
      }
      if (!it->second[c]) continue;  // every root path hits a copy of u
      Violation viol;
      viol.copy = p.name_of(c);
      viol.original = d.name_of(v);
      viol.neighbor = d.name_of(u);
      viol.witness_path = ctx.witness_path(c, u);
      return viol;
    }
  }
  return std::nullopt;
}

/// A decomposition is optimal for a digraph when its depth matches the
/// digraph's exact depth.
inline bool is_optimal(const Digraph& d, const Decomposition& dec,
                       int limit = kDefaultDdpLimit) {
  [[maybe_unused]] detail::DecContext ctx(d, dec);  // well-formedness check
  return dec.depth() == ddp(d, limit);
}

}  // namespace dagdepth
