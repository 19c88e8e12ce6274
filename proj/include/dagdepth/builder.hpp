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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dagdepth/decomposition.hpp"
#include "dagdepth/digraph.hpp"
#include "dagdepth/solver.hpp"

namespace dagdepth {

namespace detail {

/// Recursive construction state: copies are numbered in creation order and
/// accumulated together with the decomposition edges.
struct BuildState {
  DdpSolver& solver;
  int next_id = 0;
  std::set<std::string> copies;
  std::set<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::string> org;

  std::string fresh_copy(int vertex) {
    std::string id = std::to_string(next_id++);
    copies.insert(id);
    org[id] = solver.digraph().name_of(vertex);
    return id;
  }

  /// Builds the decomposition of the induced subgraph on `mask` and
  /// returns the copy-ids of its roots.
  ///
  /// A single vertex becomes one copy. Otherwise the fragments are
  /// processed in source order; a singleton fragment becomes one copy,
  /// and every multi-vertex fragment joins a group keyed by its best root
  /// (lexicographically smallest minimizer of ddp(fragment - v)). Each
  /// group contributes a copy of the shared root with edges to the roots
  /// of the recursively built decomposition of the group's member union
  /// minus the root. Fragments in different groups duplicate any shared
  /// original vertices; fragments in the same group share one subtree.
  std::vector<std::string> build(VertexMask mask) {
    const Digraph& d = solver.digraph();
    if (DdpSolver::popcount(mask) == 1) {
      for (int v = 0; v < d.vertex_count(); ++v) {
        if (mask >> v & 1) return {fresh_copy(v)};
      }
    }
    std::vector<FragmentIdx> frs =
        fragments_within(d, solver.to_active(mask));
    struct Group {
      int root;
      VertexMask members;
    };
    std::vector<std::string> roots;
    std::vector<Group> order;           // rooted groups, first-encounter order
    std::vector<std::pair<bool, int>> unit_plan;  // (is_group, index/vertex)
    for (const auto& f : frs) {
      VertexMask fmask = solver.to_mask(f.members);
      if (f.size == 1) {
        unit_plan.push_back({false, f.source});
        continue;
      }
      int root = solver.best_roots_subset(fmask).front();
      bool merged = false;
      for (std::size_t g = 0; g < order.size(); ++g) {
        if (order[g].root == root) {
          order[g].members |= fmask;
          merged = true;
          break;
        }
      }
      if (!merged) {
        order.push_back({root, fmask});
        unit_plan.push_back({true, static_cast<int>(order.size()) - 1});
      }
    }
    for (const auto& unit : unit_plan) {
      if (!unit.first) {
        roots.push_back(fresh_copy(unit.second));
        continue;
      }
      const Group& g = order[unit.second];
      std::string root_copy = fresh_copy(g.root);
      VertexMask rest = g.members & ~(VertexMask(1) << g.root);
      for (const std::string& child : build(rest)) {
        edges.emplace(root_copy, child);
      }
      roots.push_back(root_copy);
    }
    return roots;
  }
};

}  // namespace detail

/// Builds a valid decomposition whose depth equals the exact depth of the
/// digraph. Deterministic: copy-ids are consecutive integers in creation
/// order and all tie-breaks are lexicographic.
inline Decomposition build_decomposition(const Digraph& d,
                                         int limit = kDefaultDdpLimit) {
  DdpSolver solver(d, limit);
  detail::BuildState state{solver, 0, {}, {}, {}};
  state.build(solver.full_mask());
  Decomposition dec;
  dec.structure = Digraph(state.copies, state.edges);
  dec.org = std::move(state.org);
  return dec;
}

}  // namespace dagdepth
