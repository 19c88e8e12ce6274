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

// Test-side helpers: independent oracles kept deliberately naive, random
// instance generators, and small enumeration utilities.

#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <dagdepth/digraph.hpp>
#include <dagdepth/fragments.hpp>

namespace testutil {

/// Vertex names "a", "b", ... for test graphs (n <= 26 keeps lexicographic
/// order aligned with creation order).
inline std::vector<std::string> letter_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return names;
}

/// Random digraph on n letter-named vertices, each of the n(n-1) arcs
/// drawn independently with probability p.
inline dagdepth::Digraph random_digraph(std::mt19937& rng, int n, double p) {
  std::vector<std::string> names = letter_names(n);
  std::bernoulli_distribution arc(p);
  std::set<std::string> verts(names.begin(), names.end());
  std::set<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && arc(rng)) edges.insert({names[i], names[j]});
    }
  }
  return dagdepth::Digraph(verts, edges);
}

/// Digraph on n letter-named vertices whose arcs are the set bits of mask,
/// enumerating the n(n-1) ordered pairs row by row. Covers every labeled
/// digraph on n vertices as mask runs over 0 .. 2^(n(n-1)) - 1.
inline dagdepth::Digraph digraph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::string> names = letter_names(n);
  std::set<std::string> verts(names.begin(), names.end());
  std::set<std::pair<std::string, std::string>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (mask >> bit & 1) edges.insert({names[i], names[j]});
      ++bit;
    }
  }
  return dagdepth::Digraph(verts, edges);
}

/// The depth recursion exactly as defined, with no memoization and each
/// subinstance materialized as its own Digraph. Exponentially slow on
/// purpose; the production solver must agree with it.
inline int ddp_plain(const dagdepth::Digraph& d) {
  if (d.vertex_count() == 1) return 1;
  std::vector<dagdepth::Fragment> frags = dagdepth::reachable_fragments(d);
  if (frags.size() == 1) {
    int best = INT_MAX;
    for (const std::string& v : d.vertex_names()) {
      std::set<std::string> rest = d.vertex_set();
      rest.erase(v);
      best = std::min(best, ddp_plain(d.induced_subgraph(rest)));
    }
    return 1 + best;
  }
  int worst = 0;
  for (const dagdepth::Fragment& f : frags) {
    worst = std::max(worst, ddp_plain(d.induced_subgraph(f.members)));
  }
  return worst;
}

/// Longest path in a DAG by plain enumeration of all simple paths,
/// counting vertices. Oracle for the dynamic program.
inline int longest_path_plain(const dagdepth::Digraph& d) {
  int best = 0;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int v) -> void {
    stack.push_back(v);
    best = std::max(best, static_cast<int>(stack.size()));
    for (int w : d.out_neighbors(v)) self(self, w);
    stack.pop_back();
  };
  for (int v = 0; v < d.vertex_count(); ++v) dfs(dfs, v);
  return best;
}

}  // namespace testutil
