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
#include <vector>

#include "dagdepth/digraph.hpp"

namespace dagdepth {

/// A reachable fragment: the reachability set of some single source vertex,
/// maximal by inclusion among all such sets.
struct Fragment {
  std::string source;
  std::set<std::string> members;
};

namespace detail {

/// Index-level fragment record used by the solver; members is a
/// characteristic vector over the ambient digraph's vertices.
struct FragmentIdx {
  int source = -1;
  std::vector<char> members;
  int size = 0;
};

/// Maximal-by-inclusion single-source reachability sets within the active
/// subset. Identical member sets are reported once, with the smallest
/// (lexicographically first) source; results are ordered by source.
inline std::vector<FragmentIdx> fragments_within(
    const Digraph& d, const std::vector<char>& active) {
  int n = d.vertex_count();
  std::vector<FragmentIdx> reach;
  for (int v = 0; v < n; ++v) {
    if (!active[v]) continue;
    FragmentIdx f;
    f.source = v;
    f.members = reach_within(d, active, v);
    for (char c : f.members) f.size += c;
    reach.push_back(std::move(f));
  }
  auto contains = [n](const FragmentIdx& big, const FragmentIdx& small) {
    for (int v = 0; v < n; ++v) {
      if (small.members[v] && !big.members[v]) return false;
    }
    return true;
  };
  std::vector<FragmentIdx> out;
  for (std::size_t i = 0; i < reach.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < reach.size() && keep; ++j) {
      if (i == j) continue;
      if (reach[j].size > reach[i].size && contains(reach[j], reach[i])) {
        keep = false;  // strictly contained in another reach set
      } else if (reach[j].size == reach[i].size && j < i &&
                 reach[j].members == reach[i].members) {
        keep = false;  // duplicate set; earlier source wins
      }
    }
    if (keep) out.push_back(reach[i]);
  }
  return out;
}

}  // namespace detail

/// Reachable fragments of a nonempty digraph, ordered by source name.
/// Every vertex lies in at least one fragment and no fragment is a subset
/// of another.
inline std::vector<Fragment> reachable_fragments(const Digraph& d) {
  if (d.vertex_count() == 0) {
    throw Error("reachable_fragments requires a nonempty digraph");
  }
  std::vector<char> active(d.vertex_count(), 1);
  std::vector<Fragment> out;
  for (const auto& f : detail::fragments_within(d, active)) {
    Fragment pub;
    pub.source = d.name_of(f.source);
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (f.members[v]) pub.members.insert(d.name_of(v));
    }
    out.push_back(std::move(pub));
  }
  return out;
}

}  // namespace dagdepth
