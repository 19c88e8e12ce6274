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
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dagdepth {

/// Base error type for all operation and precondition failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex name is any nonempty whitespace-free token that does not
/// contain '#'. The same rule applies to copy-ids in decompositions.
inline bool valid_vertex_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  }
  return true;
}

/// Immutable finite digraph over named vertices.
///
/// Vertices are kept in lexicographic order; the integer index of a vertex
/// is its rank in that order, so index-based iteration is canonical. No
/// self-loops, no parallel edges.
class Digraph {
 public:
  Digraph() = default;

  /// Builds a digraph from explicit vertex and edge sets. Edge endpoints
  /// are added to the vertex set implicitly.
  Digraph(const std::set<std::string>& vertices,
          const std::set<std::pair<std::string, std::string>>& edges) {
    std::set<std::string> all = vertices;
    for (const auto& e : edges) {
      all.insert(e.first);
      all.insert(e.second);
    }
    names_.assign(all.begin(), all.end());
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      if (!valid_vertex_name(names_[i])) {
        throw Error("invalid vertex name '" + names_[i] + "'");
      }
      index_[names_[i]] = i;
    }
    out_.assign(names_.size(), {});
    in_.assign(names_.size(), {});
    for (const auto& e : edges) {
      if (e.first == e.second) {
        throw Error("self-loop on vertex '" + e.first + "' is not allowed");
      }
      out_[index_.at(e.first)].push_back(index_.at(e.second));
      in_[index_.at(e.second)].push_back(index_.at(e.first));
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_) std::sort(v.begin(), v.end());
    edge_count_ = static_cast<int>(edges.size());
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return edge_count_; }

  /// Vertex names in lexicographic order; name_of(i) == vertex_names()[i].
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name_of(int v) const { return names_.at(v); }

  bool has_vertex(const std::string& name) const {
    return index_.count(name) != 0;
  }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown vertex '" + name + "'");
    return it->second;
  }

  bool has_edge(const std::string& from, const std::string& to) const {
    if (!has_vertex(from) || !has_vertex(to)) return false;
    const auto& o = out_[index_.at(from)];
    return std::binary_search(o.begin(), o.end(), index_.at(to));
  }

  /// Out-neighbor indices in ascending order.
  const std::vector<int>& out_neighbors(int v) const { return out_.at(v); }
  /// In-neighbor indices in ascending order.
  const std::vector<int>& in_neighbors(int v) const { return in_.at(v); }

  int outdegree(int v) const { return static_cast<int>(out_.at(v).size()); }
  int indegree(int v) const { return static_cast<int>(in_.at(v).size()); }

  /// Edges as name pairs, lexicographically sorted.
  std::vector<std::pair<std::string, std::string>> edge_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u) {
      for (int v : out_[u]) out.emplace_back(names_[u], names_[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::set<std::string> vertex_set() const {
    return std::set<std::string>(names_.begin(), names_.end());
  }

  /// Subgraph induced by the given vertices, which must all exist.
  Digraph induced_subgraph(const std::set<std::string>& keep) const {
    std::set<std::pair<std::string, std::string>> edges;
    for (const std::string& name : keep) {
      index_of(name);  // existence check
    }
    for (int u = 0; u < vertex_count(); ++u) {
      if (!keep.count(names_[u])) continue;
      for (int v : out_[u]) {
        if (keep.count(names_[v])) edges.emplace(names_[u], names_[v]);
      }
    }
    return Digraph(keep, edges);
  }

  /// Copy of this digraph with one extra edge.
  Digraph with_edge(const std::string& from, const std::string& to) const {
    std::set<std::pair<std::string, std::string>> edges;
    for (auto& e : edge_list()) edges.insert(e);
    edges.emplace(from, to);
    return Digraph(vertex_set(), edges);
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.names_ == b.names_ && a.out_ == b.out_;
  }
  friend bool operator!=(const Digraph& a, const Digraph& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> out_, in_;
  int edge_count_ = 0;
};

namespace detail {

/// Forward reachability from start, restricted to vertices with active[v]
/// set. Returns the characteristic vector of the reached set; start itself
/// is always included (it must be active).
inline std::vector<char> reach_within(const Digraph& d,
                                      const std::vector<char>& active,
                                      int start) {
  std::vector<char> seen(d.vertex_count(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : d.out_neighbors(u)) {
      if (active[v] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace detail

/// Vertices reachable from start by directed paths, including start.
inline std::set<std::string> reachable_set(const Digraph& d,
                                           const std::string& start) {
  int s = d.index_of(start);
  std::vector<char> active(d.vertex_count(), 1);
  std::vector<char> seen = detail::reach_within(d, active, s);
  std::set<std::string> out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (seen[v]) out.insert(d.name_of(v));
  }
  return out;
}

/// Acyclicity report. roots/leaves are the vertices of indegree/outdegree
/// zero; they are meaningful as DAG roots and leaves only when is_dag.
struct DagStructure {
  bool is_dag = false;
  std::set<std::string> roots;
  std::set<std::string> leaves;
};

inline DagStructure dag_structure(const Digraph& d) {
  DagStructure s;
  int n = d.vertex_count();
  std::vector<int> indeg(n);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    indeg[v] = d.indegree(v);
    if (indeg[v] == 0) queue.push_back(v);
    if (d.outdegree(v) == 0) s.leaves.insert(d.name_of(v));
    if (indeg[v] == 0) s.roots.insert(d.name_of(v));
  }
  int removed = 0;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    ++removed;
    for (int v : d.out_neighbors(u)) {
      if (--indeg[v] == 0) queue.push_back(v);
    }
  }
  s.is_dag = (removed == n);
  return s;
}

/// Depth and per-vertex level/vdepth of a DAG, counting vertices on paths:
/// a single vertex has depth 1, level(root) = 1, vdepth(leaf) = 1, and
/// depth = max over v of vdepth(v) among roots = max path vertex count.
struct DagMetrics {
  int depth = 0;
  std::map<std::string, int> level;
  std::map<std::string, int> vdepth;
};

inline DagMetrics dag_depth_and_levels(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> indeg(n), order;
  order.reserve(n);
  for (int v = 0; v < n; ++v) {
    indeg[v] = d.indegree(v);
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int v : d.out_neighbors(order[i])) {
      if (--indeg[v] == 0) order.push_back(v);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error("digraph has a cycle; depth and levels are undefined");
  }
  std::vector<int> level(n, 1), vdepth(n, 1);
  for (int u : order) {
    for (int v : d.out_neighbors(u)) {
      level[v] = std::max(level[v], level[u] + 1);
    }
  }
  DagMetrics m;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int v : d.out_neighbors(*it)) {
      vdepth[*it] = std::max(vdepth[*it], vdepth[v] + 1);
    }
    m.depth = std::max(m.depth, vdepth[*it]);
  }
  for (int v = 0; v < n; ++v) {
    m.level[d.name_of(v)] = level[v];
    m.vdepth[d.name_of(v)] = vdepth[v];
  }
  return m;
}

}  // namespace dagdepth
