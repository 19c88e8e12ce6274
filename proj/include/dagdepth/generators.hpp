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

#include "dagdepth/digraph.hpp"

namespace dagdepth {

namespace detail {

inline void require_positive(int n, const char* family) {
  if (n < 1) {
    throw Error(std::string(family) + " requires n >= 1");
  }
}

}  // namespace detail

/// Two parallel columns a1..an, b1..bn with every forward arc between and
/// within them: (xi, yj) for x, y in {a, b} and i < j. The exact depth is n,
/// yet the duplicate-free construction of a witness decomposition needs
/// 2^(n+1) - 2 copies, which is what makes this family a stress fixture.
inline Digraph gen_expo(int n) {
  detail::require_positive(n, "expo");
  std::set<std::string> verts;
  std::set<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    verts.insert("a" + std::to_string(i));
    verts.insert("b" + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (const char* x : {"a", "b"}) {
        for (const char* y : {"a", "b"}) {
          edges.insert({x + std::to_string(i), y + std::to_string(j)});
        }
      }
    }
  }
  return Digraph(verts, edges);
}

/// Six vertices around a central 2-cycle: A and B feed C, E and F feed D,
/// and C, D point at each other. Depth 2.
inline Digraph gen_fig1() {
  return Digraph({"A", "B", "C", "D", "E", "F"},
                 {{"A", "C"},
                  {"B", "C"},
                  {"C", "D"},
                  {"D", "C"},
                  {"E", "D"},
                  {"F", "D"}});
}

/// Ten vertices: a bidirected 6-cycle E, F, G, H, I, J with the pendant
/// path A -> B -> E and the pendant path C -> D -> G. Depth 4.
inline Digraph gen_fig2() {
  return Digraph({"A", "B", "C", "D", "E", "F", "G", "H", "I", "J"},
                 {{"A", "B"}, {"B", "E"}, {"C", "D"}, {"D", "G"},
                  {"E", "F"}, {"F", "E"}, {"F", "G"}, {"G", "F"},
                  {"G", "H"}, {"H", "G"}, {"H", "I"}, {"I", "H"},
                  {"I", "J"}, {"J", "I"}, {"E", "J"}, {"J", "E"}});
}

/// Directed path v1 -> v2 -> ... -> vn.
inline Digraph gen_path(int n) {
  detail::require_positive(n, "path");
  std::set<std::string> verts;
  std::set<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) verts.insert("v" + std::to_string(i));
  for (int i = 1; i < n; ++i) {
    edges.insert({"v" + std::to_string(i), "v" + std::to_string(i + 1)});
  }
  return Digraph(verts, edges);
}

/// All arcs in both directions on n vertices. Depth n: every removal leaves
/// a single fragment.
inline Digraph gen_bicomplete(int n) {
  detail::require_positive(n, "bicomplete");
  std::set<std::string> verts;
  std::set<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) verts.insert("v" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) {
        edges.insert({"v" + std::to_string(i), "v" + std::to_string(j)});
      }
    }
  }
  return Digraph(verts, edges);
}

}  // namespace dagdepth
