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

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dagdepth/digraph.hpp"
#include "dagdepth/fragments.hpp"

namespace dagdepth {

/// Default vertex ceiling for the exact depth recursion.
inline constexpr int kDefaultDdpLimit = 20;
/// Subset keys are 64-bit masks, so no exact computation accepts more
/// than this many vertices regardless of the requested limit.
inline constexpr int kMaskCeiling = 63;

namespace detail {

using VertexMask = std::uint64_t;

inline void require_exact_size(const Digraph& d, int limit,
                               const char* what) {
  if (d.vertex_count() == 0) {
    throw Error(std::string(what) + " requires a nonempty digraph");
  }
  int cap = limit < kMaskCeiling ? limit : kMaskCeiling;
  if (d.vertex_count() > cap) {
    throw Error(std::string(what) + ": digraph has " +
                std::to_string(d.vertex_count()) +
                " vertices, exceeding the limit of " + std::to_string(cap));
  }
}

}  // namespace detail

/// Exact depth computation with shared subset memoization.
///
/// The recursion follows the depth definition: a single vertex has depth 1;
/// a graph with exactly one reachable fragment has depth
/// 1 + min over v of depth(D - v); otherwise the depth is the maximum over
/// the fragments. Subproblems are induced subgraphs of the input,
/// identified by bitmasks over its canonical vertex order.
class DdpSolver {
 public:
  explicit DdpSolver(const Digraph& d, int limit = kDefaultDdpLimit)
      : d_(d) {
    detail::require_exact_size(d, limit, "exact depth solver");
  }

  const Digraph& digraph() const { return d_; }

  detail::VertexMask full_mask() const {
    return (detail::VertexMask(1) << d_.vertex_count()) - 1;
  }

  int ddp() { return ddp_subset(full_mask()); }

  int ddp_subset(detail::VertexMask mask) {
    auto hit = memo_.find(mask);
    if (hit != memo_.end()) return hit->second;
    int n = popcount(mask);
    int result;
    if (n == 1) {
      result = 1;
    } else {
      std::vector<detail::FragmentIdx> frs =
          detail::fragments_within(d_, to_active(mask));
      if (frs.size() == 1) {
        int best = n + 1;
        for (int v = 0; v < d_.vertex_count(); ++v) {
          if (!(mask >> v & 1)) continue;
          int sub = ddp_subset(mask & ~(detail::VertexMask(1) << v));
          if (sub < best) best = sub;
        }
        result = 1 + best;
      } else {
        result = 0;
        for (const auto& f : frs) {
          int sub = ddp_subset(to_mask(f.members));
          if (sub > result) result = sub;
        }
      }
    }
    memo_.emplace(mask, result);
    return result;
  }

  /// All minimizers of ddp(D - v) within a single-fragment subset of size
  /// at least two, as ascending vertex indices.
  std::vector<int> best_roots_subset(detail::VertexMask mask) {
    if (popcount(mask) < 2) {
      throw Error("best_roots requires at least two vertices");
    }
    if (detail::fragments_within(d_, to_active(mask)).size() != 1) {
      throw Error("best_roots requires exactly one reachable fragment");
    }
    int best = d_.vertex_count() + 1;
    std::vector<int> roots;
    for (int v = 0; v < d_.vertex_count(); ++v) {
      if (!(mask >> v & 1)) continue;
      int sub = ddp_subset(mask & ~(detail::VertexMask(1) << v));
      if (sub < best) {
        best = sub;
        roots.clear();
      }
      if (sub == best) roots.push_back(v);
    }
    return roots;
  }

  std::vector<char> to_active(detail::VertexMask mask) const {
    std::vector<char> active(d_.vertex_count(), 0);
    for (int v = 0; v < d_.vertex_count(); ++v) {
      if (mask >> v & 1) active[v] = 1;
    }
    return active;
  }

  detail::VertexMask to_mask(const std::vector<char>& active) const {
    detail::VertexMask mask = 0;
    for (int v = 0; v < d_.vertex_count(); ++v) {
      if (active[v]) mask |= detail::VertexMask(1) << v;
    }
    return mask;
  }

  static int popcount(detail::VertexMask mask) {
    int n = 0;
    while (mask) {
      mask &= mask - 1;
      ++n;
    }
    return n;
  }

 private:
  const Digraph& d_;
  std::unordered_map<detail::VertexMask, int> memo_;
};

/// Exact depth of a nonempty digraph within the vertex limit.
inline int ddp(const Digraph& d, int limit = kDefaultDdpLimit) {
  DdpSolver solver(d, limit);
  return solver.ddp();
}

/// All optimal first removals of a single-fragment digraph: the vertices v
/// minimizing ddp(D - v). Errors on single-vertex or multi-fragment input.
inline std::set<std::string> best_roots(const Digraph& d,
                                        int limit = kDefaultDdpLimit) {
  DdpSolver solver(d, limit);
  std::set<std::string> out;
  for (int v : solver.best_roots_subset(solver.full_mask())) {
    out.insert(d.name_of(v));
  }
  return out;
}

}  // namespace dagdepth
