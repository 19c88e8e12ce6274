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

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <dagdepth/dg_format.hpp>
#include <dagdepth/fragments.hpp>
#include <dagdepth/generators.hpp>
#include <dagdepth/solver.hpp>

#include "fixtures.hpp"
#include "testutil.hpp"

using namespace dagdepth;

namespace {

Digraph fig1() { return parse_digraph(fixtures::kFig1Dg); }

}  // namespace

TEST_CASE("reachable fragments are the maximal reachability sets") {
  std::vector<Fragment> fs = reachable_fragments(fig1());
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].source == "A");
  CHECK(fs[0].members == std::set<std::string>{"A", "C", "D"});
  CHECK(fs[1].source == "B");
  CHECK(fs[1].members == std::set<std::string>{"B", "C", "D"});
  CHECK(fs[2].source == "E");
  CHECK(fs[2].members == std::set<std::string>{"C", "D", "E"});
  CHECK(fs[3].source == "F");
  CHECK(fs[3].members == std::set<std::string>{"C", "D", "F"});
}

TEST_CASE("fragment properties hold on random digraphs") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    Digraph d = testutil::random_digraph(rng, 6, 0.25);
    std::vector<Fragment> fs = reachable_fragments(d);
    std::set<std::string> covered;
    std::set<std::string> sources;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Fragment& f = fs[i];
      // Each fragment is exactly what its source reaches.
      CHECK(f.members == reachable_set(d, f.source));
      // Maximality: no reachability set strictly contains it.
      for (const std::string& v : d.vertex_names()) {
        std::set<std::string> r = reachable_set(d, v);
        if (r != f.members) {
          CHECK_FALSE(std::includes(r.begin(), r.end(), f.members.begin(),
                                    f.members.end()));
        }
      }
      if (i > 0) CHECK(fs[i - 1].source < f.source);
      sources.insert(f.source);
      covered.insert(f.members.begin(), f.members.end());
    }
    CHECK(sources.size() == fs.size());
    CHECK(covered == d.vertex_set());
  }
}

TEST_CASE("ddp on fixed instances") {
  CHECK(ddp(Digraph({"x"}, {})) == 1);
  CHECK(ddp(Digraph({"x", "y"}, {})) == 1);
  CHECK(ddp(fig1()) == 2);
  CHECK(ddp(gen_fig2()) == 4);
  CHECK(ddp(gen_path(7)) == 3);
  CHECK(ddp(gen_path(3)) == 2);
  // Transitive tournament on three vertices.
  CHECK(ddp(parse_digraph("e a b\ne a c\ne b c\n")) == 3);
  for (int n = 1; n <= 5; ++n) {
    CHECK(ddp(gen_expo(n)) == n);
  }
  for (int n = 1; n <= 4; ++n) {
    CHECK(ddp(gen_bicomplete(n)) == n);
  }
}

TEST_CASE("ddp matches the unmemoized recursion") {
  SECTION("exhaustively up to three vertices") {
    for (int n = 1; n <= 3; ++n) {
      std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs);
           ++mask) {
        Digraph d = testutil::digraph_from_mask(n, mask);
        CHECK(ddp(d) == testutil::ddp_plain(d));
      }
    }
  }
  SECTION("sampled at four to six vertices") {
    std::mt19937 rng(90125);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 4 + trial % 3;
      Digraph d = testutil::random_digraph(rng, n, 0.3);
      CHECK(ddp(d) == testutil::ddp_plain(d));
    }
  }
}

TEST_CASE("ddp bounds and removal behavior") {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 6); ++mask) {
    Digraph d = testutil::digraph_from_mask(3, mask);
    int k = ddp(d);
    CHECK(k >= 1);
    CHECK(k <= d.vertex_count());
    for (const std::string& v : d.vertex_names()) {
      if (d.vertex_count() == 1) continue;
      std::set<std::string> rest = d.vertex_set();
      rest.erase(v);
      int sub = ddp(d.induced_subgraph(rest));
      CHECK(sub <= k);
      CHECK(sub >= k - 1);
    }
  }
}

TEST_CASE("ddp of a disjoint union is the maximum over components") {
  Digraph left = gen_path(7);
  Digraph right = gen_bicomplete(2);
  std::set<std::string> verts = left.vertex_set();
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : left.edge_list()) edges.insert(e);
  for (const auto& e : gen_bicomplete(2).edge_list()) {
    edges.insert({"r" + e.first, "r" + e.second});
    verts.insert("r" + e.first);
    verts.insert("r" + e.second);
  }
  Digraph both(verts, edges);
  CHECK(ddp(both) == std::max(ddp(left), ddp(right)));
}

TEST_CASE("best roots of a single-fragment digraph") {
  Digraph sub = fig1().induced_subgraph({"A", "C", "D"});
  CHECK(best_roots(sub) == std::set<std::string>{"C"});

  Digraph cyc = parse_digraph("e u v\ne v u\n");
  CHECK(best_roots(cyc) == std::set<std::string>{"u", "v"});

  Digraph expo = gen_expo(3);
  std::set<std::string> rest = expo.vertex_set();
  rest.erase("b1");
  CHECK(best_roots(expo.induced_subgraph(rest)) ==
        std::set<std::string>{"a1"});
}

TEST_CASE("best roots rejects unsuitable inputs") {
  CHECK_THROWS_AS(best_roots(fig1()), Error);  // four fragments
  CHECK_THROWS_AS(best_roots(Digraph({"x"}, {})), Error);
}

TEST_CASE("solver size limits") {
  CHECK_THROWS_AS(ddp(Digraph(std::set<std::string>{}, {})), Error);
  CHECK_THROWS_AS(ddp(fig1(), 3), Error);
  std::set<std::string> many;
  for (int i = 0; i < 64; ++i) many.insert("v" + std::to_string(i));
  CHECK_THROWS_AS(ddp(Digraph(many, {}), 100), Error);
}
