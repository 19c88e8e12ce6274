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

#include <random>
#include <set>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <dagdepth/builder.hpp>
#include <dagdepth/dg_format.hpp>
#include <dagdepth/dec_format.hpp>
#include <dagdepth/digraph.hpp>

#include "fixtures.hpp"
#include "testutil.hpp"

using namespace dagdepth;

TEST_CASE("parsing the digraph format") {
  Digraph d = parse_digraph(fixtures::kFig1Dg);
  CHECK(d.vertex_count() == 6);
  CHECK(d.edge_count() == 6);
  CHECK(d.vertex_names() ==
        std::vector<std::string>{"A", "B", "C", "D", "E", "F"});
  CHECK(d.has_edge("A", "C"));
  CHECK(d.has_edge("D", "C"));
  CHECK_FALSE(d.has_edge("C", "A"));
  CHECK_FALSE(d.has_edge("A", "Z"));

  SECTION("comments, blank lines, and carriage returns are tolerated") {
    Digraph e = parse_digraph("# header\n\nv X\r\ne A B # trailing\n");
    CHECK(e.vertex_count() == 3);
    CHECK(e.has_vertex("X"));
    CHECK(e.has_edge("A", "B"));
  }

  SECTION("endpoints are declared implicitly") {
    Digraph e = parse_digraph("e A B\n");
    CHECK(e.vertex_count() == 2);
  }
}

TEST_CASE("digraph parse errors carry line numbers") {
  try {
    parse_digraph("v X\ne Y Y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_digraph("v\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("e A\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("edge A B\n"), ParseError);
}

TEST_CASE("digraph construction rejects bad input") {
  CHECK_THROWS_AS(Digraph({"a"}, {{"a", "a"}}), Error);
  CHECK_THROWS_AS(Digraph({""}, {}), Error);
  CHECK_THROWS_AS(Digraph({"ha#sh"}, {}), Error);
  CHECK_THROWS_AS(parse_digraph("e A B\n").index_of("Z"), Error);
}

TEST_CASE("serialization is canonical and round-trips") {
  Digraph fig1 = parse_digraph(fixtures::kFig1Dg);
  CHECK(serialize_digraph(fig1) == fixtures::kFig1Dg);
  CHECK(parse_digraph(serialize_digraph(fig1)) == fig1);

  // Isolated vertices get explicit v lines; endpoints do not.
  Digraph d = parse_digraph("v Z\nv A\ne B A\n");
  CHECK(serialize_digraph(d) == "v Z\ne B A\n");
  CHECK(parse_digraph(serialize_digraph(d)) == d);
}

TEST_CASE("reachability includes the start and respects direction") {
  Digraph fig1 = parse_digraph(fixtures::kFig1Dg);
  CHECK(reachable_set(fig1, "A") == std::set<std::string>{"A", "C", "D"});
  CHECK(reachable_set(fig1, "C") == std::set<std::string>{"C", "D"});
  CHECK(reachable_set(fig1, "F") == std::set<std::string>{"C", "D", "F"});
  CHECK_THROWS_AS(reachable_set(fig1, "Z"), Error);
}

TEST_CASE("induced subgraphs and edge addition") {
  Digraph fig1 = parse_digraph(fixtures::kFig1Dg);
  Digraph sub = fig1.induced_subgraph({"A", "C", "D"});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 3);  // A->C, C->D, D->C
  CHECK(sub.has_edge("D", "C"));
  CHECK_FALSE(sub.has_vertex("B"));
  CHECK_THROWS_AS(fig1.induced_subgraph({"A", "Z"}), Error);

  Digraph more = sub.with_edge("A", "D");
  CHECK(more.edge_count() == 4);
  CHECK(more != sub);
  CHECK(sub.with_edge("A", "C") == sub);
}

TEST_CASE("acyclicity, roots, and leaves") {
  Digraph fig1 = parse_digraph(fixtures::kFig1Dg);
  CHECK_FALSE(dag_structure(fig1).is_dag);

  Digraph p = parse_decomposition(fixtures::kFig1DecBuilt).structure;
  DagStructure s = dag_structure(p);
  CHECK(s.is_dag);
  CHECK(s.roots == std::set<std::string>{"0", "4"});
  CHECK(s.leaves == std::set<std::string>{"1", "2", "3", "5", "6", "7"});
}

TEST_CASE("depth metrics count vertices on paths") {
  CHECK(dag_depth_and_levels(Digraph({"x"}, {})).depth == 1);
  CHECK(dag_depth_and_levels(parse_digraph(fixtures::kFig1Dg)
                                 .induced_subgraph({"A"})).depth == 1);

  Digraph p1 = parse_decomposition(fixtures::kFig1DecBuilt).structure;
  CHECK(dag_depth_and_levels(p1).depth == 2);

  Digraph p2 = parse_decomposition(fixtures::kFig2Dec).structure;
  DagMetrics m = dag_depth_and_levels(p2);
  CHECK(m.depth == 4);  // e, g, d, c
  CHECK(m.level.at("e") == 1);
  CHECK(m.level.at("a") == 3);
  CHECK(m.level.at("c") == 4);
  CHECK(m.vdepth.at("e") == 4);
  CHECK(m.vdepth.at("c") == 1);
  for (const auto& kv : m.level) {
    CHECK(kv.second + m.vdepth.at(kv.first) - 1 <= m.depth);
  }

  CHECK_THROWS_AS(dag_depth_and_levels(parse_digraph(fixtures::kFig1Dg)),
                  Error);
}

TEST_CASE("depth metrics agree with plain longest-path enumeration") {
  CHECK(dag_depth_and_levels(parse_decomposition(fixtures::kFig2Dec).structure)
            .depth ==
        testutil::longest_path_plain(
            parse_decomposition(fixtures::kFig2Dec).structure));
  std::mt19937 rng(20260817);
  int checked = 0;
  while (checked < 20) {
    Digraph d = testutil::random_digraph(rng, 5, 0.3);
    Digraph p = build_decomposition(d).structure;
    CHECK(dag_depth_and_levels(p).depth == testutil::longest_path_plain(p));
    ++checked;
  }
}
