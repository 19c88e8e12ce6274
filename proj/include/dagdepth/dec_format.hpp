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
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dagdepth/dg_format.hpp"
#include "dagdepth/decomposition.hpp"

namespace dagdepth {

/// Parses the decomposition format:
///   n <copy-id> <org-name>   declares a copy of an original vertex
///   e <copy-id> <copy-id>    declares a decomposition edge
/// '#' comments and blank lines as in the digraph format. Every edge
/// endpoint must be declared by an 'n' line, the structure must be acyclic,
/// and conflicting redeclarations are rejected. Surjectivity onto a
/// concrete digraph is checked by the operations, not here.
inline Decomposition parse_decomposition(const std::string& text) {
  std::map<std::string, std::string> org;
  std::map<std::string, int> declared_at;
  std::set<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::pair<std::string, std::string>, int>> edge_lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> tok = detail::tokenize_line(raw);
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (tok.size() != 3) {
        throw ParseError(lineno, "expected 'n <copy-id> <org-name>'");
      }
      auto it = org.find(tok[1]);
      if (it != org.end() && it->second != tok[2]) {
        throw ParseError(lineno, "copy '" + tok[1] +
                                     "' redeclared with a different original "
                                     "(first declared on line " +
                                     std::to_string(declared_at[tok[1]]) +
                                     ")");
      }
      org[tok[1]] = tok[2];
      declared_at.emplace(tok[1], lineno);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) {
        throw ParseError(lineno, "expected 'e <copy-id> <copy-id>'");
      }
      if (tok[1] == tok[2]) {
        throw ParseError(lineno, "self-edge on copy '" + tok[1] + "'");
      }
      edges.emplace(tok[1], tok[2]);
      edge_lines.push_back({{tok[1], tok[2]}, lineno});
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  for (const auto& el : edge_lines) {
    if (!org.count(el.first.first)) {
      throw ParseError(el.second,
                       "edge endpoint '" + el.first.first + "' has no n line");
    }
    if (!org.count(el.first.second)) {
      throw ParseError(el.second, "edge endpoint '" + el.first.second +
                                      "' has no n line");
    }
  }
  std::set<std::string> copies;
  for (const auto& kv : org) copies.insert(kv.first);
  Decomposition dec;
  dec.structure = Digraph(copies, edges);
  dec.org = std::move(org);
  if (!dag_structure(dec.structure).is_dag) {
    throw Error("decomposition structure has a cycle");
  }
  return dec;
}

/// Canonical serialization: 'n' lines sorted by copy-id, then 'e' lines
/// sorted lexicographically. parse(serialize(dec)) == dec.
inline std::string serialize_decomposition(const Decomposition& dec) {
  std::ostringstream out;
  for (int c = 0; c < dec.structure.vertex_count(); ++c) {
    const std::string& id = dec.structure.name_of(c);
    out << "n " << id << " " << dec.org.at(id) << "\n";
  }
  for (const auto& e : dec.structure.edge_list()) {
    out << "e " << e.first << " " << e.second << "\n";
  }
  return out.str();
}

}  // namespace dagdepth
