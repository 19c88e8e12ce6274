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
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dagdepth/digraph.hpp"

namespace dagdepth {

/// Parse failure in a text format; carries the 1-based source line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

/// Splits one raw line into whitespace-separated tokens, dropping
/// everything from the first '#' on and a trailing carriage return.
inline std::vector<std::string> tokenize_line(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace detail

/// Parses the line-oriented digraph format:
///   v <name>            declares a vertex
///   e <from> <to>       declares an edge; endpoints are declared implicitly
/// '#' starts a comment, blank lines are ignored. Self-loops and malformed
/// lines are rejected with their line number.
inline Digraph parse_digraph(const std::string& text) {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> tok = detail::tokenize_line(raw);
    if (tok.empty()) continue;
    if (tok[0] == "v") {
      if (tok.size() != 2) {
        throw ParseError(lineno, "expected 'v <name>'");
      }
      vertices.insert(tok[1]);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) {
        throw ParseError(lineno, "expected 'e <from> <to>'");
      }
      if (tok[1] == tok[2]) {
        throw ParseError(lineno, "self-loop on vertex '" + tok[1] + "'");
      }
      edges.emplace(tok[1], tok[2]);
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  return Digraph(vertices, edges);
}

/// Canonical serialization: 'v' lines for isolated vertices, then 'e'
/// lines, all lexicographically sorted. parse(serialize(d)) == d.
inline std::string serialize_digraph(const Digraph& d) {
  std::ostringstream out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.indegree(v) == 0 && d.outdegree(v) == 0) {
      out << "v " << d.name_of(v) << "\n";
    }
  }
  for (const auto& e : d.edge_list()) {
    out << "e " << e.first << " " << e.second << "\n";
  }
  return out.str();
}

}  // namespace dagdepth
