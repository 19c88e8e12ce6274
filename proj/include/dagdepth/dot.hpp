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

#include <sstream>
#include <string>

#include "dagdepth/decomposition.hpp"
#include "dagdepth/digraph.hpp"

namespace dagdepth {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

/// GraphViz text for a digraph, vertices then edges, both sorted.
inline std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const std::string& v : d.vertex_names()) {
    out << "  " << detail::dot_quote(v) << ";\n";
  }
  for (const auto& e : d.edge_list()) {
    out << "  " << detail::dot_quote(e.first) << " -> "
        << detail::dot_quote(e.second) << ";\n";
  }
  out << "}\n";
  return out.str();
}

/// GraphViz text for a decomposition. Nodes are labeled "<copy-id>:<org>"
/// so duplicated originals stay distinguishable.
inline std::string to_dot(const Decomposition& dec) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const std::string& id : dec.structure.vertex_names()) {
    auto it = dec.org.find(id);
    if (it == dec.org.end()) {
      throw Error("copy '" + id + "' has no org entry");
    }
    out << "  " << detail::dot_quote(id) << " [label="
        << detail::dot_quote(id + ":" + it->second) << "];\n";
  }
  for (const auto& e : dec.structure.edge_list()) {
    out << "  " << detail::dot_quote(e.first) << " -> "
        << detail::dot_quote(e.second) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dagdepth
