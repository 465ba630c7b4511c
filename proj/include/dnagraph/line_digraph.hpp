// Copyright 2026 The dnagraph Authors
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

#ifndef DNAGRAPH_LINE_DIGRAPH_HPP_
#define DNAGRAPH_LINE_DIGRAPH_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"

namespace dnagraph {

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

// Last step of a walk name ("v1->v2->v3" -> "v3"; "v1" -> "v1").
inline std::string_view last_step(std::string_view walk) {
  const auto pos = walk.rfind(kWalkSeparator);
  if (pos == std::string_view::npos) return walk;
  return walk.substr(pos + kWalkSeparator.size());
}

// Name of the line-digraph vertex standing for the arc tail -> head.
inline std::string walk_name(std::string_view tail, std::string_view head) {
  std::string name(tail);
  name += kWalkSeparator;
  name += last_step(head);
  return name;
}

// L(D): one vertex per arc of D (in arc order), an arc x -> y whenever the
// head of x is the tail of y.
inline Digraph line_digraph(const Digraph& d) {
  Digraph line;
  for (const Arc& arc : d.arcs()) {
    line.add_vertex(walk_name(d.name(arc.tail), d.name(arc.head)));
  }
  for (ArcIndex x = 0; x < d.arc_count(); ++x) {
    for (ArcIndex y : d.out_arcs(d.arc(x).head)) line.add_arc(x, y);
  }
  return line;
}

// L^m(D). Throws resource-limit before building a level with more than
// vertex_cap vertices.
inline Digraph iterated_line_digraph(const Digraph& d, std::size_t m,
                                     std::size_t vertex_cap = kDefaultVertexCap) {
  Digraph current = d;
  for (std::size_t step = 0; step < m; ++step) {
    if (current.arc_count() > vertex_cap) {
      fail(ErrorKind::kResourceLimit,
           "L^" + std::to_string(step + 1) + " would have " +
               std::to_string(current.arc_count()) + " vertices (cap " +
               std::to_string(vertex_cap) + ")");
    }
    current = line_digraph(current);
  }
  return current;
}

}  // namespace dnagraph

#endif  // DNAGRAPH_LINE_DIGRAPH_HPP_
