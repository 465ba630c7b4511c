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

#ifndef DNAGRAPH_ISOMORPHISM_HPP_
#define DNAGRAPH_ISOMORPHISM_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"

namespace dnagraph {

inline constexpr std::size_t kDefaultIsomorphismCap = 16;

namespace detail {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Digraph& a, const Digraph& b) : a_(a), b_(b) {
    const std::size_t n = a.vertex_count();
    map_.assign(n, kUnmapped);
    used_.assign(n, false);
    order_ = connectivity_order(a);
  }

  std::optional<std::vector<VertexIndex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr VertexIndex kUnmapped = static_cast<VertexIndex>(-1);

  // Highest-degree vertex first, then breadth-first along arcs in either
  // direction so that every later vertex has a mapped neighbour to check.
  static std::vector<VertexIndex> connectivity_order(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexIndex> order;
    auto degree = [&](VertexIndex v) { return d.in_degree(v) + d.out_degree(v); };
    while (order.size() < n) {
      VertexIndex start = n;
      for (VertexIndex v = 0; v < n; ++v) {
        if (!seen[v] && (start == n || degree(v) > degree(start))) start = v;
      }
      seen[start] = true;
      order.push_back(start);
      for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
        const VertexIndex v = order[i];
        auto visit = [&](VertexIndex w) {
          if (!seen[w]) {
            seen[w] = true;
            order.push_back(w);
          }
        };
        for (ArcIndex arc : d.out_arcs(v)) visit(d.arc(arc).head);
        for (ArcIndex arc : d.in_arcs(v)) visit(d.arc(arc).tail);
      }
    }
    return order;
  }

  bool consistent(VertexIndex u, VertexIndex image) const {
    if (a_.in_degree(u) != b_.in_degree(image) ||
        a_.out_degree(u) != b_.out_degree(image)) {
      return false;
    }
    for (VertexIndex w = 0; w < map_.size(); ++w) {
      if (map_[w] == kUnmapped) continue;
      if (a_.has_arc(u, w) != b_.has_arc(image, map_[w])) return false;
      if (a_.has_arc(w, u) != b_.has_arc(map_[w], image)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexIndex u = order_[depth];
    for (VertexIndex image = 0; image < b_.vertex_count(); ++image) {
      if (used_[image] || !consistent(u, image)) continue;
      map_[u] = image;
      used_[image] = true;
      if (extend(depth + 1)) return true;
      map_[u] = kUnmapped;
      used_[image] = false;
    }
    return false;
  }

  const Digraph& a_;
  const Digraph& b_;
  std::vector<VertexIndex> map_;
  std::vector<bool> used_;
  std::vector<VertexIndex> order_;
};

inline std::vector<std::pair<std::size_t, std::size_t>> degree_sequence(const Digraph& d) {
  std::vector<std::pair<std::size_t, std::size_t>> seq;
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    seq.emplace_back(d.in_degree(v), d.out_degree(v));
  }
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace detail

// Arc-preserving bijection a -> b (indexed by a's vertices), if any.
// Plain backtracking over in/out-degree compatible images.
inline std::optional<std::vector<VertexIndex>> find_isomorphism(
    const Digraph& a, const Digraph& b, std::size_t size_cap = kDefaultIsomorphismCap) {
  if (a.vertex_count() > size_cap || b.vertex_count() > size_cap) {
    fail(ErrorKind::kResourceLimit,
         "isomorphism check limited to " + std::to_string(size_cap) + " vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) {
    return std::nullopt;
  }
  if (detail::degree_sequence(a) != detail::degree_sequence(b)) return std::nullopt;
  return detail::IsomorphismSearch(a, b).run();
}

inline bool isomorphic(const Digraph& a, const Digraph& b,
                       std::size_t size_cap = kDefaultIsomorphismCap) {
  return find_isomorphism(a, b, size_cap).has_value();
}

}  // namespace dnagraph

#endif  // DNAGRAPH_ISOMORPHISM_HPP_
