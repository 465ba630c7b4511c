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

#ifndef DNAGRAPH_DIGRAPH_HPP_
#define DNAGRAPH_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dnagraph/error.hpp"

namespace dnagraph {

using VertexIndex = std::size_t;
using ArcIndex = std::size_t;

struct Arc {
  VertexIndex tail;
  VertexIndex head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Separator between the steps of a walk name. Vertices of L^m(D) are named
// by the length-(m+1) walk in D they stand for, e.g. "v1->v2->v3".
inline constexpr std::string_view kWalkSeparator = "->";

// Simple digraph (no loops, no parallel arcs) with named vertices. Vertex
// and arc iteration order is insertion order, so every derived object
// (line digraphs, labelings, exports) is deterministic.
class Digraph {
 public:
  Digraph() = default;

  VertexIndex add_vertex(std::string name) {
    if (name.empty()) fail(ErrorKind::kInvalidInput, "empty vertex name");
    if (index_.contains(name)) {
      fail(ErrorKind::kInvalidInput, "duplicate vertex '" + name + "'");
    }
    const VertexIndex v = names_.size();
    index_.emplace(name, v);
    names_.push_back(std::move(name));
    out_.emplace_back();
    in_.emplace_back();
    return v;
  }

  ArcIndex add_arc(VertexIndex tail, VertexIndex head) {
    check_vertex(tail);
    check_vertex(head);
    if (tail == head) {
      fail(ErrorKind::kInvalidInput, "self-loop at '" + names_[tail] + "'");
    }
    if (!arc_keys_.insert(key(tail, head)).second) {
      fail(ErrorKind::kInvalidInput,
           "duplicate arc " + names_[tail] + " " + names_[head]);
    }
    const ArcIndex a = arcs_.size();
    arcs_.push_back({tail, head});
    out_[tail].push_back(a);
    in_[head].push_back(a);
    return a;
  }

  ArcIndex add_arc(std::string_view tail, std::string_view head) {
    return add_arc(index_of(tail), index_of(head));
  }

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  const std::string& name(VertexIndex v) const {
    check_vertex(v);
    return names_[v];
  }
  std::span<const std::string> names() const noexcept { return names_; }

  std::optional<VertexIndex> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexIndex index_of(std::string_view name) const {
    if (auto v = find(name)) return *v;
    fail(ErrorKind::kInvalidInput, "unknown vertex '" + std::string(name) + "'");
  }

  std::span<const Arc> arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcIndex a) const { return arcs_.at(a); }

  // Arc indices leaving / entering v, in insertion order.
  std::span<const ArcIndex> out_arcs(VertexIndex v) const {
    check_vertex(v);
    return out_[v];
  }
  std::span<const ArcIndex> in_arcs(VertexIndex v) const {
    check_vertex(v);
    return in_[v];
  }

  std::size_t out_degree(VertexIndex v) const { return out_arcs(v).size(); }
  std::size_t in_degree(VertexIndex v) const { return in_arcs(v).size(); }

  bool has_arc(VertexIndex tail, VertexIndex head) const {
    return arc_keys_.contains(key(tail, head));
  }

  // Ordered equality: same vertex names in the same order and same arc list.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.names_ == b.names_ && a.arcs_ == b.arcs_;
  }

 private:
  static std::uint64_t key(VertexIndex tail, VertexIndex head) {
    return (static_cast<std::uint64_t>(tail) << 32) ^
           static_cast<std::uint64_t>(head);
  }

  void check_vertex(VertexIndex v) const {
    if (v >= names_.size()) {
      fail(ErrorKind::kInvalidInput, "vertex index out of range");
    }
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcIndex>> out_;
  std::vector<std::vector<ArcIndex>> in_;
  std::unordered_set<std::uint64_t> arc_keys_;
};

// Same vertex names and same arc set, ignoring insertion order.
inline bool same_structure(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) {
    return false;
  }
  for (const auto& name : a.names()) {
    if (!b.find(name)) return false;
  }
  for (const Arc& arc : a.arcs()) {
    if (!b.has_arc(b.index_of(a.name(arc.tail)), b.index_of(a.name(arc.head)))) {
      return false;
    }
  }
  return true;
}

inline Digraph reversed(const Digraph& d) {
  Digraph r;
  for (const auto& name : d.names()) r.add_vertex(name);
  for (const Arc& arc : d.arcs()) r.add_arc(arc.head, arc.tail);
  return r;
}

}  // namespace dnagraph

#endif  // DNAGRAPH_DIGRAPH_HPP_
