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

#ifndef DNAGRAPH_FAMILIES_HPP_
#define DNAGRAPH_FAMILIES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"

namespace dnagraph {

// Generators for the digraph families. Vertex names follow the usual
// drawing conventions: cycles are v1..vn, the second and third cycle of a
// bouquet are u1..up and w1..wq (their vertex 2 is the shared vertex v2),
// ladder columns are t0..t(n-1) on top and b0..b(n-1) on the bottom.

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::kInvalidParameter, what);
}

inline std::string indexed(std::string_view prefix, std::size_t i) {
  return std::string(prefix) + std::to_string(i);
}

}  // namespace detail

inline Digraph make_dipath(std::size_t n) {
  detail::require(n >= 1, "dipath needs n >= 1");
  Digraph d;
  for (std::size_t i = 1; i <= n; ++i) d.add_vertex(detail::indexed("v", i));
  for (std::size_t i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
  return d;
}

inline Digraph make_dicycle(std::size_t n) {
  detail::require(n >= 2, "dicycle needs n >= 2");
  Digraph d;
  for (std::size_t i = 1; i <= n; ++i) d.add_vertex(detail::indexed("v", i));
  for (std::size_t i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

// 1-based indices i of the chord heads v_{i-2} -> v_i: i = 3, 6, ..., n - (n mod 3).
inline std::vector<std::size_t> chord_heads(std::size_t n) {
  std::vector<std::size_t> heads;
  for (std::size_t i = 3; i <= n - n % 3; i += 3) heads.push_back(i);
  return heads;
}

// Dicycle on n vertices with floor(n/3) chords, each spanning distance 2.
inline Digraph make_chorded_cycle(std::size_t n) {
  detail::require(n >= 4, "chorded cycle needs n >= 4");
  Digraph d = make_dicycle(n);
  for (std::size_t head : chord_heads(n)) d.add_arc(head - 3, head - 1);
  return d;
}

inline constexpr std::string_view kBouquetPrefixes[] = {"v", "u", "w"};

// Cycles of the given lengths glued at their second vertex. Cycle j has
// vertices prefix_j 1..L_j; its vertex 2 is the shared vertex "v2".
// Arcs are listed cycle by cycle, i -> i+1 then L -> 1.
inline Digraph make_bouquet(std::span<const std::size_t> lengths) {
  detail::require(!lengths.empty() && lengths.size() <= 3,
                  "bouquet needs one to three cycles");
  Digraph d;
  std::vector<std::vector<VertexIndex>> cycles;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    detail::require(lengths[j] >= 2, "bouquet cycle needs length >= 2");
    std::vector<VertexIndex> cycle;
    for (std::size_t i = 1; i <= lengths[j]; ++i) {
      if (j > 0 && i == 2) {
        cycle.push_back(cycles[0][1]);
      } else {
        cycle.push_back(d.add_vertex(detail::indexed(kBouquetPrefixes[j], i)));
      }
    }
    cycles.push_back(std::move(cycle));
  }
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      d.add_arc(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
  }
  return d;
}

// Infinity digraph C_n . C_p: two dicycles sharing v2 = u2.
inline Digraph make_infinity(std::size_t n, std::size_t p) {
  detail::require(n >= 3 && p >= 3, "infinity digraph needs n, p >= 3");
  const std::size_t lengths[] = {n, p};
  return make_bouquet(lengths);
}

// Three-blade propeller C_n . C_p . C_q.
inline Digraph make_propeller3(std::size_t n, std::size_t p, std::size_t q) {
  detail::require(n >= 3 && p >= 3 && q >= 3, "propeller needs n, p, q >= 3");
  const std::size_t lengths[] = {n, p, q};
  return make_bouquet(lengths);
}

inline Digraph make_windmill(std::size_t n) { return make_propeller3(n, n, n); }

// Oriented ladder P2 x Pn: top row left to right, bottom row right to left,
// rung c points up (bottom to top) for even c and down for odd c.
inline Digraph make_ladder(std::size_t n) {
  detail::require(n >= 2, "ladder needs n >= 2");
  Digraph d;
  std::vector<VertexIndex> top, bottom;
  for (std::size_t c = 0; c < n; ++c) top.push_back(d.add_vertex(detail::indexed("t", c)));
  for (std::size_t c = 0; c < n; ++c) bottom.push_back(d.add_vertex(detail::indexed("b", c)));
  for (std::size_t c = 0; c + 1 < n; ++c) d.add_arc(top[c], top[c + 1]);
  for (std::size_t c = n - 1; c > 0; --c) d.add_arc(bottom[c], bottom[c - 1]);
  for (std::size_t c = 0; c < n; ++c) {
    if (c % 2 == 0) {
      d.add_arc(bottom[c], top[c]);
    } else {
      d.add_arc(top[c], bottom[c]);
    }
  }
  return d;
}

enum class FamilyKind {
  kDipath,
  kDicycle,
  kChordedCycle,
  kInfinity,
  kPropeller3,
  kWindmill,
  kLadder,
};

inline constexpr std::pair<FamilyKind, std::string_view> kFamilyNames[] = {
    {FamilyKind::kDipath, "dipath"},
    {FamilyKind::kDicycle, "dicycle"},
    {FamilyKind::kChordedCycle, "chorded-cycle"},
    {FamilyKind::kInfinity, "infinity"},
    {FamilyKind::kPropeller3, "propeller3"},
    {FamilyKind::kWindmill, "windmill"},
    {FamilyKind::kLadder, "ladder"},
};

inline std::string_view to_string(FamilyKind kind) {
  for (const auto& [k, name] : kFamilyNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

inline std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (const auto& [k, name] : kFamilyNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

struct FamilySpec {
  FamilyKind kind = FamilyKind::kDicycle;
  std::size_t n = 0;
  std::optional<std::size_t> p;
  std::optional<std::size_t> q;
};

inline Digraph make_family(const FamilySpec& spec) {
  auto need = [&](const std::optional<std::size_t>& value, const char* what) {
    detail::require(value.has_value(),
                    std::string(to_string(spec.kind)) + " needs " + what);
    return *value;
  };
  switch (spec.kind) {
    case FamilyKind::kDipath: return make_dipath(spec.n);
    case FamilyKind::kDicycle: return make_dicycle(spec.n);
    case FamilyKind::kChordedCycle: return make_chorded_cycle(spec.n);
    case FamilyKind::kInfinity: return make_infinity(spec.n, need(spec.p, "p"));
    case FamilyKind::kPropeller3:
      return make_propeller3(spec.n, need(spec.p, "p"), need(spec.q, "q"));
    case FamilyKind::kWindmill: return make_windmill(spec.n);
    case FamilyKind::kLadder: return make_ladder(spec.n);
  }
  fail(ErrorKind::kInvalidParameter, "unknown family");
}

}  // namespace dnagraph

#endif  // DNAGRAPH_FAMILIES_HPP_
