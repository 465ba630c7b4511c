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

#ifndef DNAGRAPH_VERIFY_HPP_
#define DNAGRAPH_VERIFY_HPP_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/labeling.hpp"

namespace dnagraph {

// Outcome of a labeling check. detail names the first violation found.
struct Verdict {
  bool ok = true;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }

  static Verdict pass() { return {}; }
  static Verdict violation(std::string detail) { return {false, std::move(detail)}; }
};

namespace detail {

inline void require_total(const Digraph& d, const Labeling& lab) {
  if (lab.size() != d.vertex_count()) {
    fail(ErrorKind::kInvalidInput,
         "labeling covers " + std::to_string(lab.size()) + " of " +
             std::to_string(d.vertex_count()) + " vertices");
  }
}

}  // namespace detail

// No two distinct vertices share a label.
inline Verdict check_distinct(const Digraph& d, const Labeling& lab) {
  detail::require_total(d, lab);
  std::unordered_map<std::string, VertexIndex> seen;
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    auto [it, inserted] = seen.emplace(symbol_key(lab[v].symbols()), v);
    if (!inserted) {
      return Verdict::violation("vertices " + d.name(it->second) + " and " + d.name(v) +
                                " share label " + lab[v].str());
    }
  }
  return Verdict::pass();
}

// Quasi-(alpha,k): distinct labels in {1..alpha}^k and every arc x -> y has
// suffix(l(x)) = prefix(l(y)).
inline Verdict check_quasi(const Digraph& d, const Labeling& lab) {
  detail::require_total(d, lab);
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    if (lab[v].max_symbol() > lab.alpha()) {
      return Verdict::violation("label of " + d.name(v) + " exceeds alpha");
    }
  }
  for (const Arc& arc : d.arcs()) {
    if (!lab[arc.tail].shifts_to(lab[arc.head])) {
      return Verdict::violation("arc " + d.name(arc.tail) + " -> " + d.name(arc.head) +
                                " breaks the shift: " + lab[arc.tail].str() + " -> " +
                                lab[arc.head].str());
    }
  }
  return check_distinct(d, lab);
}

// Full (alpha,k): quasi, and conversely every ordered pair (x, y) whose labels
// overlap is an arc. Pairs with x = y are included, so a constant label
// demands a loop and is never accepted on a simple digraph.
inline Verdict check_full(const Digraph& d, const Labeling& lab) {
  if (Verdict quasi = check_quasi(d, lab); !quasi) return quasi;
  std::unordered_map<std::string, std::vector<VertexIndex>> by_prefix;
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    by_prefix[symbol_key(lab[v].prefix())].push_back(v);
  }
  for (VertexIndex x = 0; x < d.vertex_count(); ++x) {
    auto it = by_prefix.find(symbol_key(lab[x].suffix()));
    if (it == by_prefix.end()) continue;
    for (VertexIndex y : it->second) {
      if (!d.has_arc(x, y)) {
        return Verdict::violation("labels " + lab[x].str() + " (" + d.name(x) + ") and " +
                                  lab[y].str() + " (" + d.name(y) +
                                  ") overlap but there is no arc");
      }
    }
  }
  return Verdict::pass();
}

inline bool verify_distinct(const Digraph& d, const Labeling& lab) {
  return check_distinct(d, lab).ok;
}
inline bool verify_quasi(const Digraph& d, const Labeling& lab) {
  return check_quasi(d, lab).ok;
}
inline bool verify_full(const Digraph& d, const Labeling& lab) {
  return check_full(d, lab).ok;
}

inline constexpr std::size_t kDnaAlphabet = 4;

// A full (alpha,k)-labeling with alpha <= 4 certifies a DNA graph.
inline bool is_dna_certificate(const Digraph& d, const Labeling& lab) {
  if (lab.alpha() > kDnaAlphabet || lab.size() != d.vertex_count()) return false;
  return verify_full(d, lab);
}

}  // namespace dnagraph

#endif  // DNAGRAPH_VERIFY_HPP_
