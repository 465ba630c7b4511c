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

#ifndef DNAGRAPH_CONSTRUCTIONS_HPP_
#define DNAGRAPH_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/families.hpp"
#include "dnagraph/labeling.hpp"
#include "dnagraph/verify.hpp"

namespace dnagraph {

// Closed-form quasi-(alpha,k)-labelings of the chorded dicycles and of the
// bouquets of dicycles (infinity digraphs, windmills, propellers).

// Identifiers of the source constructions, as accepted by the CLI.
namespace tags {
inline constexpr std::string_view kChordedTable = "table1";
inline constexpr std::string_view kInfinityEven = "thm6";
inline constexpr std::string_view kInfinityOdd = "thm8";
inline constexpr std::string_view kInfinityC3 = "thm9";
inline constexpr std::string_view kDoubleCycle = "thm10";
inline constexpr std::string_view kWindmill = "thm11";
inline constexpr std::string_view kPropeller = "thm12";
}  // namespace tags

struct ConstructionResult {
  Digraph digraph;
  Labeling labeling;
  std::string theorem_tag;
  // Vertex order of each constituent cycle. For bouquets, position 1 of
  // every cycle is the shared vertex.
  std::vector<std::vector<VertexIndex>> cycles;
};

using LabelCycle = std::vector<Label>;

namespace detail {

inline std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }
inline long as_long(std::size_t n) { return static_cast<long>(n); }

// Vertex indices of each bouquet cycle, matching make_bouquet's insertion order.
inline std::vector<std::vector<VertexIndex>> bouquet_cycles(std::span<const std::size_t> lengths) {
  std::vector<std::vector<VertexIndex>> cycles;
  VertexIndex next = 0;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    std::vector<VertexIndex> cycle;
    for (std::size_t i = 0; i < lengths[j]; ++i) {
      cycle.push_back(j > 0 && i == 1 ? cycles[0][1] : next++);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

inline void require_valid(const ConstructionResult& result) {
  if (Verdict v = check_quasi(result.digraph, result.labeling); !v) {
    fail(ErrorKind::kConstructionFailure,
         std::string(result.theorem_tag) + " produced an invalid labeling: " + v.detail);
  }
}

inline ConstructionResult assemble_bouquet(const std::vector<LabelCycle>& label_cycles,
                                           std::size_t alpha, std::string_view tag) {
  std::vector<std::size_t> lengths;
  for (const auto& cycle : label_cycles) lengths.push_back(cycle.size());
  Digraph d = make_bouquet(lengths);
  auto cycles = bouquet_cycles(lengths);
  std::vector<Label> labels(d.vertex_count());
  for (std::size_t j = 0; j < label_cycles.size(); ++j) {
    if (j > 0 && label_cycles[j][1] != label_cycles[0][1]) {
      fail(ErrorKind::kConstructionFailure,
           std::string(tag) + ": cycles disagree on the shared vertex label");
    }
    for (std::size_t i = 0; i < label_cycles[j].size(); ++i) {
      labels[cycles[j][i]] = label_cycles[j][i];
    }
  }
  const std::size_t k = label_cycles.front().front().size();
  ConstructionResult result{std::move(d), Labeling(alpha, k, std::move(labels)),
                            std::string(tag), std::move(cycles)};
  require_valid(result);
  return result;
}

// Windows of length k of a cyclic word, one per starting position.
inline LabelCycle cycle_from_word(std::span<const Symbol> word, std::size_t k) {
  LabelCycle cycle;
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::vector<Symbol> symbols;
    for (std::size_t j = 0; j < k; ++j) symbols.push_back(word[(i + j) % word.size()]);
    cycle.emplace_back(std::move(symbols));
  }
  return cycle;
}

// Cyclic word of a quasi-labeled cycle: the first symbol of each label.
inline std::vector<Symbol> word_of_cycle(const LabelCycle& cycle) {
  std::vector<Symbol> word;
  for (const Label& label : cycle) word.push_back(label[0]);
  return word;
}

inline std::vector<Symbol> word_from_runs(std::initializer_list<std::pair<int, long>> runs) {
  auto label = Label::runs(runs);
  return {label.begin(), label.end()};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Chorded dicycles *C_n, 6 <= n <= 14: fixed quasi-(4,3)-labelings.

inline constexpr std::array<std::string_view, 9> kChordedCycleLabels = {
    "211 111 112 122 222 221",
    "311 111 112 122 222 223 231",
    "311 111 112 122 222 223 233 331",
    "311 111 112 122 222 223 233 333 331",
    "211 111 112 122 222 223 233 333 332 321",
    "211 111 112 122 222 223 233 333 332 322 221",
    "411 111 112 122 222 223 233 333 334 344 444 441",
    "211 111 112 122 222 223 233 333 334 344 444 442 421",
    "211 111 112 122 222 223 233 333 334 344 444 442 422 221",
};

inline ConstructionResult label_chorded_cycle(std::size_t n) {
  if (n < 6 || n > 14) {
    fail(ErrorKind::kUnsupportedParameter,
         "chorded cycle labelings are tabulated for 6 <= n <= 14, got " + std::to_string(n));
  }
  std::vector<Label> labels;
  std::string_view row = kChordedCycleLabels[n - 6];
  while (!row.empty()) {
    const auto space = row.find(' ');
    labels.push_back(Label::parse(row.substr(0, space)));
    row = space == std::string_view::npos ? std::string_view{} : row.substr(space + 1);
  }
  std::vector<VertexIndex> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = i;
  ConstructionResult result{make_chorded_cycle(n), Labeling(4, 3, std::move(labels)),
                            std::string(tags::kChordedTable), {std::move(cycle)}};
  detail::require_valid(result);
  return result;
}

// ---------------------------------------------------------------------------
// Shrinking the last cycle of a bouquet.
//
// A quasi-labeled cycle is the set of length-k windows of a cyclic word.
// Deleting one symbol of that word shortens the cycle by one vertex; when the
// symbol sits in a run of length k this removes exactly one constant-labeled
// vertex and leaves every other label untouched (122, 222, 223 -> 122, 223),
// otherwise the neighbouring labels merge (122, 223 -> 123). A deletion is
// accepted when the shared label survives and all labels stay distinct.

namespace detail {

// One deletion on the last cycle, scanning positions from the end of the
// cycle backwards; returns nullopt when no deletion keeps the labeling valid.
inline std::optional<LabelCycle> shrink_once(const LabelCycle& cycle, const Label& shared,
                                             const std::set<Label>& fixed_labels) {
  const std::size_t k = shared.size();
  const std::vector<Symbol> word = word_of_cycle(cycle);
  const std::size_t p = word.size();
  std::vector<std::size_t> positions;
  // Positions 1..k spell the shared label and are never deleted.
  for (std::size_t pos = p; pos-- > k + 1;) positions.push_back(pos);
  positions.push_back(0);
  for (std::size_t pos : positions) {
    std::vector<Symbol> candidate = word;
    candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(pos));
    if (pos == 0) std::rotate(candidate.rbegin(), candidate.rbegin() + 1, candidate.rend());
    LabelCycle labels = cycle_from_word(candidate, k);
    if (labels[1] != shared) continue;
    std::set<Label> seen;
    bool ok = true;
    for (std::size_t i = 0; i < labels.size() && ok; ++i) {
      ok = seen.insert(labels[i]).second && (i == 1 || !fixed_labels.contains(labels[i]));
    }
    if (ok) return labels;
  }
  return std::nullopt;
}

inline std::vector<LabelCycle> label_cycles_of(const ConstructionResult& result) {
  std::vector<LabelCycle> cycles;
  for (const auto& cycle : result.cycles) {
    LabelCycle labels;
    for (VertexIndex v : cycle) labels.push_back(result.labeling[v]);
    cycles.push_back(std::move(labels));
  }
  return cycles;
}

}  // namespace detail

// Shrinks the last cycle of a bouquet construction to target_p vertices,
// one vertex at a time, re-verifying the labeling after every deletion.
// The shortest reachable cycle has k + 1 vertices.
inline ConstructionResult shrink_by_merge(const ConstructionResult& result,
                                          std::size_t target_p) {
  if (result.cycles.size() < 2) {
    fail(ErrorKind::kInvalidParameter, "shrink_by_merge needs a bouquet of cycles");
  }
  std::vector<LabelCycle> cycles = detail::label_cycles_of(result);
  const std::size_t k = result.labeling.k();
  if (target_p < k + 1 || target_p > cycles.back().size()) {
    fail(ErrorKind::kInvalidParameter,
         "target length " + std::to_string(target_p) + " outside [" + std::to_string(k + 1) +
             ", " + std::to_string(cycles.back().size()) + "]");
  }
  const Label shared = cycles.front()[1];
  std::set<Label> fixed_labels;
  for (std::size_t j = 0; j + 1 < cycles.size(); ++j) {
    fixed_labels.insert(cycles[j].begin(), cycles[j].end());
  }
  ConstructionResult current = result;
  while (cycles.back().size() > target_p) {
    auto shrunk = detail::shrink_once(cycles.back(), shared, fixed_labels);
    if (!shrunk) {
      fail(ErrorKind::kConstructionFailure,
           "no removable vertex at cycle length " + std::to_string(cycles.back().size()));
    }
    cycles.back() = std::move(*shrunk);
    current = detail::assemble_bouquet(cycles, result.labeling.alpha(), result.theorem_tag);
  }
  return current;
}

// ---------------------------------------------------------------------------
// Infinity digraphs C_n . C_p.

namespace detail {

// v-cycle of C_n . C_p with k = n/2 + 1, n even.
inline LabelCycle infinity_even_v(std::size_t n) {
  const long h = as_long(n / 2);
  LabelCycle cycle;
  for (long i = 1; i <= as_long(n); ++i) {
    if (i <= h) {
      cycle.push_back(Label::runs({{1, h - i + 2}, {2, i - 1}}));
    } else if (i == h + 1) {
      cycle.push_back(Label::runs({{1, 1}, {2, h - 1}, {1, 1}}));
    } else {
      cycle.push_back(Label::runs({{2, as_long(n) - i + 1}, {1, i - h}}));
    }
  }
  return cycle;
}

// v-cycle of C_n . C_p with k = ceil(n/2) + 1, n odd.
inline LabelCycle infinity_odd_v(std::size_t n) {
  const long c = as_long(ceil_half(n));
  LabelCycle cycle;
  for (long i = 1; i <= as_long(n); ++i) {
    if (i <= c - 1) {
      cycle.push_back(Label::runs({{1, c - i + 2}, {2, i - 1}}));
    } else if (i == c) {
      cycle.push_back(Label::runs({{1, 2}, {2, c - 2}, {1, 1}}));
    } else if (i == c + 1) {
      cycle.push_back(Label::runs({{1, 1}, {2, c - 2}, {1, 2}}));
    } else {
      cycle.push_back(Label::runs({{2, as_long(n) - i + 1}, {1, i - c + 1}}));
    }
  }
  return cycle;
}

// Longest u-cycle, 5h + 3 vertices with labels of length h + 1, h >= 2.
// Cyclic word 1^h 2 3^(h+1) 4^(h+1) 2^(h+1) 3^(h-1), started at the last 3 so
// that u1 = 3 1^h and u2 = 1^h 2. Apart from u2, every label contains a 3 or
// a 4, so it cannot collide with the {1,2}-labels of the other cycle.
inline LabelCycle infinity_long_u(std::size_t h) {
  const long hh = as_long(h);
  const auto word = word_from_runs(
      {{3, 1}, {1, hh}, {2, 1}, {3, hh + 1}, {4, hh + 1}, {2, hh + 1}, {3, hh - 2}});
  return cycle_from_word(word, h + 1);
}

inline ConstructionResult infinity_construction(LabelCycle v, std::size_t h, std::size_t p,
                                                std::string_view tag) {
  ConstructionResult full = assemble_bouquet({std::move(v), infinity_long_u(h)}, 4, tag);
  return shrink_by_merge(full, p);
}

}  // namespace detail

inline std::size_t infinity_max_p(std::size_t n) { return 5 * detail::ceil_half(n) + 3; }

// C_n . C_p, n even >= 4, n <= p <= 5n/2 + 3: quasi-(4, n/2 + 1).
inline ConstructionResult label_infinity_even(std::size_t n, std::size_t p) {
  if (n < 4 || n % 2 != 0) {
    fail(ErrorKind::kInvalidParameter, "even construction needs even n >= 4");
  }
  if (p < n || p > infinity_max_p(n)) {
    fail(ErrorKind::kInvalidParameter, "p must lie in [n, 5n/2 + 3]");
  }
  return detail::infinity_construction(detail::infinity_even_v(n), n / 2, p,
                                       tags::kInfinityEven);
}

// C_n . C_p, n odd >= 5, n <= p <= 5 ceil(n/2) + 3: quasi-(4, ceil(n/2) + 1).
inline ConstructionResult label_infinity_odd(std::size_t n, std::size_t p) {
  if (n < 5 || n % 2 != 1) {
    fail(ErrorKind::kInvalidParameter, "odd construction needs odd n >= 5");
  }
  if (p < n || p > infinity_max_p(n)) {
    fail(ErrorKind::kInvalidParameter, "p must lie in [n, 5 ceil(n/2) + 3]");
  }
  return detail::infinity_construction(detail::infinity_odd_v(n), detail::ceil_half(n), p,
                                       tags::kInfinityOdd);
}

// C_3 . C_p, 4 <= p <= 13: the n = 4 construction with the 3-cycle
// relabeled 211, 112, 121.
inline ConstructionResult label_infinity_c3(std::size_t p) {
  if (p < 4 || p > 13) fail(ErrorKind::kInvalidParameter, "p must lie in [4, 13]");
  LabelCycle v = {Label::parse("211"), Label::parse("112"), Label::parse("121")};
  return detail::infinity_construction(std::move(v), 2, p, tags::kInfinityC3);
}

// ---------------------------------------------------------------------------
// Windmills, double cycles and propellers.

namespace detail {

// Blade j (1-based) of length L, k = ceil(L/2). Blade 1 uses {1,2}; blade
// j > 1 adds the colour j + 1. Vertex 2 is 1^(k-1) 2 on every blade.
inline LabelCycle windmill_blade(std::size_t length, long j) {
  const long n = as_long(length);
  const long c = as_long(ceil_half(length));
  const bool odd = length % 2 == 1;
  const int colour = static_cast<int>(j + 1);
  LabelCycle cycle;
  for (long i = 1; i <= n; ++i) {
    if (i == 1) {
      cycle.push_back(j == 1 ? Label::runs({{1, c}}) : Label::runs({{colour, 1}, {1, c - 1}}));
    } else if (i == 2) {
      cycle.push_back(Label::runs({{1, c - 1}, {2, 1}}));
    } else if (j == 1 && i <= c) {
      cycle.push_back(Label::runs({{1, c - i + 1}, {2, i - 1}}));
    } else if (j > 1 && i <= c + 1) {
      cycle.push_back(Label::runs({{1, c - i + 1}, {2, 1}, {colour, i - 2}}));
    } else if (j == 1) {
      cycle.push_back(Label::runs({{2, n - i + 1}, {1, odd ? i - c : i - n / 2 - 1}}));
    } else {
      cycle.push_back(Label::runs({{colour, n - i + 2}, {1, odd ? i - c - 1 : i - n / 2 - 2}}));
    }
  }
  return cycle;
}

// Blade j of even length m, k = m/2 + 1.
inline LabelCycle long_blade_even(std::size_t m, long j) {
  const long n = as_long(m);
  const long h = n / 2;
  const int colour = static_cast<int>(j + 1);
  LabelCycle cycle;
  for (long i = 1; i <= n; ++i) {
    if (i == 1) {
      cycle.push_back(Label::runs({{colour, 1}, {1, h}}));
    } else if (i == 2) {
      cycle.push_back(Label::runs({{1, h}, {2, 1}}));
    } else if (i <= h + 1) {
      cycle.push_back(Label::runs({{1, h - i + 2}, {2, 1}, {colour, i - 2}}));
    } else if (i == h + 2) {
      cycle.push_back(Label::runs({{2, 1}, {colour, h - 1}, {1, 1}}));
    } else {
      cycle.push_back(Label::runs({{colour, n - i + 2}, {1, i - h - 1}}));
    }
  }
  return cycle;
}

// Blade j of odd length m, k = (m+1)/2 + 1: the even blade of length m + 1
// with the vertices 1 2 c..c and 2 c..c 1 merged into 1 2 c..c 1, i.e. one
// colour symbol removed from its cyclic word.
inline LabelCycle long_blade_odd(std::size_t m, long j) {
  const LabelCycle even = long_blade_even(m + 1, j);
  const std::size_t h = (m + 1) / 2;
  std::vector<Symbol> word = word_of_cycle(even);
  word.erase(word.begin() + static_cast<std::ptrdiff_t>(h + 2));
  return cycle_from_word(word, h + 1);
}

}  // namespace detail

// C_n . C_n, n >= 3: quasi-(3, ceil(n/2)).
inline ConstructionResult label_double_cycle(std::size_t n) {
  if (n < 3) fail(ErrorKind::kInvalidParameter, "double cycle needs n >= 3");
  std::vector<LabelCycle> cycles;
  if (n == 3) {
    cycles = {{Label::parse("11"), Label::parse("12"), Label::parse("21")},
              {Label::parse("31"), Label::parse("12"), Label::parse("23")}};
  } else {
    // Same case split as blades 1 and 2 of the windmill.
    cycles = {detail::windmill_blade(n, 1), detail::windmill_blade(n, 2)};
  }
  return detail::assemble_bouquet(cycles, 3, tags::kDoubleCycle);
}

// Windmill D^3_n = C_n . C_n . C_n, n >= 3: quasi-(4, ceil(n/2)).
inline ConstructionResult label_windmill(std::size_t n) {
  if (n < 3) fail(ErrorKind::kInvalidParameter, "windmill needs n >= 3");
  return detail::assemble_bouquet(
      {detail::windmill_blade(n, 1), detail::windmill_blade(n, 2), detail::windmill_blade(n, 3)},
      4, tags::kWindmill);
}

// Propeller C_n . C_p . C_q, n >= 4 and p, q in {n, n+1, n+2}. The common
// label length is K = max ceil(L/2) over the blade lengths L; a blade with
// ceil(L/2) = K takes the windmill labels, the others the longer blades.
inline ConstructionResult label_propeller(std::size_t n, std::size_t p, std::size_t q) {
  if (n < 4) fail(ErrorKind::kInvalidParameter, "propeller needs n >= 4");
  for (std::size_t len : {p, q}) {
    if (len < n || len > n + 2) {
      fail(ErrorKind::kInvalidParameter, "p and q must lie in {n, n+1, n+2}");
    }
  }
  const std::array<std::size_t, 3> lengths = {n, p, q};
  std::size_t k = 0;
  for (std::size_t len : lengths) k = std::max(k, detail::ceil_half(len));
  std::vector<LabelCycle> cycles;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    const std::size_t len = lengths[j];
    const long blade = static_cast<long>(j + 1);
    if (detail::ceil_half(len) == k) {
      cycles.push_back(detail::windmill_blade(len, blade));
    } else if (len % 2 == 0) {
      cycles.push_back(detail::long_blade_even(len, blade));
    } else {
      cycles.push_back(detail::long_blade_odd(len, blade));
    }
  }
  return detail::assemble_bouquet(cycles, 4, tags::kPropeller);
}

}  // namespace dnagraph

#endif  // DNAGRAPH_CONSTRUCTIONS_HPP_
