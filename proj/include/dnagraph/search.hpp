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

#ifndef DNAGRAPH_SEARCH_HPP_
#define DNAGRAPH_SEARCH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/families.hpp"
#include "dnagraph/labeling.hpp"
#include "dnagraph/verify.hpp"

namespace dnagraph {

enum class SearchMode { kQuasi, kFull };
enum class VertexOrder {
  kArcDepthFirst,  // depth first along arcs from a maximum out-degree vertex
  kInput,          // vertex insertion order
};
enum class SearchVerdict { kSat, kUnsat, kBudgetExceeded };

inline std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::kQuasi ? "quasi" : "full";
}

inline std::string_view to_string(SearchVerdict verdict) {
  switch (verdict) {
    case SearchVerdict::kSat: return "SAT";
    case SearchVerdict::kUnsat: return "UNSAT";
    case SearchVerdict::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::size_t kDefaultSearchCap = 40;

struct SearchConfig {
  std::size_t alpha = 4;
  std::size_t k = 3;
  SearchMode mode = SearchMode::kQuasi;
  std::uint64_t node_budget = kDefaultNodeBudget;
  VertexOrder order = VertexOrder::kArcDepthFirst;
  std::size_t size_cap = kDefaultSearchCap;
};

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::kUnsat;
  std::optional<Labeling> certificate;  // present iff verdict == kSat
  std::uint64_t nodes_explored = 0;
};

namespace detail {

// Depth-first labeling search. Each assignment is checked against the
// already-labeled neighbours (shift constraint), against all labels used so
// far (distinctness) and, in full mode, against every labeled vertex whose
// label overlaps without an arc. Symbols are canonicalised: a symbol may be
// used only after all smaller symbols have appeared, which removes the
// alphabet-permutation symmetry.
class LabelingSearch {
 public:
  using Callback = std::function<bool(const Labeling&)>;

  LabelingSearch(const Digraph& d, const SearchConfig& cfg) : d_(d), cfg_(cfg) {
    if (cfg.alpha < 2 || cfg.k < 2) {
      fail(ErrorKind::kInvalidParameter, "search needs alpha >= 2 and k >= 2");
    }
    if (cfg.node_budget == 0) fail(ErrorKind::kInvalidParameter, "node budget must be positive");
    if (d.vertex_count() > cfg.size_cap) {
      fail(ErrorKind::kResourceLimit, "search limited to " + std::to_string(cfg.size_cap) +
                                          " vertices, digraph has " +
                                          std::to_string(d.vertex_count()));
    }
    order_ = cfg.order == VertexOrder::kInput ? input_order() : arc_depth_first_order();
    labels_.assign(d.vertex_count(), {});
    assigned_.assign(d.vertex_count(), false);
  }

  // Calls on_solution for each canonical labeling until it returns false.
  SearchVerdict run(const Callback& on_solution) {
    on_solution_ = &on_solution;
    const bool exhausted = extend(0, 0);
    if (budget_hit_) return SearchVerdict::kBudgetExceeded;
    if (found_ > 0) return SearchVerdict::kSat;
    return exhausted ? SearchVerdict::kUnsat : SearchVerdict::kSat;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t solutions() const noexcept { return found_; }

 private:
  using Key = std::string;

  std::vector<VertexIndex> input_order() const {
    std::vector<VertexIndex> order(d_.vertex_count());
    for (VertexIndex v = 0; v < order.size(); ++v) order[v] = v;
    return order;
  }

  std::vector<VertexIndex> arc_depth_first_order() const {
    const std::size_t n = d_.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexIndex> order;
    std::function<void(VertexIndex)> visit = [&](VertexIndex v) {
      seen[v] = true;
      order.push_back(v);
      for (ArcIndex a : d_.out_arcs(v)) {
        if (!seen[d_.arc(a).head]) visit(d_.arc(a).head);
      }
      for (ArcIndex a : d_.in_arcs(v)) {
        if (!seen[d_.arc(a).tail]) visit(d_.arc(a).tail);
      }
    };
    while (order.size() < n) {
      VertexIndex start = n;
      for (VertexIndex v = 0; v < n; ++v) {
        if (!seen[v] && (start == n || d_.out_degree(v) > d_.out_degree(start))) start = v;
      }
      visit(start);
    }
    return order;
  }

  // Symmetry check; returns the new running maximum or 0 when rejected.
  static std::size_t canonical_max(const std::vector<Symbol>& label, std::size_t max_used) {
    for (Symbol s : label) {
      if (s > max_used + 1) return 0;
      max_used = std::max<std::size_t>(max_used, s);
    }
    return max_used;
  }

  static Key prefix_key(const std::vector<Symbol>& label) {
    return Key(label.begin(), label.end() - 1);
  }
  static Key suffix_key(const std::vector<Symbol>& label) {
    return Key(label.begin() + 1, label.end());
  }

  bool admissible(VertexIndex w, const std::vector<Symbol>& label) const {
    if (used_.contains(Key(label.begin(), label.end()))) return false;
    for (ArcIndex a : d_.in_arcs(w)) {
      const VertexIndex x = d_.arc(a).tail;
      if (assigned_[x] && !std::equal(labels_[x].begin() + 1, labels_[x].end(), label.begin())) {
        return false;
      }
    }
    for (ArcIndex a : d_.out_arcs(w)) {
      const VertexIndex y = d_.arc(a).head;
      if (assigned_[y] && !std::equal(label.begin() + 1, label.end(), labels_[y].begin())) {
        return false;
      }
    }
    if (cfg_.mode == SearchMode::kFull) {
      const Key pre = prefix_key(label);
      const Key suf = suffix_key(label);
      if (pre == suf && !d_.has_arc(w, w)) return false;
      if (auto it = by_suffix_.find(pre); it != by_suffix_.end()) {
        for (VertexIndex x : it->second) {
          if (!d_.has_arc(x, w)) return false;
        }
      }
      if (auto it = by_prefix_.find(suf); it != by_prefix_.end()) {
        for (VertexIndex y : it->second) {
          if (!d_.has_arc(w, y)) return false;
        }
      }
    }
    return true;
  }

  // Candidate labels for w, in increasing symbol order of the free position.
  std::vector<std::vector<Symbol>> candidates(VertexIndex w) const {
    const std::size_t k = cfg_.k;
    std::vector<std::vector<Symbol>> out;
    for (ArcIndex a : d_.in_arcs(w)) {
      const VertexIndex x = d_.arc(a).tail;
      if (!assigned_[x]) continue;
      for (std::size_t s = 1; s <= cfg_.alpha; ++s) {
        std::vector<Symbol> label(k);
        std::copy(labels_[x].begin() + 1, labels_[x].end(), label.begin());
        label[k - 1] = static_cast<Symbol>(s);
        out.push_back(std::move(label));
      }
      return out;
    }
    for (ArcIndex a : d_.out_arcs(w)) {
      const VertexIndex y = d_.arc(a).head;
      if (!assigned_[y]) continue;
      for (std::size_t s = 1; s <= cfg_.alpha; ++s) {
        std::vector<Symbol> label(k);
        label[0] = static_cast<Symbol>(s);
        std::copy(labels_[y].begin(), labels_[y].end() - 1, label.begin() + 1);
        out.push_back(std::move(label));
      }
      return out;
    }
    std::vector<Symbol> label(k, 1);
    while (true) {
      out.push_back(label);
      std::size_t pos = k;
      while (pos > 0 && label[pos - 1] == cfg_.alpha) label[--pos] = 1;
      if (pos == 0) break;
      ++label[pos - 1];
    }
    return out;
  }

  void assign(VertexIndex w, const std::vector<Symbol>& label) {
    labels_[w] = label;
    assigned_[w] = true;
    used_.insert(Key(label.begin(), label.end()));
    if (cfg_.mode == SearchMode::kFull) {
      by_prefix_[prefix_key(label)].push_back(w);
      by_suffix_[suffix_key(label)].push_back(w);
    }
  }

  void unassign(VertexIndex w) {
    const auto& label = labels_[w];
    used_.erase(Key(label.begin(), label.end()));
    if (cfg_.mode == SearchMode::kFull) {
      by_prefix_[prefix_key(label)].pop_back();
      by_suffix_[suffix_key(label)].pop_back();
    }
    assigned_[w] = false;
  }

  // Returns false when the search stopped early (budget or callback).
  bool extend(std::size_t depth, std::size_t max_used) {
    if (depth == order_.size()) {
      ++found_;
      std::vector<Label> labels;
      for (const auto& symbols : labels_) labels.emplace_back(symbols);
      return (*on_solution_)(Labeling(cfg_.alpha, cfg_.k, std::move(labels)));
    }
    const VertexIndex w = order_[depth];
    for (const auto& label : candidates(w)) {
      const std::size_t next_max = canonical_max(label, max_used);
      if (next_max == 0 || !admissible(w, label)) continue;
      if (nodes_ == cfg_.node_budget) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      assign(w, label);
      const bool keep_going = extend(depth + 1, next_max);
      unassign(w);
      if (!keep_going) return false;
    }
    return true;
  }

  const Digraph& d_;
  SearchConfig cfg_;
  std::vector<VertexIndex> order_;
  std::vector<std::vector<Symbol>> labels_;
  std::vector<bool> assigned_;
  std::unordered_set<Key> used_;
  // Full mode only: labeled vertices by (k-1)-prefix / (k-1)-suffix.
  std::unordered_map<Key, std::vector<VertexIndex>> by_prefix_;
  std::unordered_map<Key, std::vector<VertexIndex>> by_suffix_;
  const Callback* on_solution_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t found_ = 0;
  bool budget_hit_ = false;
};

inline void require_certificate(const Digraph& d, const SearchConfig& cfg, const Labeling& lab) {
  const Verdict v = cfg.mode == SearchMode::kFull ? check_full(d, lab) : check_quasi(d, lab);
  if (!v) fail(ErrorKind::kInternal, "search produced an invalid certificate: " + v.detail);
}

}  // namespace detail

// Decides whether d has a (quasi-)(alpha,k)-labeling by exhaustive search.
// BUDGET_EXCEEDED is reported when the node budget runs out; it never
// stands in for UNSAT.
inline SearchOutcome find_labeling(const Digraph& d, const SearchConfig& cfg) {
  detail::LabelingSearch search(d, cfg);
  SearchOutcome outcome;
  outcome.verdict = search.run([&](const Labeling& lab) {
    detail::require_certificate(d, cfg, lab);
    outcome.certificate = lab;
    return false;
  });
  outcome.nodes_explored = search.nodes();
  return outcome;
}

struct EnumerationResult {
  SearchVerdict verdict = SearchVerdict::kUnsat;
  std::uint64_t solutions = 0;
  std::uint64_t nodes_explored = 0;
  bool complete = false;  // every canonical labeling was visited
};

// Visits every labeling up to alphabet permutation (one canonical
// representative per class) until visit returns false or limit is reached.
inline EnumerationResult enumerate_labelings(const Digraph& d, const SearchConfig& cfg,
                                             const std::function<bool(const Labeling&)>& visit,
                                             std::uint64_t limit = UINT64_MAX) {
  detail::LabelingSearch search(d, cfg);
  std::uint64_t seen = 0;
  bool stopped = false;
  EnumerationResult result;
  result.verdict = search.run([&](const Labeling& lab) {
    detail::require_certificate(d, cfg, lab);
    ++seen;
    if (!visit(lab) || seen >= limit) {
      stopped = true;
      return false;
    }
    return true;
  });
  result.solutions = search.solutions();
  result.nodes_explored = search.nodes();
  result.complete = !stopped && result.verdict != SearchVerdict::kBudgetExceeded;
  return result;
}

// Whenever x -> m -> y and x -> y are all arcs, a quasi-labeling forces l(m)
// to be constant. Returns true iff every such middle vertex has a constant
// label; on a chorded dicycle these are the vertices strictly inside chords.
inline bool check_middle_vertex_lemma(const Digraph& d, const Labeling& lab) {
  if (lab.size() != d.vertex_count()) {
    fail(ErrorKind::kInvalidInput, "labeling does not cover the digraph");
  }
  for (const Arc& chord : d.arcs()) {
    for (ArcIndex a : d.out_arcs(chord.tail)) {
      const VertexIndex middle = d.arc(a).head;
      if (d.has_arc(middle, chord.head) && !lab[middle].is_constant()) return false;
    }
  }
  return true;
}

struct ConjectureRow {
  std::size_t n = 0;
  std::size_t alpha = 0;
  std::size_t k = 0;
  SearchVerdict verdict = SearchVerdict::kUnsat;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  std::optional<Labeling> certificate;
};

// For each n, searches a full labeling of the ladder P2 x Pn, trying
// (alpha,k) = (3,4), (4,4), (3,5), (4,5) until one is SAT. Every attempt is
// reported as a row.
inline std::vector<ConjectureRow> explore_conjecture(const std::vector<std::size_t>& n_range,
                                                     const SearchConfig& base) {
  static constexpr std::pair<std::size_t, std::size_t> kAttempts[] = {
      {3, 4}, {4, 4}, {3, 5}, {4, 5}};
  std::vector<ConjectureRow> rows;
  for (std::size_t n : n_range) {
    const Digraph ladder = make_ladder(n);
    for (const auto& [alpha, k] : kAttempts) {
      SearchConfig cfg = base;
      cfg.alpha = alpha;
      cfg.k = k;
      cfg.mode = SearchMode::kFull;
      SearchOutcome outcome = find_labeling(ladder, cfg);
      rows.push_back({n, alpha, k, outcome.verdict, outcome.nodes_explored, cfg.node_budget,
                      std::move(outcome.certificate)});
      if (rows.back().verdict == SearchVerdict::kSat) break;
    }
  }
  return rows;
}

// Aligned table followed by one machine-readable line per row:
// "n alpha k verdict nodes".
inline std::string format_conjecture_report(const std::vector<ConjectureRow>& rows) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%4s %5s %3s %-16s %12s %12s\n", "n", "alpha", "k", "verdict",
                "nodes", "budget");
  out << line;
  for (const auto& row : rows) {
    std::snprintf(line, sizeof line, "%4zu %5zu %3zu %-16s %12llu %12llu\n", row.n, row.alpha,
                  row.k, std::string(to_string(row.verdict)).c_str(),
                  static_cast<unsigned long long>(row.nodes),
                  static_cast<unsigned long long>(row.budget));
    out << line;
  }
  out << '\n';
  for (const auto& row : rows) {
    out << row.n << ' ' << row.alpha << ' ' << row.k << ' ' << to_string(row.verdict) << ' '
        << row.nodes << '\n';
  }
  return out.str();
}

}  // namespace dnagraph

#endif  // DNAGRAPH_SEARCH_HPP_
