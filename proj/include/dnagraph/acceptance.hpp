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

#ifndef DNAGRAPH_ACCEPTANCE_HPP_
#define DNAGRAPH_ACCEPTANCE_HPP_

// The acceptance criteria as executable checks. Every check is exact; the
// only tolerances are the wall-clock limits below.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "dnagraph/constructions.hpp"
#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/families.hpp"
#include "dnagraph/isomorphism.hpp"
#include "dnagraph/labeling.hpp"
#include "dnagraph/lift.hpp"
#include "dnagraph/line_digraph.hpp"
#include "dnagraph/reference.hpp"
#include "dnagraph/search.hpp"
#include "dnagraph/sequencing.hpp"
#include "dnagraph/verify.hpp"

namespace dnagraph::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

// Seed and case count of the randomized invariant suite.
inline constexpr std::uint64_t kPropertySeed = 20260415;
inline constexpr std::size_t kPropertyCases = 1000;

namespace detail {

// Collects the first failure of a criterion.
class Check {
 public:
  bool expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
    return ok;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  void note(const std::string& text) { notes_ += notes_.empty() ? text : "; " + text; }
  const std::string& notes() const { return notes_; }

 private:
  std::string failure_;
  std::string notes_;
};

inline Labeling labeling_from_row(std::size_t alpha, std::string_view row) {
  std::vector<Label> labels;
  for (const auto& text : reference::split_labels(row)) labels.push_back(Label::parse(text));
  const std::size_t k = labels.empty() ? 0 : labels.front().size();
  return Labeling(alpha, k, std::move(labels));
}

inline std::multiset<std::string> label_multiset(const Labeling& lab) {
  std::multiset<std::string> out;
  for (const Label& label : lab.labels()) out.insert(label.str());
  return out;
}

inline std::multiset<std::string> row_multiset(std::string_view row) {
  const auto labels = reference::split_labels(row);
  return {labels.begin(), labels.end()};
}

inline std::vector<std::string> cycle_labels(const ConstructionResult& result, std::size_t j) {
  std::vector<std::string> out;
  for (VertexIndex v : result.cycles.at(j)) out.push_back(result.labeling[v].str());
  return out;
}

inline std::string join(std::span<const std::string> parts) {
  std::string out;
  for (const auto& part : parts) out += (out.empty() ? "" : " ") + part;
  return out;
}

// Fixture of the chorded dicycle *C_n from the published table.
inline Labeling chorded_fixture(std::size_t n) {
  return labeling_from_row(4, reference::kChordedCycleRows[n - reference::kChordedFirstN]);
}

// Shared-vertex check of a two-cycle bouquet: position 1 of both cycles is
// the same vertex with the same label.
inline bool shared_vertex_consistent(const ConstructionResult& r) {
  return r.cycles.size() >= 2 && r.cycles[0][1] == r.cycles[1][1] &&
         cycle_labels(r, 0)[1] == cycle_labels(r, 1)[1];
}

// --- criteria ---------------------------------------------------------------

inline void chorded_table(Check& c) {
  for (std::size_t n = 6; n <= 14; ++n) {
    const ConstructionResult r = label_chorded_cycle(n);
    const auto expected = reference::split_labels(
        reference::kChordedCycleRows[n - reference::kChordedFirstN]);
    std::vector<std::string> got;
    for (std::size_t i = 1; i <= n; ++i) {
      got.push_back(r.labeling[r.digraph.index_of("v" + std::to_string(i))].str());
    }
    c.expect(got == expected, "n=" + std::to_string(n) + " row " + join(got));
    c.expect(r.labeling.alpha() == 4 && r.labeling.k() == 3, "n=" + std::to_string(n) + " (4,3)");
    c.expect(verify_quasi(r.digraph, r.labeling), "n=" + std::to_string(n) + " quasi");
  }
}

inline void chorded_lift(Check& c) {
  for (std::size_t n = 6; n <= 14; ++n) {
    const Digraph d = make_chorded_cycle(n);
    const LabeledDigraph lifted = lift_once(d, chorded_fixture(n));
    c.expect(verify_full(lifted.digraph, lifted.labeling), "L(*C" + std::to_string(n) + ") full");
    if (n == 12) {
      c.expect(lifted.digraph.vertex_count() == 16,
               "L(*C12) has " + std::to_string(lifted.digraph.vertex_count()) + " vertices");
    }
  }
  // The drawn *C12 labeling lifts to exactly the drawn sixteen 4-mers.
  const Digraph d = make_chorded_cycle(12);
  const LabeledDigraph drawn = lift_once(d, labeling_from_row(4, reference::kChorded12Drawn));
  c.expect(label_multiset(drawn.labeling) == row_multiset(reference::kChorded12Lifted),
           "drawn L(*C12) label set");
}

inline void chorded_iterated(Check& c) {
  const LiftedLabeling lifted = lift_m(make_chorded_cycle(12), chorded_fixture(12), 3);
  c.expect(is_dna_certificate(lifted.result.digraph, lifted.result.labeling), "L^3 certificate");
  c.expect(lifted.result.labeling.k() == 6, "k=" + std::to_string(lifted.result.labeling.k()));
  bool growing = lifted.vertex_counts.size() == 4;
  for (std::size_t i = 1; growing && i < lifted.vertex_counts.size(); ++i) {
    growing = lifted.vertex_counts[i] > lifted.vertex_counts[i - 1];
  }
  std::string counts;
  for (std::size_t count : lifted.vertex_counts) counts += std::to_string(count) + " ";
  c.expect(growing, "vertex counts " + counts);
  c.note("|V| " + counts);
}

inline void infinity_sweep(Check& c, const std::vector<std::size_t>& ns, bool even) {
  std::size_t cases = 0;
  for (std::size_t n : ns) {
    const std::size_t k = (n + 1) / 2 + 1;
    for (std::size_t p = n; p <= infinity_max_p(n); ++p, ++cases) {
      const ConstructionResult r = even ? label_infinity_even(n, p) : label_infinity_odd(n, p);
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(p) + ")";
      c.expect(r.digraph.vertex_count() == n + p - 1, at + " size");
      c.expect(verify_quasi(r.digraph, r.labeling), at + " quasi");
      c.expect(r.labeling.k() == k, at + " k");
      c.expect(shared_vertex_consistent(r), at + " shared vertex");
    }
  }
  c.note(std::to_string(cases) + " (n,p) pairs");
}

inline void infinity_c3(Check& c) {
  for (std::size_t p = 4; p <= 13; ++p) {
    const ConstructionResult r = label_infinity_c3(p);
    const std::string at = "p=" + std::to_string(p);
    c.expect(verify_quasi(r.digraph, r.labeling), at + " quasi");
    const LabeledDigraph lifted = lift_once(r.digraph, r.labeling);
    c.expect(is_dna_certificate(lifted.digraph, lifted.labeling), at + " lifted certificate");
  }
}

inline void double_cycle(Check& c) {
  for (std::size_t n = 3; n <= 15; ++n) {
    const ConstructionResult r = label_double_cycle(n);
    const std::string at = "n=" + std::to_string(n);
    c.expect(verify_quasi(r.digraph, r.labeling), at + " quasi");
    c.expect(r.labeling.alpha() == 3 && r.labeling.k() == (n + 1) / 2, at + " (3,ceil(n/2))");
  }
  const ConstructionResult r3 = label_double_cycle(3);
  c.expect(join(cycle_labels(r3, 0)) == reference::kDouble3Short &&
               join(cycle_labels(r3, 1)) == reference::kDouble3Long,
           "n=3 explicit labels");
}

inline void bouquets(Check& c) {
  for (std::size_t n = 3; n <= 15; ++n) {
    const ConstructionResult r = label_windmill(n);
    c.expect(verify_quasi(r.digraph, r.labeling), "windmill n=" + std::to_string(n));
  }
  std::size_t cases = 0;
  for (std::size_t n = 4; n <= 9; ++n) {
    for (std::size_t p = n; p <= n + 2; ++p) {
      for (std::size_t q = n; q <= n + 2; ++q, ++cases) {
        const ConstructionResult r = label_propeller(n, p, q);
        c.expect(same_structure(r.digraph, make_propeller3(n, p, q)) &&
                     verify_quasi(r.digraph, r.labeling),
                 "propeller " + std::to_string(n) + "," + std::to_string(p) + "," +
                     std::to_string(q));
      }
    }
  }
  c.note(std::to_string(cases) + " propellers");
  const struct {
    std::size_t n, p, q;
    const std::array<std::string_view, 3>* blades;
  } drawn[] = {{5, 5, 6, &reference::kPropeller556}, {5, 6, 7, &reference::kPropeller567}};
  for (const auto& fixture : drawn) {
    const ConstructionResult r = label_propeller(fixture.n, fixture.p, fixture.q);
    for (std::size_t j = 0; j < 3; ++j) {
      const auto got = cycle_labels(r, j);
      c.expect(std::multiset<std::string>(got.begin(), got.end()) ==
                   row_multiset((*fixture.blades)[j]),
               "propeller (" + std::to_string(fixture.n) + "," + std::to_string(fixture.p) + "," +
                   std::to_string(fixture.q) + ") blade " + std::to_string(j + 1) + ": " +
                   join(got));
    }
  }
}

inline void infinity_chain(Check& c) {
  const Digraph d = make_infinity(4, 5);
  std::vector<std::pair<std::string, std::string>> rows;
  const auto shorter = reference::split_labels(reference::kInfinity45Short);
  const auto longer = reference::split_labels(reference::kInfinity45Long);
  for (std::size_t i = 0; i < 4; ++i) rows.emplace_back("v" + std::to_string(i + 1), shorter[i]);
  for (std::size_t i = 0; i < 5; ++i) {
    if (i != 1) rows.emplace_back("u" + std::to_string(i + 1), longer[i]);
  }
  const Labeling base = reference::labeling_by_name(d, 4, rows);
  c.expect(verify_quasi(d, base), "drawn C4.C5 labeling quasi");
  const ConstructionResult built = label_infinity_even(4, 5);
  c.expect(built.labeling == base, "construction reproduces drawn C4.C5 labeling");

  LiftOptions options;
  options.keep_intermediates = true;
  const LiftedLabeling lifted = lift_m(d, base, 2, options);
  const LabeledDigraph& first = lifted.intermediates.at(0);
  c.expect(label_multiset(first.labeling) == row_multiset(reference::kInfinity45Lift1),
           "L(C4.C5) label set");
  c.expect(verify_full(first.digraph, first.labeling), "L(C4.C5) full");
  c.expect(label_multiset(lifted.result.labeling) == row_multiset(reference::kInfinity45Lift2),
           "L^2(C4.C5) label set");
  c.expect(verify_full(lifted.result.digraph, lifted.result.labeling), "L^2(C4.C5) full");
  c.note("L^2 has " + std::to_string(lifted.result.labeling.size()) + " labels");
}

inline void ladder_isomorphism(Check& c) {
  c.expect(isomorphic(line_digraph(make_infinity(4, 4)), make_ladder(4)), "L(C4.C4) ~ ladder 4");
}

inline void ladders(Check& c) {
  for (const auto* fixture : {&reference::kLadder3, &reference::kLadder4, &reference::kLadder5}) {
    const Digraph ladder = make_ladder(fixture->n);
    c.expect(verify_full(ladder, reference::ladder_labeling(ladder, *fixture)),
             "ladder " + std::to_string(fixture->n) + " fixture full");
  }
  SearchConfig cfg;
  cfg.node_budget = kDefaultNodeBudget;
  const auto rows = explore_conjecture({2, 3, 4, 5, 6}, cfg);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto row = std::ranges::find_if(rows, [&](const ConjectureRow& r) { return r.n == n; });
    const bool first_is_34 = row != rows.end() && row->alpha == 3 && row->k == 4;
    const bool answered = first_is_34 && (row->verdict == SearchVerdict::kSat ||
                                          row->verdict == SearchVerdict::kBudgetExceeded);
    c.expect(answered, "ladder " + std::to_string(n) + " at (3,4)");
    if (answered) {
      c.note("n=" + std::to_string(n) + " " + std::string(to_string(row->verdict)) + " " +
             std::to_string(row->nodes) + " nodes" +
             (row->verdict == SearchVerdict::kBudgetExceeded
                  ? " (budget " + std::to_string(row->budget) + ")"
                  : ""));
    }
  }
}

inline void negative_bound(Check& c) {
  SearchConfig cfg;
  cfg.alpha = 4;
  cfg.k = 3;
  cfg.mode = SearchMode::kQuasi;
  const SearchOutcome outcome = find_labeling(make_chorded_cycle(15), cfg);
  c.expect(outcome.verdict == SearchVerdict::kUnsat,
           "*C15 verdict " + std::string(to_string(outcome.verdict)));
  c.note("*C15 UNSAT after " + std::to_string(outcome.nodes_explored) + " nodes");
  for (std::size_t n = 6; n <= 9; ++n) {
    const Digraph d = make_chorded_cycle(n);
    std::uint64_t violations = 0;
    const EnumerationResult all = enumerate_labelings(d, cfg, [&](const Labeling& lab) {
      if (!check_middle_vertex_lemma(d, lab)) ++violations;
      return true;
    });
    const std::string at = "*C" + std::to_string(n);
    c.expect(all.complete && all.solutions > 0, at + " enumeration incomplete or empty");
    c.expect(violations == 0, at + " lemma violated " + std::to_string(violations) + " times");
    c.note(at + " " + std::to_string(all.solutions) + " certificates");
  }
}

struct OracleFixture {
  std::string name;
  ConstructionResult result;
};

inline std::vector<OracleFixture> small_construction_fixtures() {
  constexpr std::size_t kMaxVertices = 20;
  constexpr std::size_t kMaxK = 4;
  std::vector<OracleFixture> out;
  auto add = [&](std::string name, auto&& make) {
    ConstructionResult r = make();
    if (r.digraph.vertex_count() <= kMaxVertices && r.labeling.k() <= kMaxK) {
      out.push_back({std::move(name), std::move(r)});
    }
  };
  const auto s = [](std::size_t v) { return std::to_string(v); };
  for (std::size_t n = 6; n <= 14; ++n) add("table1 " + s(n), [&] { return label_chorded_cycle(n); });
  for (std::size_t n : {4, 6}) {
    for (std::size_t p = n; p <= infinity_max_p(n); ++p) {
      add("thm6 " + s(n) + "," + s(p), [&] { return label_infinity_even(n, p); });
    }
  }
  for (std::size_t n : {5, 7}) {
    for (std::size_t p = n; p <= infinity_max_p(n); ++p) {
      add("thm8 " + s(n) + "," + s(p), [&] { return label_infinity_odd(n, p); });
    }
  }
  for (std::size_t p = 4; p <= 13; ++p) add("thm9 " + s(p), [&] { return label_infinity_c3(p); });
  for (std::size_t n = 3; n <= 11; ++n) add("thm10 " + s(n), [&] { return label_double_cycle(n); });
  for (std::size_t n = 3; n <= 7; ++n) add("thm11 " + s(n), [&] { return label_windmill(n); });
  for (std::size_t n = 4; n <= 7; ++n) {
    for (std::size_t p = n; p <= n + 2; ++p) {
      for (std::size_t q = n; q <= n + 2; ++q) {
        add("thm12 " + s(n) + "," + s(p) + "," + s(q), [&] { return label_propeller(n, p, q); });
      }
    }
  }
  return out;
}

inline void oracle_agreement(Check& c) {
  const auto fixtures = small_construction_fixtures();
  std::uint64_t nodes = 0;
  for (const auto& fixture : fixtures) {
    SearchConfig cfg;
    cfg.alpha = fixture.result.labeling.alpha();
    cfg.k = fixture.result.labeling.k();
    cfg.mode = SearchMode::kQuasi;
    const SearchOutcome outcome = find_labeling(fixture.result.digraph, cfg);
    nodes += outcome.nodes_explored;
    c.expect(outcome.verdict == SearchVerdict::kSat,
             fixture.name + ": " + std::string(to_string(outcome.verdict)));
  }
  c.note(std::to_string(fixtures.size()) + " fixtures, " + std::to_string(nodes) + " nodes");
}

inline void sequencing_pipeline(Check& c) {
  const Digraph numeric = reference::sbh_digraph();
  const Labeling lab = reference::sbh_labeling(numeric);
  c.expect(is_dna_certificate(numeric, lab), "(4,2) fixture is full");
  const Digraph pevzner = pevzner_graph(numeric, lab);
  c.expect(join(pevzner.names()) == reference::kSbhBases, "nucleotide vertex names");
  c.expect(join(pevzner_arc_labels(numeric, lab)) == reference::kSbhArcLabels, "arc labels");

  const VertexIndex start = numeric.index_of(reference::kSbhStart);
  const auto euler = eulerian_spectrum(numeric, lab, start);
  c.expect(euler && euler->sequence == reference::kSbhTargetSpectrum,
           "Eulerian spectrum " + (euler ? euler->sequence : std::string("none")));
  const auto hamilton = hamiltonian_via_line(numeric, lab, start);
  c.expect(hamilton && hamilton->sequence == reference::kSbhTargetSpectrum,
           "Hamiltonian spectrum " + (hamilton ? hamilton->sequence : std::string("none")));
  if (hamilton) {
    const auto arc_labels = pevzner_arc_labels(numeric, lab);
    std::vector<std::string> order;
    for (VertexIndex v : hamilton->source_path) order.push_back(arc_labels[v]);
    c.expect(join(order) == reference::kSbhHamiltonianOrder, "Hamiltonian order " + join(order));
    c.expect(std::set<VertexIndex>(hamilton->source_path.begin(), hamilton->source_path.end())
                     .size() == line_digraph(numeric).vertex_count(),
             "Hamiltonian path repeats a vertex");
  }

  const Digraph lysov = reference::sbh_line_digraph();
  c.expect(isomorphic(line_digraph(pevzner), lysov), "line digraph ~ drawn line digraph");
  // Stronger: the lifted 3-mers name the drawn vertices arc for arc.
  const LabeledDigraph lifted = lift_once(numeric, lab);
  Digraph renamed;
  for (const Label& label : lifted.labeling.labels()) renamed.add_vertex(label.str());
  for (const Arc& arc : lifted.digraph.arcs()) renamed.add_arc(arc.tail, arc.head);
  c.expect(same_structure(renamed, lysov), "lifted labels reproduce the drawn line digraph");
}

// Random simple digraph on n vertices with arc probability density.
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double density) {
  Digraph d;
  for (std::size_t v = 0; v < n; ++v) d.add_vertex("x" + std::to_string(v));
  std::bernoulli_distribution coin(density);
  for (VertexIndex a = 0; a < n; ++a) {
    for (VertexIndex b = 0; b < n; ++b) {
      if (a != b && coin(rng)) d.add_arc(a, b);
    }
  }
  return d;
}

// Random quasi-labeled digraph: distinct random k-mers as vertices, a random
// subset of the overlapping pairs as arcs (all of them when full).
inline LabeledDigraph random_quasi_labeled(std::mt19937_64& rng, bool full) {
  const std::size_t alpha = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  std::size_t space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= alpha;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(space, 12))(rng);
  std::vector<std::size_t> codes(space);
  std::iota(codes.begin(), codes.end(), 0);
  std::shuffle(codes.begin(), codes.end(), rng);
  std::vector<Label> labels;
  Digraph d;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Symbol> symbols(k);
    for (std::size_t i = k, code = codes[v]; i-- > 0; code /= alpha) {
      symbols[i] = static_cast<Symbol>(code % alpha + 1);
    }
    labels.emplace_back(std::move(symbols));
    d.add_vertex("x" + std::to_string(v));
  }
  std::bernoulli_distribution coin(0.7);
  for (VertexIndex a = 0; a < n; ++a) {
    for (VertexIndex b = 0; b < n; ++b) {
      if (a != b && labels[a].shifts_to(labels[b]) && (full || coin(rng))) d.add_arc(a, b);
    }
  }
  return {std::move(d), Labeling(alpha, k, std::move(labels))};
}

inline void structural_invariants(Check& c) {
  std::mt19937_64 rng(kPropertySeed);
  for (std::size_t i = 0; i < kPropertyCases; ++i) {
    const std::string at = "case " + std::to_string(i);
    // Line digraph counts.
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    const Digraph d = random_digraph(rng, n, density);
    const Digraph line = line_digraph(d);
    std::size_t expected_arcs = 0;
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
      expected_arcs += d.in_degree(v) * d.out_degree(v);
    }
    c.expect(line.vertex_count() == d.arc_count(), at + ": |V(L)| != |A|");
    c.expect(line.arc_count() == expected_arcs, at + ": |A(L)| != sum indeg*outdeg");

    // Lift prefix/suffix property.
    const LabeledDigraph base = random_quasi_labeled(rng, i % 4 == 0);
    c.expect(verify_quasi(base.digraph, base.labeling), at + ": generator not quasi");
    const LabeledDigraph lifted = lift_once(base.digraph, base.labeling);
    const std::size_t k = base.labeling.k();
    for (ArcIndex a = 0; a < base.digraph.arc_count(); ++a) {
      const Label& label = lifted.labeling[a];
      const Arc& arc = base.digraph.arc(a);
      c.expect(label.size() == k + 1 &&
                   std::ranges::equal(label.symbols().first(k), base.labeling[arc.tail].symbols()) &&
                   std::ranges::equal(label.symbols().last(k), base.labeling[arc.head].symbols()),
               at + ": lifted label of arc " + std::to_string(a));
    }
    c.expect(verify_full(lifted.digraph, lifted.labeling), at + ": lift not full");

    // Alphabet permutation invariance, on the valid labeling and on a
    // labeling of the random digraph that is usually invalid.
    const std::size_t alpha = base.labeling.alpha();
    std::vector<Symbol> perm(alpha);
    std::iota(perm.begin(), perm.end(), Symbol{1});
    std::shuffle(perm.begin(), perm.end(), rng);
    const Labeling permuted = permute_symbols(base.labeling, perm);
    c.expect(verify_quasi(base.digraph, permuted) == verify_quasi(base.digraph, base.labeling) &&
                 verify_full(base.digraph, permuted) == verify_full(base.digraph, base.labeling),
             at + ": permutation changed a verdict");
    std::vector<Label> noise;
    std::uniform_int_distribution<int> symbol(1, static_cast<int>(alpha));
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
      std::vector<Symbol> symbols(2);
      for (auto& s : symbols) s = static_cast<Symbol>(symbol(rng));
      noise.emplace_back(std::move(symbols));
    }
    const Labeling random_lab(alpha, 2, std::move(noise));
    const Labeling random_perm = permute_symbols(random_lab, perm);
    c.expect(verify_quasi(d, random_lab) == verify_quasi(d, random_perm) &&
                 verify_full(d, random_lab) == verify_full(d, random_perm) &&
                 verify_distinct(d, random_lab) == verify_distinct(d, random_perm),
             at + ": permutation changed a verdict on a random labeling");
  }
  c.note(std::to_string(kPropertyCases) + " cases, seed " + std::to_string(kPropertySeed));
}

}  // namespace detail

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(detail::Check&)> run;
};

inline const std::vector<Criterion>& criteria() {
  using namespace detail;
  static const std::vector<Criterion> all = {
      {1, "chorded-cycle table regression", 1.0, chorded_table},
      {2, "chorded-cycle lift is full", 1.0, chorded_lift},
      {3, "iterated lift of *C12 certifies DNA", 5.0, chorded_iterated},
      {4, "even infinity sweep", 10.0, [](Check& c) { infinity_sweep(c, {4, 6, 8, 10}, true); }},
      {5, "odd infinity sweep", 10.0, [](Check& c) { infinity_sweep(c, {5, 7, 9}, false); }},
      {6, "C3.Cp labelings and lifts", 5.0, infinity_c3},
      {7, "double cycle", 5.0, double_cycle},
      {8, "windmills and propellers", 10.0, bouquets},
      {9, "C4.C5 lift chain", 1.0, infinity_chain},
      {10, "L(C4.C4) is the ladder", 1.0, ladder_isomorphism},
      {11, "ladder fixtures and conjecture rows", 60.0, ladders},
      {12, "*C15 negative bound and middle-vertex lemma", 60.0, negative_bound},
      {13, "oracle agrees with constructions", 120.0, oracle_agreement},
      {14, "sequencing pipeline", 1.0, sequencing_pipeline},
      {15, "structural invariants", 30.0, structural_invariants},
  };
  return all;
}

inline CriterionResult run_criterion(const Criterion& criterion) {
  CriterionResult result{criterion.id, criterion.title, false, {}, 0.0, criterion.limit_seconds};
  detail::Check check;
  const auto begin = std::chrono::steady_clock::now();
  try {
    criterion.run(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  const bool in_time = result.seconds <= criterion.limit_seconds;
  result.pass = check.ok() && in_time;
  if (!check.ok()) {
    result.detail = "first failure: " + check.failure();
  } else if (!in_time) {
    result.detail = "over time limit";
  }
  if (!check.notes().empty()) {
    result.detail += (result.detail.empty() ? "" : "; ") + check.notes();
  }
  return result;
}

inline std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> results;
  for (const auto& criterion : criteria()) results.push_back(run_criterion(criterion));
  return results;
}

inline std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3fs/%.0fs", r.seconds, r.limit_seconds);
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title
      << "  [" << timing << "]";
  if (!r.detail.empty()) out << "  " << r.detail;
  return out.str();
}

}  // namespace dnagraph::acceptance

#endif  // DNAGRAPH_ACCEPTANCE_HPP_
