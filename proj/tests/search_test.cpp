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

#include "dnagraph/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "dnagraph/constructions.hpp"
#include "dnagraph/families.hpp"
#include "dnagraph/reference.hpp"
#include "test_support.hpp"

namespace dnagraph {
namespace {

using testing_support::Cycle;
using testing_support::KindOf;
using testing_support::Lab;

SearchConfig Config(std::size_t alpha, std::size_t k, SearchMode mode) {
  SearchConfig cfg;
  cfg.alpha = alpha;
  cfg.k = k;
  cfg.mode = mode;
  return cfg;
}

// Number of quasi-labelings of *C_n up to alphabet permutation, counted from
// cyclic words: a quasi-labeled dicycle is the set of windows of a cyclic
// word, canonicalised by first occurrence of each symbol.
std::size_t ChordedOrbits(std::size_t n, std::size_t alpha, std::size_t k) {
  const Digraph d = make_chorded_cycle(n);
  std::set<std::vector<std::string>> orbits;
  std::vector<int> word(n, 1);
  while (true) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) labels[i] += static_cast<char>('0' + word[(i + j) % n]);
    }
    if (testing_support::OracleQuasi(d, labels, alpha)) {
      std::map<char, char> rename;
      for (auto& label : labels) {
        for (char& c : label) {
          if (!rename.contains(c)) rename.emplace(c, static_cast<char>('1' + rename.size()));
          c = rename[c];
        }
      }
      orbits.insert(labels);
    }
    std::size_t pos = n;
    while (pos > 0 && word[pos - 1] == static_cast<int>(alpha)) word[--pos] = 1;
    if (pos == 0) break;
    ++word[pos - 1];
  }
  return orbits.size();
}

TEST(SearchTest, ThreeCycleBinaryPairs) {
  const SearchOutcome outcome = find_labeling(Cycle(3), Config(2, 2, SearchMode::kQuasi));
  ASSERT_EQ(outcome.verdict, SearchVerdict::kSat);
  ASSERT_TRUE(outcome.certificate.has_value());
  EXPECT_TRUE(verify_quasi(Cycle(3), *outcome.certificate));
  EXPECT_GT(outcome.nodes_explored, 0u);
}

TEST(SearchTest, ChordedFifteenIsUnsatisfiable) {
  for (std::size_t k : {3, 4}) {
    const SearchOutcome outcome =
        find_labeling(make_chorded_cycle(15), Config(4, k, SearchMode::kQuasi));
    EXPECT_EQ(outcome.verdict, SearchVerdict::kUnsat) << k;
    EXPECT_FALSE(outcome.certificate.has_value());
  }
  // Four chords are still fine.
  EXPECT_EQ(find_labeling(make_chorded_cycle(14), Config(4, 3, SearchMode::kQuasi)).verdict,
            SearchVerdict::kSat);
}

TEST(SearchTest, LadderFourHasFullTernaryLabeling) {
  const Digraph ladder = make_ladder(4);
  const SearchOutcome outcome = find_labeling(ladder, Config(3, 4, SearchMode::kFull));
  ASSERT_EQ(outcome.verdict, SearchVerdict::kSat);
  EXPECT_TRUE(verify_full(ladder, *outcome.certificate));
}

TEST(SearchTest, BudgetIsNeverUnsat) {
  SearchConfig cfg = Config(4, 3, SearchMode::kQuasi);
  cfg.node_budget = 5;
  const SearchOutcome outcome = find_labeling(make_chorded_cycle(15), cfg);
  EXPECT_EQ(outcome.verdict, SearchVerdict::kBudgetExceeded);
  EXPECT_EQ(outcome.nodes_explored, 5u);
  EXPECT_FALSE(outcome.certificate.has_value());
}

TEST(SearchTest, ConfigurationErrors) {
  EXPECT_EQ(KindOf([] { find_labeling(Cycle(3), Config(1, 2, SearchMode::kQuasi)); }),
            ErrorKind::kInvalidParameter);
  EXPECT_EQ(KindOf([] { find_labeling(Cycle(3), Config(2, 1, SearchMode::kQuasi)); }),
            ErrorKind::kInvalidParameter);
  SearchConfig cfg = Config(2, 2, SearchMode::kQuasi);
  cfg.node_budget = 0;
  EXPECT_EQ(KindOf([&] { find_labeling(Cycle(3), cfg); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(KindOf([] { find_labeling(Cycle(41), Config(2, 2, SearchMode::kQuasi)); }),
            ErrorKind::kResourceLimit);
}

// Verdicts against exhaustive enumeration of all assignments, in both vertex
// orders, on random tiny digraphs.
TEST(SearchTest, AgreesWithBruteForceInBothOrders) {
  std::mt19937_64 rng(5);
  std::size_t sat = 0, unsat = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Digraph d = testing_support::RandomDigraph(rng, n, 0.5);
    const SearchMode mode = trial % 2 == 0 ? SearchMode::kQuasi : SearchMode::kFull;
    const std::size_t alpha = 2;
    const std::size_t k = 2 + (trial / 2) % 2;
    const bool expected =
        testing_support::OracleExists(d, alpha, k, mode == SearchMode::kFull);
    for (VertexOrder order : {VertexOrder::kArcDepthFirst, VertexOrder::kInput}) {
      SearchConfig cfg = Config(alpha, k, mode);
      cfg.order = order;
      const SearchOutcome outcome = find_labeling(d, cfg);
      ASSERT_NE(outcome.verdict, SearchVerdict::kBudgetExceeded);
      ASSERT_EQ(outcome.verdict == SearchVerdict::kSat, expected) << trial;
    }
    (expected ? sat : unsat)++;
  }
  EXPECT_GT(sat, 20u);
  EXPECT_GT(unsat, 20u);
}

TEST(SearchTest, EnumerationCountsOrbits) {
  for (std::size_t n = 6; n <= 8; ++n) {
    const Digraph d = make_chorded_cycle(n);
    std::size_t seen = 0;
    const EnumerationResult all =
        enumerate_labelings(d, Config(4, 3, SearchMode::kQuasi), [&](const Labeling& lab) {
          EXPECT_TRUE(check_middle_vertex_lemma(d, lab));
          ++seen;
          return true;
        });
    EXPECT_TRUE(all.complete);
    EXPECT_EQ(all.solutions, seen);
    EXPECT_EQ(seen, ChordedOrbits(n, 4, 3)) << n;
  }
}

TEST(SearchTest, EnumerationLimitStopsEarly) {
  std::size_t seen = 0;
  const EnumerationResult some = enumerate_labelings(
      Cycle(4), Config(3, 2, SearchMode::kQuasi),
      [&](const Labeling&) {
        ++seen;
        return true;
      },
      3);
  EXPECT_EQ(seen, 3u);
  EXPECT_FALSE(some.complete);
}

TEST(MiddleVertexTest, TableRowAndViolation) {
  const ConstructionResult r = label_chorded_cycle(9);
  EXPECT_TRUE(check_middle_vertex_lemma(r.digraph, r.labeling));
  // Non-constant label between chord ends; the labeling is not quasi either.
  const Digraph d = make_chorded_cycle(6);
  const Labeling bad = Lab(4, {"211", "112", "121", "122", "222", "221"});
  EXPECT_FALSE(check_middle_vertex_lemma(d, bad));
  EXPECT_FALSE(verify_quasi(d, bad));
}

TEST(ConjectureTest, RowsAndReport) {
  SearchConfig cfg;
  cfg.node_budget = 1'000'000;
  const auto rows = explore_conjecture({3, 5}, cfg);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.verdict, SearchVerdict::kSat);
    EXPECT_EQ(row.alpha, 3u);
    EXPECT_EQ(row.k, 4u);
    EXPECT_TRUE(verify_full(make_ladder(row.n), *row.certificate));
  }
  const std::string report = format_conjecture_report(rows);
  EXPECT_NE(report.find("\n3 3 4 SAT " + std::to_string(rows[0].nodes) + "\n"), std::string::npos);
  EXPECT_NE(report.find("\n5 3 4 SAT "), std::string::npos);

  // A tiny budget is recorded per row and the explorer moves on.
  cfg.node_budget = 1;
  const auto starved = explore_conjecture({4}, cfg);
  ASSERT_EQ(starved.size(), 4u);
  for (const auto& row : starved) EXPECT_EQ(row.verdict, SearchVerdict::kBudgetExceeded);
}

}  // namespace
}  // namespace dnagraph
