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

#include "dnagraph/isomorphism.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dnagraph/families.hpp"
#include "dnagraph/line_digraph.hpp"
#include "test_support.hpp"

namespace dnagraph {
namespace {

using testing_support::KindOf;
using testing_support::RandomDigraph;
using testing_support::Relabel;

bool IsMapping(const Digraph& a, const Digraph& b, const std::vector<VertexIndex>& map) {
  if (map.size() != a.vertex_count() || a.arc_count() != b.arc_count()) return false;
  for (const Arc& arc : a.arcs()) {
    if (!b.has_arc(map[arc.tail], map[arc.head])) return false;
  }
  return true;
}

TEST(IsomorphismTest, CycleAndItsReverse) {
  const Digraph c4 = make_dicycle(4);
  EXPECT_TRUE(isomorphic(c4, reversed(c4)));
  EXPECT_TRUE(isomorphic(c4, c4));
}

TEST(IsomorphismTest, LineOfDoubleFourCycleIsLadder) {
  const Digraph line = line_digraph(make_infinity(4, 4));
  const auto map = find_isomorphism(line, make_ladder(4));
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(IsMapping(line, make_ladder(4), *map));
}

TEST(IsomorphismTest, SameDegreesButDifferent) {
  // Two disjoint 3-cycles against a 6-cycle.
  Digraph two;
  for (int i = 0; i < 6; ++i) two.add_vertex("x" + std::to_string(i));
  for (int i = 0; i < 3; ++i) {
    two.add_arc(i, (i + 1) % 3);
    two.add_arc(3 + i, 3 + (i + 1) % 3);
  }
  EXPECT_EQ(detail::degree_sequence(two), detail::degree_sequence(make_dicycle(6)));
  EXPECT_FALSE(isomorphic(two, make_dicycle(6)));
  // Orientation matters: a path against its reverse with an extra arc.
  EXPECT_FALSE(isomorphic(make_ladder(3), make_dipath(6)));
}

TEST(IsomorphismTest, InvariantUnderRenaming) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Digraph d = RandomDigraph(rng, n, 0.4);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Digraph r = Relabel(d, perm);
    const auto map = find_isomorphism(d, r);
    ASSERT_TRUE(map.has_value()) << trial;
    ASSERT_TRUE(IsMapping(d, r, *map));
    ASSERT_TRUE(isomorphic(r, d));  // symmetric
  }
}

TEST(IsomorphismTest, CapIsEnforced) {
  EXPECT_EQ(KindOf([] { isomorphic(make_dicycle(20), make_dicycle(20)); }),
            ErrorKind::kResourceLimit);
  EXPECT_TRUE(isomorphic(make_dicycle(20), make_dicycle(20), 20));
}

}  // namespace
}  // namespace dnagraph
