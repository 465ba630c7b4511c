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

#include "dnagraph/line_digraph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dnagraph/families.hpp"
#include "dnagraph/isomorphism.hpp"
#include "test_support.hpp"

namespace dnagraph {
namespace {

using testing_support::KindOf;
using testing_support::RandomDigraph;

TEST(LineDigraphTest, WalkNames) {
  EXPECT_EQ(last_step("v1->v2->v3"), "v3");
  EXPECT_EQ(last_step("v1"), "v1");
  EXPECT_EQ(walk_name("v1->v2", "v2->v3"), "v1->v2->v3");
  const Digraph l2 = iterated_line_digraph(make_dicycle(3), 2);
  EXPECT_EQ(l2.name(0), "v1->v2->v3");
}

TEST(LineDigraphTest, DicycleIsSelfAdjoint) {
  for (std::size_t n = 2; n <= 6; ++n) {
    EXPECT_TRUE(isomorphic(line_digraph(make_dicycle(n)), make_dicycle(n)));
  }
}

TEST(LineDigraphTest, CountsOnRandomDigraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = RandomDigraph(rng, 1 + trial % 9, 0.35);
    const Digraph line = line_digraph(d);
    std::size_t expected = 0;
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) expected += d.in_degree(v) * d.out_degree(v);
    ASSERT_EQ(line.vertex_count(), d.arc_count());
    ASSERT_EQ(line.arc_count(), expected);
    // Arc x -> y of L(D) exactly when head(x) = tail(y).
    for (ArcIndex x = 0; x < d.arc_count(); ++x) {
      for (ArcIndex y = 0; y < d.arc_count(); ++y) {
        ASSERT_EQ(line.has_arc(x, y), x != y && d.arc(x).head == d.arc(y).tail);
      }
    }
  }
}

TEST(LineDigraphTest, IterationComposes) {
  const Digraph base = make_chorded_cycle(7);
  Digraph step = base;
  for (std::size_t m = 1; m <= 3; ++m) {
    step = line_digraph(step);
    EXPECT_TRUE(iterated_line_digraph(base, m) == step) << m;
  }
  EXPECT_TRUE(iterated_line_digraph(base, 0) == base);
}

TEST(LineDigraphTest, CapRaisesResourceLimit) {
  EXPECT_EQ(KindOf([] { iterated_line_digraph(make_chorded_cycle(12), 5, 30); }),
            ErrorKind::kResourceLimit);
}

}  // namespace
}  // namespace dnagraph
