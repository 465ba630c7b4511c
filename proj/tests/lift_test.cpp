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

#include "dnagraph/lift.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include "dnagraph/constructions.hpp"
#include "dnagraph/families.hpp"
#include "dnagraph/isomorphism.hpp"
#include "dnagraph/reference.hpp"
#include "test_support.hpp"

namespace dnagraph {
namespace {

using testing_support::Cycle;
using testing_support::KindOf;
using testing_support::Lab;

// Digraph whose vertex names are the labels, for label-level comparisons.
Digraph NamedByLabels(const Digraph& d, const Labeling& lab) {
  Digraph out;
  for (const Label& label : lab.labels()) out.add_vertex(label.str());
  for (const Arc& arc : d.arcs()) out.add_arc(arc.tail, arc.head);
  return out;
}

TEST(LiftTest, ArcLabelIsOverlapMerge) {
  const ConstructionResult r = label_infinity_even(4, 4);
  const LabeledDigraph lifted = lift_once(r.digraph, r.labeling);
  // The arc 211 -> 111 of the short cycle becomes 2111.
  const ArcIndex a = lifted.digraph.index_of("v4->v1");
  EXPECT_EQ(lifted.labeling[a].str(), "2111");
  EXPECT_EQ(lifted.labeling.k(), 4u);
  EXPECT_EQ(lifted.labeling.alpha(), r.labeling.alpha());
}

TEST(LiftTest, DoubleFourCycleLiftIsTheDrawnLadder) {
  const ConstructionResult r = label_infinity_even(4, 4);
  const LabeledDigraph lifted = lift_once(r.digraph, r.labeling);
  const Digraph ladder = make_ladder(4);
  const Labeling drawn = reference::ladder_labeling(ladder, reference::kLadder4);
  EXPECT_TRUE(same_structure(NamedByLabels(lifted.digraph, lifted.labeling),
                             NamedByLabels(ladder, drawn)));
}

TEST(LiftTest, CycleLiftsToFullCycle) {
  const LabeledDigraph lifted = lift_once(Cycle(3), Lab(2, {"11", "12", "21"}));
  EXPECT_TRUE(verify_full(lifted.digraph, lifted.labeling));
  EXPECT_TRUE(isomorphic(lifted.digraph, Cycle(3)));
}

TEST(LiftTest, RejectsNonQuasiInput) {
  EXPECT_EQ(KindOf([] { lift_once(Cycle(3), Lab(2, {"11", "22", "21"})); }),
            ErrorKind::kInvalidInput);
}

TEST(LiftTest, IterationMatchesRepeatedSingleSteps) {
  const ConstructionResult r = label_chorded_cycle(9);
  LiftOptions options;
  options.keep_intermediates = true;
  const LiftedLabeling lifted = lift_m(r.digraph, r.labeling, 3, options);
  LabeledDigraph step{r.digraph, r.labeling};
  for (std::size_t m = 1; m <= 3; ++m) {
    step = lift_once(step.digraph, step.labeling);
    const LabeledDigraph& got = m < 3 ? lifted.intermediates[m - 1] : lifted.result;
    EXPECT_TRUE(got.digraph == step.digraph);
    EXPECT_TRUE(got.labeling == step.labeling);
    EXPECT_EQ(got.labeling.k(), 3 + m);
    EXPECT_EQ(lifted.vertex_counts[m], got.digraph.vertex_count());
  }
  EXPECT_TRUE(is_dna_certificate(lifted.result.digraph, lifted.result.labeling));

  const LiftedLabeling once = lift_m(r.digraph, r.labeling, 1);
  const LabeledDigraph direct = lift_once(r.digraph, r.labeling);
  EXPECT_TRUE(once.result.labeling == direct.labeling);
  EXPECT_TRUE(once.intermediates.empty());
}

TEST(LiftTest, VertexCountIsPredecessorArcCount) {
  const ConstructionResult r = label_propeller(4, 5, 6);
  const LiftedLabeling lifted = lift_m(r.digraph, r.labeling, 3, {true, kDefaultVertexCap});
  EXPECT_EQ(lifted.vertex_counts[1], r.digraph.arc_count());
  EXPECT_EQ(lifted.vertex_counts[2], lifted.intermediates[0].digraph.arc_count());
  EXPECT_EQ(lifted.vertex_counts[3], lifted.intermediates[1].digraph.arc_count());
}

TEST(LiftTest, ErrorsOnBadParameters) {
  const ConstructionResult r = label_chorded_cycle(12);
  EXPECT_EQ(KindOf([&] { lift_m(r.digraph, r.labeling, 0); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(KindOf([&] { lift_m(r.digraph, r.labeling, 6, {false, 40}); }),
            ErrorKind::kResourceLimit);
}

}  // namespace
}  // namespace dnagraph
