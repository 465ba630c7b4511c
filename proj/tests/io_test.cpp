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

#include "dnagraph/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "dnagraph/constructions.hpp"
#include "dnagraph/families.hpp"
#include "test_support.hpp"

namespace dnagraph {
namespace {

using testing_support::KindOf;

TEST(DigraphFormatTest, RoundTripKeepsOrder) {
  const Digraph d = make_propeller3(4, 5, 6);
  std::stringstream text;
  write_digraph(text, d);
  EXPECT_TRUE(read_digraph(text) == d);
}

TEST(DigraphFormatTest, MinimalFormWithoutNames) {
  std::istringstream in("3 3\na b\nb c\nc a\n");
  const Digraph d = read_digraph(in);
  EXPECT_TRUE(std::ranges::equal(d.names(), std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(d.has_arc(2, 0));
}

TEST(DigraphFormatTest, IsolatedVerticesNeedTheNameList) {
  Digraph d;
  d.add_vertex("lonely");
  std::stringstream text;
  write_digraph(text, d);
  EXPECT_EQ(text.str(), "1 0\nlonely\n");
  EXPECT_TRUE(read_digraph(text) == d);
  std::istringstream missing("1 0\n");
  EXPECT_EQ(KindOf([&] { read_digraph(missing); }), ErrorKind::kInvalidInput);
}

TEST(DigraphFormatTest, Malformed) {
  std::istringstream header("x y\n");
  EXPECT_EQ(KindOf([&] { read_digraph(header); }), ErrorKind::kInvalidInput);
  std::istringstream short_arcs("2 2\na b\n");
  EXPECT_EQ(KindOf([&] { read_digraph(short_arcs); }), ErrorKind::kInvalidInput);
  std::istringstream wrong_count("2 1\na b\na\n");
  EXPECT_EQ(KindOf([&] { read_digraph(wrong_count); }), ErrorKind::kInvalidInput);
}

TEST(LabelingFormatTest, RoundTripSortedByName) {
  const ConstructionResult r = label_chorded_cycle(10);
  std::stringstream text;
  write_labeling(text, r.digraph, r.labeling);
  const std::string written = text.str();
  EXPECT_EQ(written.substr(0, 4), "4 3\n");
  EXPECT_NE(written.find("v1\t2 1 1\nv10\t3 2 1\nv2\t1 1 1\n"), std::string::npos);
  EXPECT_TRUE(read_labeling(text, r.digraph) == r.labeling);
}

TEST(LabelingFormatTest, Malformed) {
  const Digraph d = make_dicycle(2);
  std::istringstream unknown("2 2\nv1\t1 2\nv9\t2 1\n");
  EXPECT_EQ(KindOf([&] { read_labeling(unknown, d); }), ErrorKind::kInvalidInput);
  std::istringstream partial("2 2\nv1\t1 2\n");
  EXPECT_EQ(KindOf([&] { read_labeling(partial, d); }), ErrorKind::kInvalidInput);
  std::istringstream twice("2 2\nv1\t1 2\nv1\t2 1\n");
  EXPECT_EQ(KindOf([&] { read_labeling(twice, d); }), ErrorKind::kInvalidInput);
  std::istringstream junk("2 2\nv1\t1 x\nv2\t2 1\n");
  EXPECT_EQ(KindOf([&] { read_labeling(junk, d); }), ErrorKind::kInvalidInput);
  std::istringstream bounds("2 2\nv1\t1 3\nv2\t2 1\n");
  EXPECT_EQ(KindOf([&] { read_labeling(bounds, d); }), ErrorKind::kInvalidInput);
}

TEST(DotTest, DeterministicWithLabels) {
  const ConstructionResult r = label_double_cycle(3);
  std::ostringstream a, b;
  write_dot(a, r.digraph, &r.labeling);
  write_dot(b, r.digraph, &r.labeling);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("n0 [label=\"v1\\n11\"];"), std::string::npos);
  EXPECT_NE(a.str().find("n0 -> n1;"), std::string::npos);
}

}  // namespace
}  // namespace dnagraph
