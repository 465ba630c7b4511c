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

#ifndef DNAGRAPH_REFERENCE_HPP_
#define DNAGRAPH_REFERENCE_HPP_

// Published labelings used as regression fixtures. Labels are written as
// digit strings, one space between labels. Each fixture is transcribed
// independently of the constructions that should reproduce it.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/labeling.hpp"

namespace dnagraph::reference {

inline std::vector<std::string> split_labels(std::string_view row) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < row.size()) {
    const auto next = row.find(' ', pos);
    const auto end = next == std::string_view::npos ? row.size() : next;
    if (end > pos) out.emplace_back(row.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

// Labeling over d given labels by vertex name.
inline Labeling labeling_by_name(const Digraph& d, std::size_t alpha,
                                 const std::vector<std::pair<std::string, std::string>>& rows) {
  std::vector<Label> labels(d.vertex_count());
  std::size_t k = 0;
  for (const auto& [name, label] : rows) {
    labels[d.index_of(name)] = Label::parse(label);
    k = label.size();
  }
  return Labeling(alpha, k, std::move(labels));
}

// Quasi-(4,3)-labelings of the chorded dicycles, rows n = 6..14, listed
// from v1 to vn.
inline constexpr std::size_t kChordedFirstN = 6;
inline constexpr std::array<std::string_view, 9> kChordedCycleRows = {
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

// A second quasi-(4,3)-labeling of *C12 (v1..v12) and the sixteen 4-mers of
// its lift to L(*C12).
inline constexpr std::string_view kChorded12Drawn =
    "211 111 114 144 444 443 433 333 332 322 222 221";
inline constexpr std::string_view kChorded12Lifted =
    "2111 1114 1144 1444 4443 4433 4333 3332 3322 3222 2221 2211 2114 1443 4332 3221";

// Full (4,2)-labeled digraph behind the sequencing example; vertices are
// named by their labels.
inline constexpr std::string_view kSbhLabels = "41 12 23 24 31";
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kSbhArcs = {{
    {"41", "12"}, {"12", "23"}, {"12", "24"}, {"23", "31"}, {"31", "12"}, {"24", "41"},
}};
inline constexpr std::string_view kSbhBases = "TA AC CG CT GA";
// Arc labels of the nucleotide graph, in the arc order above.
inline constexpr std::string_view kSbhArcLabels = "TAC ACG ACT CGA GAC CTA";
// Arcs of its line digraph, drawn with numeric 3-mers.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 8> kSbhLineArcs = {{
    {"412", "123"}, {"412", "124"}, {"123", "231"}, {"231", "312"},
    {"312", "124"}, {"312", "123"}, {"124", "241"}, {"241", "412"},
}};
inline constexpr std::string_view kSbhStart = "41";  // the vertex TA
inline constexpr std::string_view kSbhHamiltonianOrder = "TAC ACG CGA GAC ACT CTA";
inline constexpr std::string_view kSbhTargetSpectrum = "TACGACTA";

inline Digraph sbh_digraph() {
  Digraph d;
  for (const auto& name : split_labels(kSbhLabels)) d.add_vertex(name);
  for (const auto& [tail, head] : kSbhArcs) d.add_arc(tail, head);
  return d;
}

inline Labeling sbh_labeling(const Digraph& d) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& name : d.names()) rows.emplace_back(name, name);
  return labeling_by_name(d, 4, rows);
}

inline Digraph sbh_line_digraph() {
  Digraph d;
  for (const auto& [tail, head] : kSbhLineArcs) {
    if (!d.find(tail)) d.add_vertex(std::string(tail));
    if (!d.find(head)) d.add_vertex(std::string(head));
    d.add_arc(tail, head);
  }
  return d;
}

// Quasi-(4,3)-labeling of C4 . C5 by cycle, shared vertex second in each
// cycle, then the label sets of its first and second lifts.
inline constexpr std::string_view kInfinity45Short = "111 112 121 211";
inline constexpr std::string_view kInfinity45Long = "311 112 123 233 331";
inline constexpr std::string_view kInfinity45Lift1 =
    "1112 2111 1211 1121 2331 3311 3112 1123 1233";
inline constexpr std::string_view kInfinity45Lift2 =
    "21112 12111 11211 11121 11123 31121 23311 33112 31123 11233 12331";

// Quasi-(4,4)-labelings of C6 . C8 and C6 . C7 (the latter obtained from the
// former by a single merge), long cycle only, shared vertex second.
inline constexpr std::string_view kInfinity6Short = "1111 1112 1122 1221 2211 2111";
inline constexpr std::string_view kInfinity68Long = "3111 1112 1123 1233 2333 3333 3331 3311";
inline constexpr std::string_view kInfinity67Long = "3111 1112 1123 1233 2333 3331 3311";

// Quasi-(3,3)-labeling of C4 . C4, shared vertex second in each cycle.
inline constexpr std::string_view kDouble4Short = "111 112 121 211";
inline constexpr std::string_view kDouble4Long = "311 112 123 231";

// Full (3,4)-labelings of ladders, columns left to right.
struct LadderFixture {
  std::size_t n;
  std::string_view top;
  std::string_view bottom;
};
inline constexpr LadderFixture kLadder3 = {3, "2111 1112 1123", "1211 1121 3112"};
inline constexpr LadderFixture kLadder4 = {4, "2111 1112 1123 1231", "1211 1121 3112 2311"};
inline constexpr LadderFixture kLadder5 = {5, "2131 1312 3123 1233 2333",
                                           "1213 3121 3312 2331 2233"};

inline Labeling ladder_labeling(const Digraph& ladder, const LadderFixture& fixture) {
  const auto top = split_labels(fixture.top);
  const auto bottom = split_labels(fixture.bottom);
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t c = 0; c < fixture.n; ++c) {
    rows.emplace_back("t" + std::to_string(c), top[c]);
    rows.emplace_back("b" + std::to_string(c), bottom[c]);
  }
  return labeling_by_name(ladder, 3, rows);
}

// Three-blade propellers: label sets per blade, shared vertex included.
inline constexpr std::array<std::string_view, 3> kPropeller556 = {
    "111 112 122 221 211", "112 123 233 331 311", "112 124 244 444 441 411"};
inline constexpr std::array<std::string_view, 3> kPropeller567 = {
    "1112 1122 1221 2211 2111", "1112 1123 1233 2331 3311 3111",
    "1112 1124 1244 2444 4441 4411 4111"};

// Explicit labels of C3 . C3 with alpha 3, k 2.
inline constexpr std::string_view kDouble3Short = "11 12 21";
inline constexpr std::string_view kDouble3Long = "31 12 23";

}  // namespace dnagraph::reference

#endif  // DNAGRAPH_REFERENCE_HPP_
