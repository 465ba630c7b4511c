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

#ifndef DNAGRAPH_LIFT_HPP_
#define DNAGRAPH_LIFT_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/labeling.hpp"
#include "dnagraph/line_digraph.hpp"
#include "dnagraph/verify.hpp"

namespace dnagraph {

struct LabeledDigraph {
  Digraph digraph;
  Labeling labeling;
};

// Transports a quasi-(alpha,k)-labeling of D to a full (alpha,k+1)-labeling
// of L(D): the vertex of L(D) for the arc u -> v gets l(u) followed by the
// last symbol of l(v).
inline LabeledDigraph lift_once(const Digraph& d, const Labeling& lab) {
  if (Verdict v = check_quasi(d, lab); !v) {
    fail(ErrorKind::kInvalidInput, "lift needs a quasi-labeling: " + v.detail);
  }
  Digraph line = line_digraph(d);
  std::vector<Label> lifted;
  lifted.reserve(d.arc_count());
  for (const Arc& arc : d.arcs()) lifted.push_back(overlap_merge(lab[arc.tail], lab[arc.head]));
  LabeledDigraph result{std::move(line), Labeling(lab.alpha(), lab.k() + 1, std::move(lifted))};
  if (Verdict v = check_full(result.digraph, result.labeling); !v) {
    fail(ErrorKind::kInternal, "lifted labeling is not full: " + v.detail);
  }
  return result;
}

struct LiftOptions {
  bool keep_intermediates = false;
  std::size_t vertex_cap = kDefaultVertexCap;
};

struct LiftedLabeling {
  LabeledDigraph base;
  std::size_t m = 0;
  LabeledDigraph result;
  // Vertex count of L^i(D) for i = 0..m.
  std::vector<std::size_t> vertex_counts;
  // L^1(D) .. L^(m-1)(D), only with LiftOptions::keep_intermediates.
  std::vector<LabeledDigraph> intermediates;
};

// Applies lift_once m >= 1 times. Every intermediate labeling is full and
// hence quasi, so the iteration is always well defined.
inline LiftedLabeling lift_m(const Digraph& d, const Labeling& lab, std::size_t m,
                             const LiftOptions& options = {}) {
  if (m < 1) fail(ErrorKind::kInvalidParameter, "lift_m needs m >= 1");
  LiftedLabeling out{{d, lab}, m, {d, lab}, {d.vertex_count()}, {}};
  for (std::size_t step = 1; step <= m; ++step) {
    if (out.result.digraph.arc_count() > options.vertex_cap) {
      fail(ErrorKind::kResourceLimit, "L^" + std::to_string(step) + " would exceed " +
                                          std::to_string(options.vertex_cap) + " vertices");
    }
    LabeledDigraph next = lift_once(out.result.digraph, out.result.labeling);
    if (options.keep_intermediates && step < m) out.intermediates.push_back(next);
    out.vertex_counts.push_back(next.digraph.vertex_count());
    out.result = std::move(next);
  }
  return out;
}

}  // namespace dnagraph

#endif  // DNAGRAPH_LIFT_HPP_
