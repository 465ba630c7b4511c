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

#ifndef DNAGRAPH_SEQUENCING_HPP_
#define DNAGRAPH_SEQUENCING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/labeling.hpp"
#include "dnagraph/line_digraph.hpp"
#include "dnagraph/verify.hpp"

namespace dnagraph {

inline constexpr std::string_view kNucleotides = "ACGT";  // symbols 1, 2, 3, 4

inline std::string to_nucleotides(const Label& label) {
  std::string bases;
  for (Symbol s : label) {
    if (s < 1 || s > kNucleotides.size()) {
      fail(ErrorKind::kInvalidInput, "symbol " + std::to_string(s) + " has no nucleotide");
    }
    bases += kNucleotides[s - 1];
  }
  return bases;
}

inline Label from_nucleotides(std::string_view bases) {
  std::vector<Symbol> symbols;
  for (char c : bases) {
    const auto pos = kNucleotides.find(c);
    if (pos == std::string_view::npos) {
      fail(ErrorKind::kInvalidInput, "'" + std::string(1, c) + "' is not a nucleotide");
    }
    symbols.push_back(static_cast<Symbol>(pos + 1));
  }
  return Label(std::move(symbols));
}

// Nucleotide string per vertex, indexed like the labeling.
inline std::vector<std::string> to_nucleotides(const Labeling& lab) {
  if (lab.alpha() > kNucleotides.size()) {
    fail(ErrorKind::kInvalidInput,
         "alphabet of size " + std::to_string(lab.alpha()) + " has no nucleotide reading");
  }
  std::vector<std::string> out;
  out.reserve(lab.size());
  for (const Label& label : lab.labels()) out.push_back(to_nucleotides(label));
  return out;
}

// (k+1)-mer per arc: the tail's k-mer followed by the head's last base.
inline std::vector<std::string> pevzner_arc_labels(const Digraph& d, const Labeling& lab) {
  if (Verdict v = check_quasi(d, lab); !v) {
    fail(ErrorKind::kInvalidInput, "arc labels need a quasi-labeling: " + v.detail);
  }
  if (lab.alpha() > kNucleotides.size()) {
    fail(ErrorKind::kInvalidInput, "alphabet larger than 4 has no nucleotide reading");
  }
  std::vector<std::string> out;
  out.reserve(d.arc_count());
  for (const Arc& arc : d.arcs()) {
    out.push_back(to_nucleotides(overlap_merge(lab[arc.tail], lab[arc.head])));
  }
  return out;
}

// Same structure as d with every vertex renamed to its nucleotide string.
inline Digraph pevzner_graph(const Digraph& d, const Labeling& lab) {
  const auto bases = to_nucleotides(lab);
  Digraph out;
  for (const auto& name : bases) out.add_vertex(name);
  for (const Arc& arc : d.arcs()) out.add_arc(arc.tail, arc.head);
  return out;
}

namespace detail {

// Start vertex forced by the degree conditions, or nullopt when no Eulerian
// path can exist. For a balanced digraph returns kNoVertex: any vertex with
// an out-arc may start a circuit.
inline constexpr VertexIndex kNoVertex = static_cast<VertexIndex>(-1);

inline std::optional<VertexIndex> eulerian_start(const Digraph& d) {
  VertexIndex source = kNoVertex;
  VertexIndex sink = kNoVertex;
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    const auto out = static_cast<std::int64_t>(d.out_degree(v));
    const auto in = static_cast<std::int64_t>(d.in_degree(v));
    if (out == in) continue;
    if (out == in + 1 && source == kNoVertex) {
      source = v;
    } else if (in == out + 1 && sink == kNoVertex) {
      sink = v;
    } else {
      return std::nullopt;
    }
  }
  if ((source == kNoVertex) != (sink == kNoVertex)) return std::nullopt;
  return source;
}

}  // namespace detail

// Eulerian path by cycle splicing (Hierholzer), taking out-arcs in insertion
// order. The start vertex is used when it is a feasible start; otherwise the
// start forced by the degrees (or the first vertex with an out-arc) is used.
// Returns nullopt when d has no Eulerian path.
inline std::optional<std::vector<ArcIndex>> eulerian_path(
    const Digraph& d, std::optional<VertexIndex> start = std::nullopt) {
  if (d.arc_count() == 0) return std::vector<ArcIndex>{};
  const auto forced = detail::eulerian_start(d);
  if (!forced) return std::nullopt;
  VertexIndex first = *forced;
  if (first == detail::kNoVertex) {
    if (start && *start < d.vertex_count() && d.out_degree(*start) > 0) {
      first = *start;
    } else {
      for (first = 0; d.out_degree(first) == 0; ++first) {
      }
    }
  }
  std::vector<std::size_t> next(d.vertex_count(), 0);
  std::vector<ArcIndex> path;
  // Stack of (vertex, arc used to enter it).
  std::vector<std::pair<VertexIndex, ArcIndex>> stack{{first, detail::kNoVertex}};
  while (!stack.empty()) {
    const VertexIndex v = stack.back().first;
    const auto out = d.out_arcs(v);
    if (next[v] < out.size()) {
      const ArcIndex a = out[next[v]++];
      stack.emplace_back(d.arc(a).head, a);
    } else {
      if (stack.back().second != detail::kNoVertex) path.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  if (path.size() != d.arc_count()) return std::nullopt;  // arcs not connected
  return std::vector<ArcIndex>(path.rbegin(), path.rend());
}

// Number of distinct Eulerian paths (as arc sequences), counting at most cap.
// When every vertex is balanced the paths are circuits; a given start then
// restricts the count to circuits leaving it.
inline std::size_t count_eulerian_paths(const Digraph& d,
                                        std::optional<VertexIndex> start = std::nullopt,
                                        std::size_t cap = 64) {
  if (d.arc_count() == 0) return 1;
  const auto forced = detail::eulerian_start(d);
  if (!forced) return 0;
  std::vector<bool> used(d.arc_count(), false);
  std::size_t count = 0;
  auto walk = [&](auto&& self, VertexIndex v, std::size_t depth) -> void {
    if (count >= cap) return;
    if (depth == d.arc_count()) {
      ++count;
      return;
    }
    for (ArcIndex a : d.out_arcs(v)) {
      if (used[a]) continue;
      used[a] = true;
      self(self, d.arc(a).head, depth + 1);
      used[a] = false;
    }
  };
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    if (*forced != detail::kNoVertex && v != *forced) continue;
    if (*forced == detail::kNoVertex && start && v != *start) continue;
    walk(walk, v, 0);
  }
  return count;
}

struct Spectrum {
  std::string sequence;
  std::vector<VertexIndex> source_path;
};

// Overlap-concatenation of k-mers where each consecutive pair overlaps on
// k-1 bases.
inline std::string spell(const std::vector<std::string>& kmers) {
  if (kmers.empty()) return {};
  std::string out = kmers.front();
  for (std::size_t i = 1; i < kmers.size(); ++i) {
    const std::string& prev = kmers[i - 1];
    const std::string& cur = kmers[i];
    if (cur.size() != prev.size() || cur.empty() ||
        prev.compare(1, std::string::npos, cur, 0, cur.size() - 1) != 0) {
      fail(ErrorKind::kInvalidInput, prev + " and " + cur + " do not overlap");
    }
    out += cur.back();
  }
  return out;
}

// Spectrum read off the vertices of d along an Eulerian path.
inline std::optional<Spectrum> eulerian_spectrum(const Digraph& d, const Labeling& lab,
                                                 std::optional<VertexIndex> start = std::nullopt) {
  const auto path = eulerian_path(d, start);
  if (!path || path->empty()) return std::nullopt;
  const auto bases = to_nucleotides(lab);
  Spectrum spectrum;
  spectrum.source_path.push_back(d.arc(path->front()).tail);
  for (ArcIndex a : *path) spectrum.source_path.push_back(d.arc(a).head);
  std::vector<std::string> kmers;
  for (VertexIndex v : spectrum.source_path) kmers.push_back(bases[v]);
  spectrum.sequence = spell(kmers);
  return spectrum;
}

// The Eulerian path of d, read as a Hamiltonian path of L(d): vertex i of
// L(d) is arc i of d. The spectrum is spelled from the lifted (k+1)-mers.
inline std::optional<Spectrum> hamiltonian_via_line(
    const Digraph& d, const Labeling& lab, std::optional<VertexIndex> start = std::nullopt) {
  const auto path = eulerian_path(d, start);
  if (!path || path->empty()) return std::nullopt;
  const auto arc_labels = pevzner_arc_labels(d, lab);
  const Digraph line = line_digraph(d);
  Spectrum spectrum;
  std::vector<std::string> kmers;
  for (std::size_t i = 0; i < path->size(); ++i) {
    const ArcIndex a = (*path)[i];
    if (i > 0 && !line.has_arc(spectrum.source_path.back(), a)) {
      fail(ErrorKind::kInternal, "Eulerian path is not a walk in the line digraph");
    }
    spectrum.source_path.push_back(a);
    kmers.push_back(arc_labels[a]);
  }
  spectrum.sequence = spell(kmers);
  return spectrum;
}

}  // namespace dnagraph

#endif  // DNAGRAPH_SEQUENCING_HPP_
