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

#ifndef DNAGRAPH_IO_HPP_
#define DNAGRAPH_IO_HPP_

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/labeling.hpp"

namespace dnagraph {

// Plain-text digraph: "n m", then m lines "tail head", then the n vertex
// names in index order. The trailing name list is optional on input; without
// it vertices are numbered by first appearance and must not be isolated.
inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& arc : d.arcs()) out << d.name(arc.tail) << ' ' << d.name(arc.head) << '\n';
  for (const auto& name : d.names()) out << name << '\n';
}

inline Digraph read_digraph(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) fail(ErrorKind::kInvalidInput, "digraph header must be 'n m'");
  std::vector<std::pair<std::string, std::string>> arcs(m);
  for (auto& [tail, head] : arcs) {
    if (!(in >> tail >> head)) fail(ErrorKind::kInvalidInput, "digraph has fewer than m arcs");
  }
  std::vector<std::string> order;
  for (std::string name; in >> name;) order.push_back(std::move(name));
  Digraph d;
  if (!order.empty()) {
    if (order.size() != n) {
      fail(ErrorKind::kInvalidInput, "vertex list has " + std::to_string(order.size()) +
                                         " names, header says " + std::to_string(n));
    }
    for (auto& name : order) d.add_vertex(std::move(name));
  }
  for (const auto& [tail, head] : arcs) {
    if (order.empty()) {
      if (!d.find(tail)) d.add_vertex(tail);
      if (!d.find(head)) d.add_vertex(head);
    }
    d.add_arc(tail, head);
  }
  if (d.vertex_count() != n) {
    fail(ErrorKind::kInvalidInput, "digraph has " + std::to_string(d.vertex_count()) +
                                       " vertices, header says " + std::to_string(n));
  }
  return d;
}

// Labeling text: header "alpha k", then "name<TAB>s1 s2 ... sk" per vertex,
// sorted by name.
inline void write_labeling(std::ostream& out, const Digraph& d, const Labeling& lab) {
  if (lab.size() != d.vertex_count()) {
    fail(ErrorKind::kInvalidInput, "labeling does not cover the digraph");
  }
  std::vector<VertexIndex> order(d.vertex_count());
  for (VertexIndex v = 0; v < order.size(); ++v) order[v] = v;
  std::ranges::sort(order, [&](VertexIndex a, VertexIndex b) { return d.name(a) < d.name(b); });
  out << lab.alpha() << ' ' << lab.k() << '\n';
  for (VertexIndex v : order) {
    out << d.name(v) << '\t';
    for (std::size_t i = 0; i < lab.k(); ++i) {
      out << (i ? " " : "") << static_cast<unsigned>(lab[v][i]);
    }
    out << '\n';
  }
}

inline Labeling read_labeling(std::istream& in, const Digraph& d) {
  std::size_t alpha = 0;
  std::size_t k = 0;
  std::string line;
  if (!std::getline(in, line) || !(std::istringstream(line) >> alpha >> k)) {
    fail(ErrorKind::kInvalidInput, "labeling header must be 'alpha k'");
  }
  std::vector<std::optional<Label>> labels(d.vertex_count());
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::string name;
    row >> name;
    const auto v = d.find(name);
    if (!v) fail(ErrorKind::kInvalidInput, "labeling names unknown vertex '" + name + "'");
    if (labels[*v]) fail(ErrorKind::kInvalidInput, "vertex '" + name + "' labeled twice");
    std::vector<Symbol> symbols;
    for (unsigned s; row >> s;) {
      if (s == 0 || s > 255) fail(ErrorKind::kInvalidInput, "symbol out of range at " + name);
      symbols.push_back(static_cast<Symbol>(s));
    }
    if (!row.eof()) fail(ErrorKind::kInvalidInput, "bad symbol at vertex '" + name + "'");
    labels[*v] = Label(std::move(symbols));
  }
  std::vector<Label> total;
  for (VertexIndex v = 0; v < labels.size(); ++v) {
    if (!labels[v]) fail(ErrorKind::kInvalidInput, "vertex '" + d.name(v) + "' has no label");
    total.push_back(std::move(*labels[v]));
  }
  return Labeling(alpha, k, std::move(total));
}

namespace detail {

inline std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// DOT with vertices in index order. The label attribute carries the vertex
// name, plus the k-mer (or the given text per vertex) on a second line.
inline void write_dot(std::ostream& out, const Digraph& d, const Labeling* lab = nullptr,
                      const std::vector<std::string>* captions = nullptr) {
  out << "digraph G {\n";
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    std::string text = detail::dot_escape(d.name(v));
    if (captions) {
      text += "\\n" + detail::dot_escape((*captions)[v]);
    } else if (lab) {
      text += "\\n" + (*lab)[v].str();
    }
    out << "  n" << v << " [label=\"" << text << "\"];\n";
  }
  for (const Arc& arc : d.arcs()) out << "  n" << arc.tail << " -> n" << arc.head << ";\n";
  out << "}\n";
}

}  // namespace dnagraph

#endif  // DNAGRAPH_IO_HPP_
