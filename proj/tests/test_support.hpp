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

#ifndef DNAGRAPH_TESTS_TEST_SUPPORT_HPP_
#define DNAGRAPH_TESTS_TEST_SUPPORT_HPP_

// Test-only helpers: error-kind capture and brute-force oracles that share
// no code with the library paths they check.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dnagraph/digraph.hpp"
#include "dnagraph/error.hpp"
#include "dnagraph/labeling.hpp"

namespace dnagraph::testing_support {

inline ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInternal;
}

inline std::vector<Label> Labels(std::initializer_list<const char*> texts) {
  std::vector<Label> out;
  for (const char* text : texts) out.push_back(Label::parse(text));
  return out;
}

inline Labeling Lab(std::size_t alpha, std::initializer_list<const char*> texts) {
  std::vector<Label> labels = Labels(texts);
  const std::size_t k = labels.front().size();
  return Labeling(alpha, k, std::move(labels));
}

inline Digraph Cycle(std::size_t n) {
  Digraph d;
  for (std::size_t i = 0; i < n; ++i) d.add_vertex("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

inline Digraph RandomDigraph(std::mt19937_64& rng, std::size_t n, double density) {
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

// Vertex names permuted by perm; arcs follow.
inline Digraph Relabel(const Digraph& d, const std::vector<std::size_t>& perm) {
  Digraph out;
  std::vector<std::string> names(d.vertex_count());
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) names[perm[v]] = d.name(v);
  for (const auto& name : names) out.add_vertex(name + "'");
  for (const Arc& arc : d.arcs()) out.add_arc(perm[arc.tail], perm[arc.head]);
  return out;
}

// Literal reading of the definitions on digit strings.
inline bool OracleQuasi(const Digraph& d, const std::vector<std::string>& labels,
                        std::size_t alpha) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (char c : labels[i]) {
      if (c < '1' || c > static_cast<char>('0' + alpha)) return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) return false;
    }
  }
  for (const Arc& arc : d.arcs()) {
    const std::string& x = labels[arc.tail];
    const std::string& y = labels[arc.head];
    if (x.substr(1) != y.substr(0, y.size() - 1)) return false;
  }
  return true;
}

inline bool OracleFull(const Digraph& d, const std::vector<std::string>& labels,
                       std::size_t alpha) {
  if (!OracleQuasi(d, labels, alpha)) return false;
  for (VertexIndex x = 0; x < labels.size(); ++x) {
    for (VertexIndex y = 0; y < labels.size(); ++y) {
      const bool overlap = labels[x].substr(1) == labels[y].substr(0, labels[y].size() - 1);
      const bool arc = x != y && d.has_arc(x, y);
      if (overlap && !arc) return false;
    }
  }
  return true;
}

inline std::vector<std::string> Strings(const Labeling& lab) {
  std::vector<std::string> out;
  for (const Label& label : lab.labels()) out.push_back(label.str());
  return out;
}

// Every assignment of alpha^k-strings to the vertices, stopping at the first
// one accepted by the oracle. Exponential; only for tiny instances.
inline bool OracleExists(const Digraph& d, std::size_t alpha, std::size_t k, bool full) {
  std::vector<std::string> all;
  std::string current(k, '1');
  while (true) {
    all.push_back(current);
    std::size_t pos = k;
    while (pos > 0 && current[pos - 1] == static_cast<char>('0' + alpha)) current[--pos] = '1';
    if (pos == 0) break;
    ++current[pos - 1];
  }
  std::vector<std::string> labels(d.vertex_count());
  std::function<bool(std::size_t)> assign = [&](std::size_t v) {
    if (v == labels.size()) {
      return full ? OracleFull(d, labels, alpha) : OracleQuasi(d, labels, alpha);
    }
    for (const auto& candidate : all) {
      labels[v] = candidate;
      if (assign(v + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

}  // namespace dnagraph::testing_support

#endif  // DNAGRAPH_TESTS_TEST_SUPPORT_HPP_
