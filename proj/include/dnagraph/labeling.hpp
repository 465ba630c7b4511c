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

#ifndef DNAGRAPH_LABELING_HPP_
#define DNAGRAPH_LABELING_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnagraph/error.hpp"

namespace dnagraph {

using Symbol = std::uint8_t;

// A k-mer over the alphabet {1..alpha}.
class Label {
 public:
  Label() = default;
  explicit Label(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Label(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  // "112" -> (1,1,2). Only single-digit symbols.
  static Label parse(std::string_view digits) {
    std::vector<Symbol> symbols;
    for (char c : digits) {
      if (c < '1' || c > '9') {
        fail(ErrorKind::kInvalidInput, "bad label '" + std::string(digits) + "'");
      }
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return Label(std::move(symbols));
  }

  // Concatenation of (symbol, count) runs; zero-length runs contribute nothing.
  static Label runs(std::initializer_list<std::pair<int, long>> runs) {
    std::vector<Symbol> symbols;
    for (const auto& [symbol, count] : runs) {
      if (count < 0) {
        fail(ErrorKind::kConstructionFailure, "negative run length in label formula");
      }
      symbols.insert(symbols.end(), static_cast<std::size_t>(count),
                     static_cast<Symbol>(symbol));
    }
    return Label(std::move(symbols));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  std::span<const Symbol> prefix() const {
    return std::span<const Symbol>(symbols_).first(symbols_.size() - 1);
  }
  std::span<const Symbol> suffix() const {
    return std::span<const Symbol>(symbols_).last(symbols_.size() - 1);
  }

  // True when the (k-1)-suffix of this label is the (k-1)-prefix of next.
  bool shifts_to(const Label& next) const {
    return size() == next.size() && !symbols_.empty() &&
           std::ranges::equal(suffix(), next.prefix());
  }

  bool is_constant() const {
    return std::ranges::adjacent_find(symbols_, std::not_equal_to<>{}) == symbols_.end();
  }

  Symbol max_symbol() const {
    return symbols_.empty() ? Symbol{0} : *std::ranges::max_element(symbols_);
  }

  // Compact text: "112" when every symbol is a digit, "1.10.2" otherwise.
  std::string str() const {
    const bool digits = std::ranges::all_of(symbols_, [](Symbol s) { return s <= 9; });
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (!digits && i > 0) out += '.';
      out += std::to_string(symbols_[i]);
    }
    return out;
  }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// Overlap-merge of two labels with tail.shifts_to(head): the (k+1)-mer
// tail_1 .. tail_k head_k.
inline Label overlap_merge(const Label& tail, const Label& head) {
  if (!tail.shifts_to(head)) {
    fail(ErrorKind::kInvalidInput, "labels " + tail.str() + " and " + head.str() +
                                       " do not overlap");
  }
  std::vector<Symbol> merged(tail.begin(), tail.end());
  merged.push_back(head[head.size() - 1]);
  return Label(std::move(merged));
}

// Byte string usable as a hash key for a symbol sequence.
inline std::string symbol_key(std::span<const Symbol> symbols) {
  return std::string(symbols.begin(), symbols.end());
}

// Vertex labels for one digraph, indexed by VertexIndex, together with the
// declared alphabet size. alpha is declared rather than inferred because a
// labeling that happens to use three symbols may still be a (4,k)-labeling.
class Labeling {
 public:
  Labeling(std::size_t alpha, std::size_t k, std::vector<Label> labels)
      : alpha_(alpha), k_(k), labels_(std::move(labels)) {
    if (alpha_ < 1) fail(ErrorKind::kInvalidInput, "alpha must be positive");
    if (k_ < 2) fail(ErrorKind::kInvalidInput, "label length k must exceed 1");
    for (const Label& label : labels_) {
      if (label.size() != k_) {
        fail(ErrorKind::kInvalidInput, "label " + label.str() + " has length " +
                                           std::to_string(label.size()) + ", expected " +
                                           std::to_string(k_));
      }
      for (Symbol s : label) {
        if (s < 1 || s > alpha_) {
          fail(ErrorKind::kInvalidInput, "label " + label.str() + " leaves {1.." +
                                             std::to_string(alpha_) + "}");
        }
      }
    }
  }

  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const Label& operator[](std::size_t v) const { return labels_.at(v); }
  std::span<const Label> labels() const noexcept { return labels_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::size_t alpha_;
  std::size_t k_;
  std::vector<Label> labels_;
};

// Convenience for fixtures: labels given as digit strings, in vertex order.
inline Labeling labeling_from_strings(std::size_t alpha,
                                      std::initializer_list<std::string_view> labels) {
  std::vector<Label> parsed;
  for (auto text : labels) parsed.push_back(Label::parse(text));
  const std::size_t k = parsed.empty() ? 2 : parsed.front().size();
  return Labeling(alpha, k, std::move(parsed));
}

// Applies a permutation of {1..alpha} (perm[s-1] is the image of s) to
// every label.
inline Labeling permute_symbols(const Labeling& lab, std::span<const Symbol> perm) {
  if (perm.size() != lab.alpha()) {
    fail(ErrorKind::kInvalidInput, "permutation size differs from alpha");
  }
  std::vector<Label> out;
  for (const Label& label : lab.labels()) {
    std::vector<Symbol> symbols;
    for (Symbol s : label) symbols.push_back(perm[s - 1]);
    out.emplace_back(std::move(symbols));
  }
  return Labeling(lab.alpha(), lab.k(), std::move(out));
}

}  // namespace dnagraph

#endif  // DNAGRAPH_LABELING_HPP_
