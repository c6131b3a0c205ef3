// Copyright 2026 The bgroid Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgroid/algebra.hpp"

namespace bgroid {

/**
 * A total multiplication table on a finite set of element ids.
 *
 * Element ids are arbitrary positive integers (for an isotropy group they
 * are ids of the ambient groupoid). `mul` is stored by position: the
 * product of elements()[a] and elements()[b] is elements()[mul[a*k + b]].
 */
class GroupTable {
 public:
  GroupTable() = default;

  /// `products[a][b]` holds the element id of elements[a] * elements[b].
  GroupTable(std::vector<Element> elements, Element unit,
             const std::vector<std::vector<Element>>& products)
      : elements_(std::move(elements)), unit_(unit) {
    const std::size_t k = elements_.size();
    if (k == 0) throw std::invalid_argument("group table must be nonempty");
    if (products.size() != k) {
      throw std::invalid_argument("group table needs one row per element");
    }
    mul_.assign(k * k, 0);
    for (std::size_t a = 0; a < k; ++a) {
      if (products[a].size() != k) {
        throw std::invalid_argument("group table rows must be square");
      }
      for (std::size_t b = 0; b < k; ++b) {
        const auto pos = position(products[a][b]);
        if (!pos) {
          throw std::invalid_argument(
              "group table is not closed: product " +
              std::to_string(products[a][b]) + " is not an element");
        }
        mul_[a * k + b] = *pos;
      }
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<Element>& elements() const noexcept {
    return elements_;
  }
  [[nodiscard]] Element unit() const noexcept { return unit_; }

  [[nodiscard]] std::optional<std::size_t> position(Element x) const {
    const auto it = std::find(elements_.begin(), elements_.end(), x);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  /// Product by position.
  [[nodiscard]] std::size_t mul_pos(std::size_t a, std::size_t b) const {
    return mul_[a * size() + b];
  }

  /// Product by element id; throws std::out_of_range for foreign ids.
  [[nodiscard]] Element multiply(Element x, Element y) const {
    const auto a = position(x), b = position(y);
    if (!a || !b) throw std::out_of_range("element not in group table");
    return elements_[mul_pos(*a, *b)];
  }

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  std::vector<Element> elements_;
  Element unit_ = kUndefined;
  std::vector<std::size_t> mul_;
};

/// Returns the name of the first failed axiom ("identity", "inverse",
/// "associativity"), or nullopt for a group. Closure holds by construction.
inline std::optional<std::string> check_group_axioms(const GroupTable& g) {
  const std::size_t k = g.size();
  const auto e = g.position(g.unit());
  if (!e) return "identity";
  for (std::size_t a = 0; a < k; ++a) {
    if (g.mul_pos(*e, a) != a || g.mul_pos(a, *e) != a) return "identity";
  }
  for (std::size_t a = 0; a < k; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < k && !found; ++b) {
      found = g.mul_pos(a, b) == *e && g.mul_pos(b, a) == *e;
    }
    if (!found) return "inverse";
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t ab = g.mul_pos(a, b);
      for (std::size_t c = 0; c < k; ++c) {
        if (g.mul_pos(ab, c) != g.mul_pos(a, g.mul_pos(b, c))) {
          return "associativity";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace bgroid
