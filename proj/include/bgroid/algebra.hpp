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

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bgroid {

/// Elements are numbered 1..n; 0 is the "unassigned / undefined" sentinel.
using Element = int;

inline constexpr Element kUndefined = 0;

/// Largest order the data model accepts.
inline constexpr int kMaxOrder = 200;

/**
 * The complete structure-table record of a finite universal algebra
 * (G, alpha, beta, mu, iota; G0) with |G| = n and |G0| = m.
 *
 * Units are exactly the elements 1..m. Field values are stored as given;
 * nothing beyond the shape (n, m and array sizes) is enforced here. Use
 * validate_structure() / classify_structure() to judge well-formedness.
 */
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;

  /// All structure maps and table entries start at kUndefined.
  FiniteAlgebra(int n, int m) : n_(n), m_(m) {
    if (n < 1 || n > kMaxOrder) {
      throw std::invalid_argument("order n must be in 1.." +
                                  std::to_string(kMaxOrder) + ", got " +
                                  std::to_string(n));
    }
    if (m < 1 || m > n) {
      throw std::invalid_argument("unit count m must be in 1..n, got m = " +
                                  std::to_string(m) + ", n = " +
                                  std::to_string(n));
    }
    const auto size = static_cast<std::size_t>(n);
    u_left_.assign(size, kUndefined);
    u_right_.assign(size, kUndefined);
    inv_.assign(size, kUndefined);
    table_.assign(size * size, kUndefined);
  }

  /// Builds from explicit rows; `table` is given row by row.
  FiniteAlgebra(int n, int m, std::vector<Element> u_left,
                std::vector<Element> u_right, std::vector<Element> inv,
                const std::vector<std::vector<Element>>& table)
      : FiniteAlgebra(n, m) {
    const auto size = static_cast<std::size_t>(n);
    if (u_left.size() != size || u_right.size() != size || inv.size() != size ||
        table.size() != size) {
      throw std::invalid_argument("structure rows must have length n");
    }
    u_left_ = std::move(u_left);
    u_right_ = std::move(u_right);
    inv_ = std::move(inv);
    for (std::size_t r = 0; r < size; ++r) {
      if (table[r].size() != size) {
        throw std::invalid_argument("table row " + std::to_string(r + 1) +
                                    " must have length n");
      }
      for (std::size_t c = 0; c < size; ++c) table_[r * size + c] = table[r][c];
    }
  }

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] int unit_count() const noexcept { return m_; }

  [[nodiscard]] bool contains(Element x) const noexcept {
    return x >= 1 && x <= n_;
  }
  [[nodiscard]] bool is_unit(Element x) const noexcept {
    return x >= 1 && x <= m_;
  }

  // Unchecked 1-based accessors. Callers are expected to stay in 1..n.
  [[nodiscard]] Element u_left(Element i) const { return u_left_[idx(i)]; }
  [[nodiscard]] Element u_right(Element i) const { return u_right_[idx(i)]; }
  [[nodiscard]] Element inv(Element i) const { return inv_[idx(i)]; }
  [[nodiscard]] Element product(Element i, Element j) const {
    return table_[cell(i, j)];
  }

  void set_u_left(Element i, Element v) { u_left_[idx(i)] = v; }
  void set_u_right(Element i, Element v) { u_right_[idx(i)] = v; }
  void set_inv(Element i, Element v) { inv_[idx(i)] = v; }
  void set_product(Element i, Element j, Element v) { table_[cell(i, j)] = v; }

  [[nodiscard]] const std::vector<Element>& u_left_row() const noexcept {
    return u_left_;
  }
  [[nodiscard]] const std::vector<Element>& u_right_row() const noexcept {
    return u_right_;
  }
  [[nodiscard]] const std::vector<Element>& inv_row() const noexcept {
    return inv_;
  }
  /// Row-major n*n table.
  [[nodiscard]] const std::vector<Element>& table_data() const noexcept {
    return table_;
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  [[nodiscard]] std::size_t idx(Element i) const {
    return static_cast<std::size_t>(i - 1);
  }
  [[nodiscard]] std::size_t cell(Element i, Element j) const {
    return idx(i) * static_cast<std::size_t>(n_) + idx(j);
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<Element> u_left_;
  std::vector<Element> u_right_;
  std::vector<Element> inv_;
  std::vector<Element> table_;
};

inline void require_element(const FiniteAlgebra& a, Element x) {
  if (!a.contains(x)) {
    throw std::out_of_range("element " + std::to_string(x) +
                            " outside 1.." + std::to_string(a.order()));
  }
}

inline void require_unit(const FiniteAlgebra& a, Element u) {
  if (!a.is_unit(u)) {
    throw std::out_of_range("unit " + std::to_string(u) + " outside 1.." +
                            std::to_string(a.unit_count()));
  }
}

/// (i, j) lies in G(2), i.e. beta(i) = alpha(j).
inline bool composable(const FiniteAlgebra& a, Element i, Element j) {
  require_element(a, i);
  require_element(a, j);
  return a.u_right(i) == a.u_left(j);
}

}  // namespace bgroid
