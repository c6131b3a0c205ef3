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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgroid/algebra.hpp"
#include "bgroid/constructions.hpp"
#include "bgroid/morphisms.hpp"
#include "bgroid/verify.hpp"

namespace bgroid {

/// Largest order accepted by the enumerators.
inline constexpr int kMaxEnumerationOrder = 6;

/// Bound on the number of tables the unpruned enumerator may visit.
inline constexpr std::uint64_t kUnprunedBudget = std::uint64_t{1} << 27;

struct ClassificationResult {
  int n = 0;
  int m = 0;
  /// Canonical forms, sorted by canonical key, pairwise non-isomorphic.
  std::vector<FiniteAlgebra> representatives;
  std::vector<CanonicalKey> keys;
  /// Name of a known construction isomorphic to each representative.
  std::vector<std::optional<std::string>> witness_names;
  /// Labeled groupoids in units-first form found by the search.
  std::uint64_t labeled_count = 0;
  /// Complete candidate algebras handed to the verification cascade.
  std::uint64_t candidates_checked = 0;
};

/**
 * First named construction isomorphic to `a`, checked in this order: nul,
 * Z2..Z6, K4, S3, {e} ⊔ Z3, Z2 ⊔ Z2, F(4;2), K4 ⊔ Z4.
 */
inline std::optional<std::string> match_named(const FiniteAlgebra& a) {
  const int n = a.order(), m = a.unit_count();
  std::vector<std::pair<std::string, std::function<FiniteAlgebra()>>> named;
  named.emplace_back("nul", [n] { return nul_groupoid(n); });
  for (int k = 2; k <= 6; ++k) {
    named.emplace_back("Z" + std::to_string(k), [k] { return from_group(cyclic_group(k)); });
  }
  named.emplace_back("K4", [] { return from_group(klein_four()); });
  named.emplace_back("S3", [] { return from_group(symmetric_s3()); });
  named.emplace_back("{e} ⊔ Z3", trivial_plus_z3);
  named.emplace_back("Z2 ⊔ Z2", z2_plus_z2);
  named.emplace_back("F(4;2)", saltus_f42);
  named.emplace_back("K4 ⊔ Z4", klein_plus_z4);
  for (const auto& [name, build] : named) {
    if (name == "nul" && n != m) continue;
    const FiniteAlgebra candidate = build();
    if (candidate.order() != n || candidate.unit_count() != m) continue;
    if (are_isomorphic(a, candidate)) return name;
  }
  return std::nullopt;
}

namespace detail {

inline void check_type_pair(int n, int m) {
  if (m < 1 || m > n || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("type (" + std::to_string(n) + ";" + std::to_string(m) +
                                ") outside 1 <= m <= n <= " +
                                std::to_string(kMaxEnumerationOrder));
  }
}

/// Collects groupoids and deduplicates them by canonical key.
class Classifier {
 public:
  Classifier(int n, int m) { result_.n = n; result_.m = m; }

  void offer(const FiniteAlgebra& a) {
    ++result_.candidates_checked;
    if (!is_groupoid(a)) return;
    ++result_.labeled_count;
    CanonicalForm c = canonical_form(a);
    classes_.try_emplace(std::move(c.key), std::move(c.algebra));
  }

  /// Records candidates rejected without building them one by one.
  void reject(std::uint64_t count) { result_.candidates_checked += count; }

  ClassificationResult finish() && {
    for (auto& [key, rep] : classes_) {
      result_.witness_names.push_back(match_named(rep));
      result_.keys.push_back(key);
      result_.representatives.push_back(std::move(rep));
    }
    return std::move(result_);
  }

 private:
  ClassificationResult result_;
  std::map<CanonicalKey, FiniteAlgebra> classes_;
};

/// Backtracking over anchors, involutive inversions and the free part of
/// the table. Every completed candidate still goes through the cascade.
class PrunedSearch {
 public:
  PrunedSearch(int n, int m) : n_(n), m_(m), work_(n, m), out_(n, m) {
    for (Element k = 1; k <= m_; ++k) {
      work_.set_u_left(k, k);
      work_.set_u_right(k, k);
      work_.set_inv(k, k);
    }
  }

  ClassificationResult run() && {
    choose_anchor(m_ + 1);
    return std::move(out_).finish();
  }

 private:
  using Mask = std::uint32_t;
  static Mask bit(Element x) { return Mask{1} << x; }

  void choose_anchor(Element x) {
    if (x > n_) {
      choose_inverse(1);
      return;
    }
    for (Element l = 1; l <= m_; ++l) {
      for (Element r = 1; r <= m_; ++r) {
        work_.set_u_left(x, l);
        work_.set_u_right(x, r);
        choose_anchor(x + 1);
      }
    }
  }

  void choose_inverse(Element x) {
    while (x <= n_ && work_.inv(x) != kUndefined) ++x;
    if (x > n_) {
      fill_table();
      return;
    }
    for (Element y = x; y <= n_; ++y) {
      if (work_.inv(y) != kUndefined) continue;
      if (work_.u_left(y) != work_.u_right(x) || work_.u_right(y) != work_.u_left(x)) continue;
      work_.set_inv(x, y);
      work_.set_inv(y, x);
      choose_inverse(x + 1);
      work_.set_inv(x, kUndefined);
      work_.set_inv(y, kUndefined);
    }
  }

  bool place(Element i, Element j, Element v) {
    const Element cur = work_.product(i, j);
    if (cur != kUndefined) return cur == v;
    if (work_.u_left(v) != work_.u_left(i) || work_.u_right(v) != work_.u_right(j)) return false;
    if ((row_[static_cast<std::size_t>(i)] & bit(v)) || (col_[static_cast<std::size_t>(j)] & bit(v))) {
      return false;
    }
    work_.set_product(i, j, v);
    row_[static_cast<std::size_t>(i)] |= bit(v);
    col_[static_cast<std::size_t>(j)] |= bit(v);
    return true;
  }

  void unplace(Element i, Element j) {
    const Element v = work_.product(i, j);
    row_[static_cast<std::size_t>(i)] &= ~bit(v);
    col_[static_cast<std::size_t>(j)] &= ~bit(v);
    work_.set_product(i, j, kUndefined);
  }

  [[nodiscard]] bool comp(Element i, Element j) const {
    return work_.u_right(i) == work_.u_left(j);
  }

  // (ab)c = a(bc) on every triple involving cell (i, j) whose four cells
  // are all known.
  [[nodiscard]] bool associative_at(Element i, Element j) const {
    const auto known_eq = [&](Element a, Element b, Element c) {
      const Element ab = work_.product(a, b), bc = work_.product(b, c);
      if (ab == kUndefined || bc == kUndefined) return true;
      const Element l = work_.product(ab, c), r = work_.product(a, bc);
      return l == kUndefined || r == kUndefined || l == r;
    };
    for (Element x = 1; x <= n_; ++x) {
      if (comp(j, x) && !known_eq(i, j, x)) return false;
      if (comp(x, i) && !known_eq(x, i, j)) return false;
      for (Element y = 1; y <= n_; ++y) {
        if (comp(x, y) && work_.product(x, y) == j && comp(i, x) && !known_eq(i, x, y)) return false;
        if (comp(x, y) && work_.product(x, y) == i && comp(y, j) && !known_eq(x, y, j)) return false;
      }
    }
    return true;
  }

  void fill_table() {
    row_.assign(static_cast<std::size_t>(n_) + 1, 0);
    col_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (Element i = 1; i <= n_; ++i) {
      for (Element j = 1; j <= n_; ++j) work_.set_product(i, j, kUndefined);
    }
    bool ok = true;
    for (Element x = 1; x <= n_ && ok; ++x) {
      ok = place(work_.u_left(x), x, x) && place(x, work_.u_right(x), x) &&
           place(x, work_.inv(x), work_.u_left(x)) && place(work_.inv(x), x, work_.u_right(x));
    }
    for (Element i = 1; i <= n_ && ok; ++i) {
      for (Element j = 1; j <= n_ && ok; ++j) {
        if (work_.product(i, j) != kUndefined) ok = associative_at(i, j);
      }
    }
    if (ok) {
      free_.clear();
      for (Element i = 1; i <= n_; ++i) {
        for (Element j = 1; j <= n_; ++j) {
          if (comp(i, j) && work_.product(i, j) == kUndefined) free_.emplace_back(i, j);
        }
      }
      fill_cell(0);
    }
  }

  void fill_cell(std::size_t k) {
    if (k == free_.size()) {
      out_.offer(work_);
      return;
    }
    const auto [i, j] = free_[k];
    for (Element v = 1; v <= n_; ++v) {
      if (!place(i, j, v)) continue;
      if (associative_at(i, j)) fill_cell(k + 1);
      unplace(i, j);
    }
  }

  int n_;
  int m_;
  FiniteAlgebra work_;
  Classifier out_;
  std::vector<Mask> row_;
  std::vector<Mask> col_;
  std::vector<std::pair<Element, Element>> free_;
};

}  // namespace detail

/**
 * All groupoids of type (n;m) up to isomorphism, by pruned backtracking.
 *
 * Pruning uses only consequences of the groupoid axioms: inversion is an
 * anchor-swapping involution, unit and inverse products are forced, a
 * product keeps the anchor of its factors, rows and columns cancel, and
 * (xy)z = x(yz) wherever all four products are already known.
 */
inline ClassificationResult enumerate_groupoids(int n, int m) {
  detail::check_type_pair(n, m);
  return detail::PrunedSearch(n, m).run();
}

/**
 * Oracle path: every assignment of anchors to non-units, every table with
 * entries in 1..n on the composable pairs, and every inversion with values
 * in 1..n, each judged only by the verification cascade. The inversion
 * loop is hoisted past the table checks that do not read it.
 * Throws std::length_error when the table count exceeds kUnprunedBudget.
 */
inline ClassificationResult enumerate_groupoids_unpruned(int n, int m) {
  detail::check_type_pair(n, m);
  FiniteAlgebra work(n, m);
  for (Element k = 1; k <= m; ++k) {
    work.set_u_left(k, k);
    work.set_u_right(k, k);
    work.set_inv(k, k);
  }
  const int free_count = n - m;
  const auto pow_u64 = [](std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
  };
  const std::uint64_t anchor_count = pow_u64(static_cast<std::uint64_t>(m * m), free_count);
  const std::uint64_t inv_count = pow_u64(static_cast<std::uint64_t>(n), free_count);

  // Decodes anchor assignment `code` into work.
  const auto set_anchors = [&](std::uint64_t code) {
    for (Element x = m + 1; x <= n; ++x) {
      const auto pair = static_cast<int>(code % static_cast<std::uint64_t>(m * m));
      code /= static_cast<std::uint64_t>(m * m);
      work.set_u_left(x, pair / m + 1);
      work.set_u_right(x, pair % m + 1);
    }
  };
  const auto composable_cells = [&] {
    std::vector<std::pair<Element, Element>> cells;
    for (Element i = 1; i <= n; ++i) {
      for (Element j = 1; j <= n; ++j) {
        if (work.u_right(i) == work.u_left(j)) cells.emplace_back(i, j);
      }
    }
    return cells;
  };

  std::uint64_t total = 0;
  for (std::uint64_t code = 0; code < anchor_count; ++code) {
    set_anchors(code);
    const auto cells = composable_cells();
    if (cells.size() * 3 > 63) throw std::length_error("unpruned enumeration too large");
    total += pow_u64(static_cast<std::uint64_t>(n), static_cast<int>(cells.size()));
    if (total > kUnprunedBudget) {
      throw std::length_error("unpruned enumeration of type (" + std::to_string(n) + ";" +
                              std::to_string(m) + ") exceeds the work budget");
    }
  }

  detail::Classifier out(n, m);
  for (std::uint64_t code = 0; code < anchor_count; ++code) {
    set_anchors(code);
    const auto cells = composable_cells();
    for (Element i = 1; i <= n; ++i) {
      for (Element j = 1; j <= n; ++j) work.set_product(i, j, kUndefined);
    }
    for (const auto& [i, j] : cells) work.set_product(i, j, 1);
    while (true) {
      // A placeholder inversion (identity) lets the inversion-independent
      // stages run once per table instead of once per (table, inversion).
      for (Element x = m + 1; x <= n; ++x) work.set_inv(x, x);
      const bool table_ok = !validate_structure(work) && !check_associativity(work) &&
                            !check_identities(work);
      if (!table_ok) {
        out.reject(inv_count);
      } else {
        for (std::uint64_t ic = 0; ic < inv_count; ++ic) {
          std::uint64_t c = ic;
          for (Element x = m + 1; x <= n; ++x) {
            work.set_inv(x, static_cast<Element>(c % static_cast<std::uint64_t>(n)) + 1);
            c /= static_cast<std::uint64_t>(n);
          }
          out.offer(work);
        }
      }
      // Odometer over table entries.
      std::size_t k = 0;
      for (; k < cells.size(); ++k) {
        const auto [i, j] = cells[k];
        if (work.product(i, j) < n) {
          work.set_product(i, j, work.product(i, j) + 1);
          break;
        }
        work.set_product(i, j, 1);
      }
      if (k == cells.size()) break;
    }
  }
  return std::move(out).finish();
}

}  // namespace bgroid
