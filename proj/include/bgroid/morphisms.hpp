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
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgroid/algebra.hpp"
#include "bgroid/constructions.hpp"
#include "bgroid/group_table.hpp"

namespace bgroid {

/// A permutation of 1..n; forward()[i - 1] is the image of i.
class Bijection {
 public:
  Bijection() = default;

  explicit Bijection(std::vector<Element> forward) : forward_(std::move(forward)) {
    const auto n = static_cast<Element>(forward_.size());
    std::vector<bool> seen(forward_.size() + 1, false);
    for (Element y : forward_) {
      if (y < 1 || y > n || seen[static_cast<std::size_t>(y)]) {
        throw std::invalid_argument("not a permutation of 1..n");
      }
      seen[static_cast<std::size_t>(y)] = true;
    }
  }

  static Bijection identity(int n) {
    std::vector<Element> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 1);
    return Bijection(std::move(f));
  }

  [[nodiscard]] int size() const noexcept { return static_cast<int>(forward_.size()); }
  [[nodiscard]] const std::vector<Element>& forward() const noexcept { return forward_; }
  [[nodiscard]] Element operator()(Element x) const {
    return forward_.at(static_cast<std::size_t>(x - 1));
  }

  [[nodiscard]] Bijection inverse() const {
    std::vector<Element> inv(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i) {
      inv[static_cast<std::size_t>(forward_[i] - 1)] = static_cast<Element>(i + 1);
    }
    return Bijection(std::move(inv));
  }

  /// x -> outer(inner(x)).
  friend Bijection compose(const Bijection& outer, const Bijection& inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("size mismatch");
    std::vector<Element> f;
    f.reserve(inner.forward_.size());
    for (Element y : inner.forward_) f.push_back(outer(y));
    return Bijection(std::move(f));
  }

  friend bool operator==(const Bijection&, const Bijection&) = default;

 private:
  std::vector<Element> forward_;
};

/// The copy of `a` whose element f(x) plays the role of x. The result is in
/// units-first form only when f maps 1..m onto 1..m.
inline FiniteAlgebra relabel(const FiniteAlgebra& a, const Bijection& f) {
  if (f.size() != a.order()) throw std::invalid_argument("bijection size mismatch");
  const auto img = [&](Element x) { return x == kUndefined ? kUndefined : f(x); };
  FiniteAlgebra out(a.order(), a.unit_count());
  for (Element x = 1; x <= a.order(); ++x) {
    const Element y = f(x);
    out.set_u_left(y, img(a.u_left(x)));
    out.set_u_right(y, img(a.u_right(x)));
    out.set_inv(y, img(a.inv(x)));
    for (Element z = 1; z <= a.order(); ++z) {
      out.set_product(y, f(z), img(a.product(x, z)));
    }
  }
  return out;
}

struct MorphismReport {
  bool is_morphism = false;
  /// First composable pair (i, j) of the source that f does not respect.
  std::optional<std::pair<Element, Element>> witness;
};

/**
 * f is a morphism iff every composable (x, y) of A maps to a composable
 * pair of B with mu_B(f(x), f(y)) = f(mu_A(x, y)). `f[x - 1]` is f(x).
 */
inline MorphismReport is_morphism(const std::vector<Element>& f,
                                  const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (f.size() != static_cast<std::size_t>(a.order())) {
    throw std::out_of_range("map must be defined on every element of the source");
  }
  for (Element y : f) {
    if (!b.contains(y)) {
      throw std::out_of_range("map value " + std::to_string(y) + " outside target");
    }
  }
  const auto fx = [&](Element x) { return f[static_cast<std::size_t>(x - 1)]; };
  for (Element i = 1; i <= a.order(); ++i) {
    for (Element j = 1; j <= a.order(); ++j) {
      if (a.u_right(i) != a.u_left(j)) continue;
      const Element fi = fx(i), fj = fx(j);
      if (b.u_right(fi) != b.u_left(fj) ||
          b.product(fi, fj) != fx(a.product(i, j))) {
        return {false, std::pair{i, j}};
      }
    }
  }
  return {true, std::nullopt};
}

inline MorphismReport is_morphism(const Bijection& f, const FiniteAlgebra& a,
                                  const FiniteAlgebra& b) {
  return is_morphism(f.forward(), a, b);
}

namespace detail {

/// Backtracking search for an isomorphism a -> b. Units are assigned first
/// (to units), then non-units in order, each constrained by the anchor and
/// by every product among already-assigned elements.
class IsoSearch {
 public:
  IsoSearch(const FiniteAlgebra& a, const FiniteAlgebra& b)
      : a_(a), b_(b), n_(a.order()), m_(a.unit_count()),
        f_(static_cast<std::size_t>(n_) + 1, kUndefined),
        used_(static_cast<std::size_t>(n_) + 1, false) {}

  std::optional<Bijection> run() {
    if (!assign(1)) return std::nullopt;
    return Bijection(std::vector<Element>(f_.begin() + 1, f_.end()));
  }

 private:
  bool consistent(Element x) const {
    const Element fx = f_[static_cast<std::size_t>(x)];
    const auto mapped = [&](Element z) { return f_[static_cast<std::size_t>(z)]; };
    for (Element z = 1; z <= n_; ++z) {
      const Element fz = mapped(z);
      if (fz == kUndefined) continue;
      // Composability must be reflected both ways for a bijective morphism
      // whose inverse is also a morphism.
      if ((a_.u_right(x) == a_.u_left(z)) != (b_.u_right(fx) == b_.u_left(fz))) return false;
      if ((a_.u_right(z) == a_.u_left(x)) != (b_.u_right(fz) == b_.u_left(fx))) return false;
      if (a_.u_right(x) == a_.u_left(z)) {
        const Element p = mapped(a_.product(x, z));
        if (p != kUndefined && p != b_.product(fx, fz)) return false;
      }
      if (a_.u_right(z) == a_.u_left(x)) {
        const Element p = mapped(a_.product(z, x));
        if (p != kUndefined && p != b_.product(fz, fx)) return false;
      }
    }
    return true;
  }

  bool assign(Element x) {
    if (x > n_) return true;
    const bool unit = x <= m_;
    const Element lo = unit ? 1 : m_ + 1;
    const Element hi = unit ? m_ : n_;
    for (Element y = lo; y <= hi; ++y) {
      if (used_[static_cast<std::size_t>(y)]) continue;
      if (!unit && (b_.u_left(y) != f_[static_cast<std::size_t>(a_.u_left(x))] ||
                    b_.u_right(y) != f_[static_cast<std::size_t>(a_.u_right(x))])) {
        continue;
      }
      f_[static_cast<std::size_t>(x)] = y;
      used_[static_cast<std::size_t>(y)] = true;
      if (consistent(x) && assign(x + 1)) return true;
      used_[static_cast<std::size_t>(y)] = false;
      f_[static_cast<std::size_t>(x)] = kUndefined;
    }
    return false;
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  int n_;
  int m_;
  std::vector<Element> f_;
  std::vector<bool> used_;
};

inline std::vector<std::pair<Element, Element>> sorted_anchor_shape(const FiniteAlgebra& a) {
  // Multiset of anchor kinds that every isomorphism preserves: counts of
  // loops (alpha = beta) versus arrows, per fibre size.
  std::vector<std::pair<Element, Element>> shape;
  const int m = a.unit_count();
  std::vector<int> out(static_cast<std::size_t>(m) + 1, 0), in(static_cast<std::size_t>(m) + 1, 0);
  for (Element x = 1; x <= a.order(); ++x) {
    ++out[static_cast<std::size_t>(a.u_left(x))];
    ++in[static_cast<std::size_t>(a.u_right(x))];
  }
  for (Element u = 1; u <= m; ++u) {
    shape.emplace_back(out[static_cast<std::size_t>(u)], in[static_cast<std::size_t>(u)]);
  }
  std::sort(shape.begin(), shape.end());
  return shape;
}

}  // namespace detail

/**
 * Finds a bijection f : A -> B such that f and its inverse are both
 * morphisms, or nullopt. Inputs are expected at level Groupoid; since a
 * groupoid isomorphism sends idempotents to idempotents, only unit-to-unit
 * candidates are searched.
 */
inline std::optional<Bijection> are_isomorphic(const FiniteAlgebra& a,
                                               const FiniteAlgebra& b) {
  if (a.order() != b.order() || a.unit_count() != b.unit_count()) return std::nullopt;
  if (detail::sorted_anchor_shape(a) != detail::sorted_anchor_shape(b)) return std::nullopt;
  auto f = detail::IsoSearch(a, b).run();
  if (!f) return std::nullopt;
  if (!is_morphism(*f, a, b).is_morphism || !is_morphism(f->inverse(), b, a).is_morphism) {
    throw std::logic_error("isomorphism search produced a non-morphism");
  }
  return f;
}

/// Groups are compared as one-unit groupoids.
inline bool are_isomorphic_groups(const GroupTable& g, const GroupTable& h) {
  if (g.size() != h.size()) return false;
  return are_isomorphic(from_group(g), from_group(h)).has_value();
}

/// Serialization compared lexicographically: u_left, u_right, inv, table.
using CanonicalKey = std::vector<Element>;

inline CanonicalKey serialize(const FiniteAlgebra& a) {
  CanonicalKey key;
  key.reserve(a.u_left_row().size() * 3 + a.table_data().size() + 2);
  key.push_back(a.order());
  key.push_back(a.unit_count());
  key.insert(key.end(), a.u_left_row().begin(), a.u_left_row().end());
  key.insert(key.end(), a.u_right_row().begin(), a.u_right_row().end());
  key.insert(key.end(), a.inv_row().begin(), a.inv_row().end());
  key.insert(key.end(), a.table_data().begin(), a.table_data().end());
  return key;
}

struct CanonicalForm {
  FiniteAlgebra algebra;
  CanonicalKey key;
};

/// Bound on m! * (n - m)! relabelings tried by canonical_form.
inline constexpr std::uint64_t kCanonicalBudget = 40'320;  // 8!

/**
 * Minimal relabeled copy of `a` over all bijections that permute 1..m and
 * m+1..n separately. Two groupoids are isomorphic iff their keys agree.
 * Throws std::length_error when the relabeling count exceeds the budget.
 */
inline CanonicalForm canonical_form(const FiniteAlgebra& a) {
  const int n = a.order(), m = a.unit_count();
  std::uint64_t count = 1;
  for (int k = 2; k <= m; ++k) count *= static_cast<std::uint64_t>(k);
  for (int k = 2; k <= n - m; ++k) {
    count *= static_cast<std::uint64_t>(k);
    if (count > kCanonicalBudget) break;
  }
  if (count > kCanonicalBudget) {
    throw std::length_error("canonical_form: too many relabelings for type (" +
                            std::to_string(n) + ";" + std::to_string(m) + ")");
  }
  std::vector<Element> units(static_cast<std::size_t>(m));
  std::iota(units.begin(), units.end(), 1);
  std::vector<Element> rest(static_cast<std::size_t>(n - m));
  std::iota(rest.begin(), rest.end(), m + 1);

  std::optional<CanonicalForm> best;
  std::vector<Element> f(static_cast<std::size_t>(n));
  do {
    std::vector<Element> r = rest;
    do {
      std::copy(units.begin(), units.end(), f.begin());
      std::copy(r.begin(), r.end(), f.begin() + m);
      FiniteAlgebra cand = relabel(a, Bijection(f));
      CanonicalKey key = serialize(cand);
      if (!best || key < best->key) best = CanonicalForm{std::move(cand), std::move(key)};
    } while (std::next_permutation(r.begin(), r.end()));
  } while (std::next_permutation(units.begin(), units.end()));
  return std::move(*best);
}

}  // namespace bgroid
