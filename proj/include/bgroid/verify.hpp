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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgroid/algebra.hpp"

namespace bgroid {

/// Highest stage of the verification cascade an algebra has passed.
enum class Level { Malformed, Structure, Semigroupoid, Monoidoid, Groupoid };

enum class DiagnosticCode {
  IncompleteStructure,
  UnitOutOfRange,
  NonInjectiveInversion,
  UnitNotSurjective,
  ProductOnNonComposable,
  UnitSelfMapViolation,
  NotAssociative,
  NoUnit,
  NoInverse,
};

/**
 * First-failure record of a cascade stage.
 *
 * Witness shapes by code:
 *  - IncompleteStructure: (i) for an unassigned structure value, (i, j) for
 *    a composable pair with no product.
 *  - UnitOutOfRange: (i) for a structure value outside its range, (i, j)
 *    for a table entry outside 0..n.
 *  - UnitSelfMapViolation: (k), a unit not fixed by u_left/u_right/inv.
 *  - UnitNotSurjective: (u), a unit missed by u_left or u_right.
 *  - NonInjectiveInversion: (i, j), i < j with inv(i) = inv(j).
 *  - ProductOnNonComposable: (i, j).
 *  - NotAssociative: (i, j) when the product leaves the anchor of its
 *    factors, (i, j, k) for a failing triple.
 *  - NoUnit, NoInverse: (i).
 */
struct Diagnostic {
  DiagnosticCode code;
  std::vector<Element> witness;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct CheckVerdict {
  Level level = Level::Malformed;
  std::optional<Diagnostic> diagnostic;

  [[nodiscard]] bool is_groupoid() const noexcept {
    return level == Level::Groupoid;
  }
  friend bool operator==(const CheckVerdict&, const CheckVerdict&) = default;
};

/// Each stage returns nullopt on success, else the first failure.
using StageResult = std::optional<Diagnostic>;

inline std::string_view to_string(Level level) {
  switch (level) {
    case Level::Malformed: return "Malformed";
    case Level::Structure: return "Structure";
    case Level::Semigroupoid: return "Semigroupoid";
    case Level::Monoidoid: return "Monoidoid";
    case Level::Groupoid: return "Groupoid";
  }
  return "?";
}

inline std::string_view to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::IncompleteStructure: return "IncompleteStructure";
    case DiagnosticCode::UnitOutOfRange: return "UnitOutOfRange";
    case DiagnosticCode::NonInjectiveInversion: return "NonInjectiveInversion";
    case DiagnosticCode::UnitNotSurjective: return "UnitNotSurjective";
    case DiagnosticCode::ProductOnNonComposable: return "ProductOnNonComposable";
    case DiagnosticCode::UnitSelfMapViolation: return "UnitSelfMapViolation";
    case DiagnosticCode::NotAssociative: return "NotAssociative";
    case DiagnosticCode::NoUnit: return "NoUnit";
    case DiagnosticCode::NoInverse: return "NoInverse";
  }
  return "?";
}

/// Human-readable, stable message for a diagnostic.
inline std::string describe(const Diagnostic& d) {
  const auto& w = d.witness;
  auto el = [&](std::size_t k) { return std::to_string(w.at(k)); };
  auto pair = [&] { return "(" + el(0) + ", " + el(1) + ")"; };
  switch (d.code) {
    case DiagnosticCode::IncompleteStructure:
      if (w.size() == 1) return "structure incomplete: element " + el(0) + " has an unassigned structure value";
      return "structure incomplete: composable pair " + pair() + " has no product";
    case DiagnosticCode::UnitOutOfRange:
      if (w.size() == 1) return "structure value of element " + el(0) + " out of range";
      return "table entry " + pair() + " out of range";
    case DiagnosticCode::NonInjectiveInversion:
      return "inversion is not injective: inv(" + el(0) + ") = inv(" + el(1) + ")";
    case DiagnosticCode::UnitNotSurjective:
      return "unit " + el(0) + " is not in the image of u_left and u_right";
    case DiagnosticCode::ProductOnNonComposable:
      return "product defined on non-composable pair " + pair();
    case DiagnosticCode::UnitSelfMapViolation:
      return "unit " + el(0) + " is not fixed by u_left, u_right and inv";
    case DiagnosticCode::NotAssociative:
      if (w.size() == 2) return "product of " + pair() + " does not keep the anchor of its factors";
      return el(0) + ", " + el(1) + ", " + el(2) + " - not associative";
    case DiagnosticCode::NoUnit:
      return "element " + el(0) + " has no unit";
    case DiagnosticCode::NoInverse:
      return "element " + el(0) + " has no inverse";
  }
  return "unknown diagnostic";
}

/**
 * Stage 1. Checks every well-formedness invariant of the data model.
 *
 * Scan order: per-element assignments (ascending i), unit self-maps,
 * surjectivity of u_left then u_right, injectivity of inv, then the table
 * row-major. Within the table scan a cell is checked for range, then for
 * agreement between "nonzero" and "composable".
 */
inline StageResult validate_structure(const FiniteAlgebra& a) {
  const int n = a.order();
  const int m = a.unit_count();
  using C = DiagnosticCode;

  for (Element i = 1; i <= n; ++i) {
    const Element l = a.u_left(i), r = a.u_right(i), v = a.inv(i);
    if (l == kUndefined || r == kUndefined || v == kUndefined) {
      return Diagnostic{C::IncompleteStructure, {i}};
    }
    if (l < 1 || l > m || r < 1 || r > m || v < 1 || v > n) {
      return Diagnostic{C::UnitOutOfRange, {i}};
    }
  }
  for (Element k = 1; k <= m; ++k) {
    if (a.u_left(k) != k || a.u_right(k) != k || a.inv(k) != k) {
      return Diagnostic{C::UnitSelfMapViolation, {k}};
    }
  }
  // Both maps fix units, so a miss here can only come from a corrupted
  // unit row; the scan is kept so the condition is enforced explicitly.
  for (const auto* row : {&a.u_left_row(), &a.u_right_row()}) {
    std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
    for (Element v : *row) hit[static_cast<std::size_t>(v)] = true;
    for (Element u = 1; u <= m; ++u) {
      if (!hit[static_cast<std::size_t>(u)]) {
        return Diagnostic{C::UnitNotSurjective, {u}};
      }
    }
  }
  {
    std::vector<Element> first(static_cast<std::size_t>(n) + 1, kUndefined);
    for (Element i = 1; i <= n; ++i) {
      auto& slot = first[static_cast<std::size_t>(a.inv(i))];
      if (slot != kUndefined) return Diagnostic{C::NonInjectiveInversion, {slot, i}};
      slot = i;
    }
  }
  for (Element i = 1; i <= n; ++i) {
    for (Element j = 1; j <= n; ++j) {
      const Element p = a.product(i, j);
      if (p < 0 || p > n) return Diagnostic{C::UnitOutOfRange, {i, j}};
      const bool comp = a.u_right(i) == a.u_left(j);
      if (comp && p == kUndefined) return Diagnostic{C::IncompleteStructure, {i, j}};
      if (!comp && p != kUndefined) return Diagnostic{C::ProductOnNonComposable, {i, j}};
    }
  }
  return std::nullopt;
}

/**
 * Stage 2. First verifies that every product keeps the anchor of its
 * factors (alpha(xy) = alpha(x), beta(xy) = beta(y)); this guarantees both
 * sides of (xy)z = x(yz) are defined. Then scans all composable triples in
 * lexicographic order.
 */
inline StageResult check_associativity(const FiniteAlgebra& a) {
  const int n = a.order();
  for (Element i = 1; i <= n; ++i) {
    for (Element j = 1; j <= n; ++j) {
      if (a.u_right(i) != a.u_left(j)) continue;
      const Element p = a.product(i, j);
      if (a.u_left(p) != a.u_left(i) || a.u_right(p) != a.u_right(j)) {
        return Diagnostic{DiagnosticCode::NotAssociative, {i, j}};
      }
    }
  }
  for (Element i = 1; i <= n; ++i) {
    for (Element j = 1; j <= n; ++j) {
      if (a.u_right(i) != a.u_left(j)) continue;
      const Element ij = a.product(i, j);
      for (Element k = 1; k <= n; ++k) {
        if (a.u_right(j) != a.u_left(k)) continue;
        if (a.product(ij, k) != a.product(i, a.product(j, k))) {
          return Diagnostic{DiagnosticCode::NotAssociative, {i, j, k}};
        }
      }
    }
  }
  return std::nullopt;
}

/// Stage 3. alpha(x) x = x = x beta(x) for every x.
inline StageResult check_identities(const FiniteAlgebra& a) {
  for (Element i = 1; i <= a.order(); ++i) {
    if (a.product(a.u_left(i), i) != i || a.product(i, a.u_right(i)) != i) {
      return Diagnostic{DiagnosticCode::NoUnit, {i}};
    }
  }
  return std::nullopt;
}

/**
 * Stage 4. For every x, both (x, x^-1) and (x^-1, x) must be composable,
 * with x x^-1 = alpha(x) and x^-1 x = beta(x). A non-composable pair is a
 * failure in its own right.
 */
inline StageResult check_inverses(const FiniteAlgebra& a) {
  for (Element i = 1; i <= a.order(); ++i) {
    const Element v = a.inv(i);
    const bool ok = a.u_right(i) == a.u_left(v) && a.u_right(v) == a.u_left(i) &&
                    a.product(i, v) == a.u_left(i) &&
                    a.product(v, i) == a.u_right(i);
    if (!ok) return Diagnostic{DiagnosticCode::NoInverse, {i}};
  }
  return std::nullopt;
}

/// Runs the four stages in order and stops at the first failure.
inline CheckVerdict classify_structure(const FiniteAlgebra& a) {
  if (auto d = validate_structure(a)) return {Level::Malformed, std::move(d)};
  if (auto d = check_associativity(a)) return {Level::Structure, std::move(d)};
  if (auto d = check_identities(a)) return {Level::Semigroupoid, std::move(d)};
  if (auto d = check_inverses(a)) return {Level::Monoidoid, std::move(d)};
  return {Level::Groupoid, std::nullopt};
}

inline bool is_groupoid(const FiniteAlgebra& a) {
  return classify_structure(a).is_groupoid();
}

/// Throws std::invalid_argument unless `a` reaches at least `needed`.
inline void require_level(const FiniteAlgebra& a, Level needed,
                          std::string_view what) {
  const CheckVerdict v = classify_structure(a);
  if (v.level < needed) {
    std::string msg(what);
    msg += ": input must reach level ";
    msg += to_string(needed);
    msg += ", got ";
    msg += to_string(v.level);
    if (v.diagnostic) msg += " (" + describe(*v.diagnostic) + ")";
    throw std::invalid_argument(msg);
  }
}

}  // namespace bgroid
