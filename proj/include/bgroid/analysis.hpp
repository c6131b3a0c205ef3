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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgroid/algebra.hpp"
#include "bgroid/group_table.hpp"
#include "bgroid/verify.hpp"

namespace bgroid {

using UnitPair = std::pair<Element, Element>;

/// (alpha(x), beta(x)).
inline UnitPair anchor(const FiniteAlgebra& a, Element x) {
  require_element(a, x);
  return {a.u_left(x), a.u_right(x)};
}

struct TransitivityReport {
  bool transitive = false;
  /// Lexicographically least (u, v) not hit by the anchor map.
  std::optional<UnitPair> missing;
};

inline TransitivityReport is_transitive(const FiniteAlgebra& a) {
  const int m = a.unit_count();
  std::vector<bool> hit(static_cast<std::size_t>(m * m), false);
  for (Element x = 1; x <= a.order(); ++x) {
    hit[static_cast<std::size_t>((a.u_left(x) - 1) * m + (a.u_right(x) - 1))] = true;
  }
  for (Element u = 1; u <= m; ++u) {
    for (Element v = 1; v <= m; ++v) {
      if (!hit[static_cast<std::size_t>((u - 1) * m + (v - 1))]) {
        return {false, UnitPair{u, v}};
      }
    }
  }
  return {true, std::nullopt};
}

inline std::vector<Element> alpha_fibre(const FiniteAlgebra& a, Element u) {
  require_unit(a, u);
  std::vector<Element> out;
  for (Element x = 1; x <= a.order(); ++x) {
    if (a.u_left(x) == u) out.push_back(x);
  }
  return out;
}

inline std::vector<Element> beta_fibre(const FiniteAlgebra& a, Element u) {
  require_unit(a, u);
  std::vector<Element> out;
  for (Element x = 1; x <= a.order(); ++x) {
    if (a.u_right(x) == u) out.push_back(x);
  }
  return out;
}

/**
 * The isotropy group G(u) = {x : alpha(x) = beta(x) = u} under the
 * restricted multiplication. The result is checked against the group
 * axioms; a failure means the input was not a groupoid and raises
 * std::logic_error.
 */
inline GroupTable isotropy_group(const FiniteAlgebra& a, Element u) {
  require_unit(a, u);
  std::vector<Element> elems;
  for (Element x = 1; x <= a.order(); ++x) {
    if (a.u_left(x) == u && a.u_right(x) == u) elems.push_back(x);
  }
  std::vector<std::vector<Element>> rows;
  rows.reserve(elems.size());
  for (Element x : elems) {
    std::vector<Element> row;
    row.reserve(elems.size());
    for (Element y : elems) row.push_back(a.product(x, y));
    rows.push_back(std::move(row));
  }
  GroupTable g(elems, u, rows);
  if (auto failed = check_group_axioms(g)) {
    throw std::logic_error("isotropy group at unit " + std::to_string(u) +
                           " violates " + *failed);
  }
  return g;
}

struct IsotropyBundle {
  /// Is(G) = {x : alpha(x) = beta(x)}, ascending.
  std::vector<Element> elements;
  /// One group per unit, in unit order; their element sets partition Is(G).
  std::vector<GroupTable> groups;
};

inline IsotropyBundle isotropy_bundle(const FiniteAlgebra& a) {
  IsotropyBundle out;
  for (Element x = 1; x <= a.order(); ++x) {
    if (a.u_left(x) == a.u_right(x)) out.elements.push_back(x);
  }
  for (Element u = 1; u <= a.unit_count(); ++u) {
    out.groups.push_back(isotropy_group(a, u));
  }
  return out;
}

inline bool is_group_bundle(const FiniteAlgebra& a) {
  for (Element x = 1; x <= a.order(); ++x) {
    if (a.u_left(x) != a.u_right(x)) return false;
  }
  return true;
}

/**
 * Solves for an inversion map from the table alone: for each x the unique
 * y with (x, y), (y, x) composable, x y = alpha(x) and y x = beta(x).
 * Returns nullopt if some x has no such y or more than one.
 */
inline std::optional<std::vector<Element>> find_inverses(const FiniteAlgebra& a) {
  const int n = a.order();
  std::vector<Element> out(static_cast<std::size_t>(n), kUndefined);
  for (Element x = 1; x <= n; ++x) {
    Element found = kUndefined;
    for (Element y = 1; y <= n; ++y) {
      const bool ok = a.u_right(x) == a.u_left(y) && a.u_right(y) == a.u_left(x) &&
                      a.product(x, y) == a.u_left(x) &&
                      a.product(y, x) == a.u_right(x);
      if (!ok) continue;
      if (found != kUndefined) return std::nullopt;
      found = y;
    }
    if (found == kUndefined) return std::nullopt;
    out[static_cast<std::size_t>(x - 1)] = found;
  }
  return out;
}

}  // namespace bgroid
