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

// Groupoid laws as standalone checks. Each returns a description of the
// first violation, or nothing.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bgroid/bgroid.hpp"
#include "oracles.hpp"

namespace bgroid::laws {

using Violation = std::optional<std::string>;

namespace detail {

inline std::string at(const char* law, Element x, Element y = 0) {
  std::string s = std::string(law) + " fails at " + std::to_string(x);
  if (y) s += ", " + std::to_string(y);
  return s;
}

inline bool comp(const FiniteAlgebra& a, Element x, Element y) { return a.u_right(x) == a.u_left(y); }

}  // namespace detail

/// Units are fixed by the structure maps and idempotent.
inline Violation unit_laws(const FiniteAlgebra& a) {
  for (Element u = 1; u <= a.unit_count(); ++u) {
    if (a.u_left(u) != u || a.u_right(u) != u || a.product(u, u) != u) return detail::at("unit", u);
  }
  return std::nullopt;
}

/// Products keep the left unit of the left factor and the right unit of
/// the right factor.
inline Violation closure(const FiniteAlgebra& a) {
  for (Element x = 1; x <= a.order(); ++x) {
    for (Element y = 1; y <= a.order(); ++y) {
      if (!detail::comp(a, x, y)) continue;
      const Element p = a.product(x, y);
      if (p < 1 || a.u_left(p) != a.u_left(x) || a.u_right(p) != a.u_right(y)) {
        return detail::at("closure", x, y);
      }
    }
  }
  return std::nullopt;
}

/// A unit acting trivially on x from the right (left) is beta(x) (alpha(x)).
inline Violation unit_uniqueness(const FiniteAlgebra& a) {
  for (Element x = 1; x <= a.order(); ++x) {
    for (Element u = 1; u <= a.unit_count(); ++u) {
      if (detail::comp(a, x, u) && a.product(x, u) == x && u != a.u_right(x)) {
        return detail::at("right unit uniqueness", x, u);
      }
      if (detail::comp(a, u, x) && a.product(u, x) == x && u != a.u_left(x)) {
        return detail::at("left unit uniqueness", u, x);
      }
    }
  }
  return std::nullopt;
}

inline Violation inversion(const FiniteAlgebra& a) {
  for (Element x = 1; x <= a.order(); ++x) {
    const Element v = a.inv(x);
    if (a.inv(v) != x || a.u_left(v) != a.u_right(x) || a.u_right(v) != a.u_left(x)) {
      return detail::at("inversion", x);
    }
  }
  return std::nullopt;
}

inline Violation cancellation(const FiniteAlgebra& a) {
  const int n = a.order();
  for (Element x = 1; x <= n; ++x) {
    std::vector<Element> row, col;
    for (Element z = 1; z <= n; ++z) {
      if (detail::comp(a, x, z)) row.push_back(a.product(x, z));
      if (detail::comp(a, z, x)) col.push_back(a.product(z, x));
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return detail::at("left cancellation", x);
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) return detail::at("right cancellation", x);
  }
  return std::nullopt;
}

/// G(u) is exactly the loops at u, and it is a group.
inline Violation isotropy(const FiniteAlgebra& a) {
  for (Element u = 1; u <= a.unit_count(); ++u) {
    std::vector<Element> loops;
    for (Element x = 1; x <= a.order(); ++x) {
      if (a.u_left(x) == u && a.u_right(x) == u) loops.push_back(x);
    }
    const GroupTable g = isotropy_group(a, u);
    if (g.elements() != loops || g.unit() != u) return detail::at("isotropy support", u);
    for (Element x : loops) {
      if (std::find(loops.begin(), loops.end(), a.inv(x)) == loops.end()) return detail::at("isotropy inverse", u, x);
      for (Element y : loops) {
        if (std::find(loops.begin(), loops.end(), a.product(x, y)) == loops.end()) {
          return detail::at("isotropy closure", x, y);
        }
        for (Element z : loops) {
          if (a.product(a.product(x, y), z) != a.product(x, a.product(y, z))) {
            return detail::at("isotropy associativity", x, y);
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// On a transitive groupoid all isotropy groups are isomorphic. The search
/// result is cross-checked by brute force.
inline Violation transitive_isotropy(const FiniteAlgebra& a) {
  if (!is_transitive(a).transitive) return std::nullopt;
  const GroupTable base = isotropy_group(a, 1);
  for (Element u = 2; u <= a.unit_count(); ++u) {
    const GroupTable g = isotropy_group(a, u);
    const bool found = are_isomorphic_groups(base, g);
    const bool brute = g.size() == base.size() &&
                       oracle::isomorphic_brute_force(from_group(base), from_group(g));
    if (!found || !brute) return detail::at("transitive isotropy", 1, u);
  }
  return std::nullopt;
}

inline Violation all_laws(const FiniteAlgebra& a) {
  for (auto law : {unit_laws, closure, unit_uniqueness, inversion, cancellation, isotropy,
                   transitive_isotropy}) {
    if (auto v = law(a)) return v;
  }
  return std::nullopt;
}

}  // namespace bgroid::laws
