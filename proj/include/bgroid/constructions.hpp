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
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgroid/algebra.hpp"
#include "bgroid/group_table.hpp"
#include "bgroid/verify.hpp"

namespace bgroid {

/// Nul groupoid on `size` points: every element is a unit, x * x = x only.
inline FiniteAlgebra nul_groupoid(int size) {
  if (size < 1) throw std::invalid_argument("nul groupoid needs size >= 1");
  FiniteAlgebra a(size, size);
  for (Element x = 1; x <= size; ++x) {
    a.set_u_left(x, x);
    a.set_u_right(x, x);
    a.set_inv(x, x);
    a.set_product(x, x, x);
  }
  return a;
}

/// Z_k on ids 1..k; residue r is id r + 1, so the unit 0 is id 1.
inline GroupTable cyclic_group(int k) {
  if (k < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<Element> elems(static_cast<std::size_t>(k));
  std::vector<std::vector<Element>> rows(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    elems[static_cast<std::size_t>(r)] = r + 1;
    for (int s = 0; s < k; ++s) rows[static_cast<std::size_t>(r)].push_back((r + s) % k + 1);
  }
  return GroupTable(elems, 1, rows);
}

/// Klein four-group {(1), s, t, st} as ids 1..4, every element an involution.
inline GroupTable klein_four() {
  return GroupTable({1, 2, 3, 4}, 1,
                    {{1, 2, 3, 4},
                     {2, 1, 4, 3},
                     {3, 4, 1, 2},
                     {4, 3, 2, 1}});
}

/// S3 as permutations of {0,1,2} in lexicographic order (identity = id 1);
/// the product p * q is the composite p after q.
inline GroupTable symmetric_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto id_of = [&](const std::array<int, 3>& q) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin()) + 1;
  };
  std::vector<Element> elems;
  std::vector<std::vector<Element>> rows;
  for (const auto& x : perms) {
    elems.push_back(id_of(x));
    std::vector<Element> row;
    for (const auto& y : perms) {
      row.push_back(id_of({x[static_cast<std::size_t>(y[0])],
                           x[static_cast<std::size_t>(y[1])],
                           x[static_cast<std::size_t>(y[2])]}));
    }
    rows.push_back(std::move(row));
  }
  return GroupTable(elems, 1, rows);
}

/**
 * A group viewed as a groupoid with one unit. The group's unit becomes
 * element 1; the other elements follow in the table's element order.
 * Throws std::invalid_argument naming the failed axiom.
 */
inline FiniteAlgebra from_group(const GroupTable& g) {
  if (auto failed = check_group_axioms(g)) {
    throw std::invalid_argument("not a group: " + *failed + " fails");
  }
  const int k = static_cast<int>(g.size());
  // position in g -> new id
  std::vector<Element> id_of(g.size());
  const std::size_t e = *g.position(g.unit());
  id_of[e] = 1;
  Element next = 2;
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (p != e) id_of[p] = next++;
  }
  FiniteAlgebra a(k, 1);
  for (std::size_t p = 0; p < g.size(); ++p) {
    const Element x = id_of[p];
    a.set_u_left(x, 1);
    a.set_u_right(x, 1);
    for (std::size_t q = 0; q < g.size(); ++q) {
      const std::size_t pq = g.mul_pos(p, q);
      a.set_product(x, id_of[q], id_of[pq]);
      if (pq == e) a.set_inv(x, id_of[q]);
    }
  }
  return a;
}

/**
 * Saltus groupoid F(4;2) in its standard encoding: f1 = Id_Ox, f2 = Id_Oy,
 * f3 : Ox -> Oy and f4 : Oy -> Ox, with mu(x, y) = y o x.
 */
inline FiniteAlgebra saltus_f42() {
  return FiniteAlgebra(4, 2, {1, 2, 1, 2}, {1, 2, 2, 1}, {1, 2, 4, 3},
                       {{1, 0, 3, 0},
                        {0, 2, 0, 4},
                        {0, 3, 0, 1},
                        {4, 0, 2, 0}});
}

/**
 * Disjoint union with units-first renumbering: units of A keep 1..mA, units
 * of B become mA+1..mA+mB, then the non-units of A, then those of B, each
 * block in original order. Cross pairs are never composable.
 */
inline FiniteAlgebra disjoint_union(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_level(a, Level::Monoidoid, "disjoint_union (left)");
  require_level(b, Level::Monoidoid, "disjoint_union (right)");
  const int na = a.order(), ma = a.unit_count();
  const int nb = b.order(), mb = b.unit_count();
  const auto map_a = [&](Element x) {
    return x <= ma ? x : ma + mb + (x - ma);
  };
  const auto map_b = [&](Element x) {
    return x <= mb ? ma + x : ma + mb + (na - ma) + (x - mb);
  };
  FiniteAlgebra out(na + nb, ma + mb);
  const auto transport = [&out](const FiniteAlgebra& src, auto&& map) {
    for (Element x = 1; x <= src.order(); ++x) {
      const Element y = map(x);
      out.set_u_left(y, map(src.u_left(x)));
      out.set_u_right(y, map(src.u_right(x)));
      out.set_inv(y, map(src.inv(x)));
      for (Element z = 1; z <= src.order(); ++z) {
        const Element p = src.product(x, z);
        if (p != kUndefined) out.set_product(y, map(z), map(p));
      }
    }
  };
  transport(a, map_a);
  transport(b, map_b);
  return out;
}

/// {e} u Z3, the groupoid of type (4;2) with isotropy groups 1 and Z3.
inline FiniteAlgebra trivial_plus_z3() {
  return disjoint_union(from_group(cyclic_group(1)), from_group(cyclic_group(3)));
}

/// Z2 u Z2, type (4;2).
inline FiniteAlgebra z2_plus_z2() {
  return disjoint_union(from_group(cyclic_group(2)), from_group(cyclic_group(2)));
}

/// K4 u Z4, type (8;2): ids 1 = (1), 2 = 0^, 3..5 = s, t, st, 6..8 = 1^, 2^, 3^.
inline FiniteAlgebra klein_plus_z4() {
  return disjoint_union(from_group(klein_four()), from_group(cyclic_group(4)));
}

}  // namespace bgroid
