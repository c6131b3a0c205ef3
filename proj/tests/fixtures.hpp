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

// Reference inputs shared by the unit and acceptance suites.

#pragma once

#include <string>
#include <vector>

#include "bgroid/bgroid.hpp"

#ifndef BGROID_DATA_DIR
#define BGROID_DATA_DIR "data"
#endif

namespace bgroid::fixtures {

inline std::string data_path(const std::string& file) {
  return std::string(BGROID_DATA_DIR) + "/" + file;
}

// Input bodies as they are typed by hand: no trailing spaces, no blank
// separator lines. The reader must accept them.

inline const char* const kSaltusText =
    "4\n2\n"
    "1 2 1 2\n1 2 2 1\n1 2 4 3\n"
    "1 0 3 0\n0 2 0 4\n0 3 0 1\n4 0 2 0\n";

inline const char* const kGroupoid93Text =
    "9\n3\n"
    "1 2 3 1 1 2 2 3 3\n"
    "1 2 3 2 3 1 3 1 2\n"
    "1 2 3 6 8 4 9 5 7\n"
    "1 0 0 4 5 0 0 0 0\n"
    "0 2 0 0 0 6 7 0 0\n"
    "0 0 3 0 0 0 0 8 9\n"
    "0 4 0 0 0 1 5 0 0\n"
    "0 0 5 0 0 0 0 1 4\n"
    "6 0 0 2 7 0 0 0 0\n"
    "0 0 7 0 0 0 0 6 2\n"
    "8 0 0 9 3 0 0 0 0\n"
    "0 9 0 0 0 8 3 0 0\n";

inline const char* const kMonoid61Text =
    "6\n1\n"
    "1 1 1 1 1 1\n"
    "1 1 1 1 1 1\n"
    "1 3 2 4 6 5\n"
    "1 2 3 4 5 6\n"
    "2 3 1 6 4 5\n"
    "3 1 2 5 6 4\n"
    "4 5 6 1 2 3\n"
    "5 6 4 3 1 2\n"
    "6 4 5 2 3 1\n";

inline FiniteAlgebra groupoid_9_3() { return parse_structure_file(kGroupoid93Text); }
inline FiniteAlgebra monoid_6_1() { return parse_structure_file(kMonoid61Text); }

/// The monoidoid {e} u {1, 0, -1} (multiplicative) over units {e, 1},
/// encoded e = 1, 1 = 2, 0 = 3, -1 = 4, with the identity as inversion.
inline FiniteAlgebra sign_monoidoid() {
  return FiniteAlgebra(4, 2, {1, 2, 2, 2}, {1, 2, 2, 2}, {1, 2, 3, 4},
                       {{1, 0, 0, 0},
                        {0, 2, 3, 4},
                        {0, 3, 3, 3},
                        {0, 4, 3, 2}});
}

/// Type (4;2) with a3, a4 in the fibre of a2 and iota = identity;
/// mu(a3,a3) = a4, mu(a4,a4) = a3 fixed, the two mixed products free.
inline FiniteAlgebra case_1_1(Element mu34, Element mu43) {
  return FiniteAlgebra(4, 2, {1, 2, 2, 2}, {1, 2, 2, 2}, {1, 2, 3, 4},
                       {{1, 0, 0, 0},
                        {0, 2, 3, 4},
                        {0, 3, 4, mu34},
                        {0, 4, mu43, 3}});
}

/// Same anchors, iota swapping a3 and a4; mixed products are a2 and the
/// two squares are free.
inline FiniteAlgebra case_1_2(Element mu33, Element mu44) {
  return FiniteAlgebra(4, 2, {1, 2, 2, 2}, {1, 2, 2, 2}, {1, 2, 4, 3},
                       {{1, 0, 0, 0},
                        {0, 2, 3, 4},
                        {0, 3, mu33, 2},
                        {0, 4, 2, mu44}});
}

/// Anchors alpha = beta = (1,2,1,2), iota = identity: two copies of Z2.
inline FiniteAlgebra case_2_table() {
  return FiniteAlgebra(4, 2, {1, 2, 1, 2}, {1, 2, 1, 2}, {1, 2, 3, 4},
                       {{1, 0, 3, 0},
                        {0, 2, 0, 4},
                        {3, 0, 1, 0},
                        {0, 4, 0, 2}});
}

/// Anchors a3: 1 -> 2, a4: 2 -> 1, iota swapping them: the saltus groupoid.
inline FiniteAlgebra case_3_table() {
  return FiniteAlgebra(4, 2, {1, 2, 1, 2}, {1, 2, 2, 1}, {1, 2, 4, 3},
                       {{1, 0, 3, 0},
                        {0, 2, 0, 4},
                        {0, 3, 0, 1},
                        {4, 0, 2, 0}});
}

/**
 * K4 u Z4 written in the reference element order
 * (1), s, t, st, 0^, 1^, 2^, 3^ -> 1..8 (this is NOT units-first).
 */
struct ReferenceTables {
  std::vector<Element> alpha, beta, iota;
  std::vector<std::vector<Element>> mu;
};

inline ReferenceTables klein_z4_reference() {
  return {{1, 1, 1, 1, 5, 5, 5, 5},
          {1, 1, 1, 1, 5, 5, 5, 5},
          {1, 2, 3, 4, 5, 8, 7, 6},
          {{1, 2, 3, 4, 0, 0, 0, 0},
           {2, 1, 4, 3, 0, 0, 0, 0},
           {3, 4, 1, 2, 0, 0, 0, 0},
           {4, 3, 2, 1, 0, 0, 0, 0},
           {0, 0, 0, 0, 5, 6, 7, 8},
           {0, 0, 0, 0, 6, 7, 8, 5},
           {0, 0, 0, 0, 7, 8, 5, 6},
           {0, 0, 0, 0, 8, 5, 6, 7}}};
}

/// Reference position -> id in klein_plus_z4().
inline const std::vector<Element> kKleinZ4Renumbering = {1, 3, 4, 5, 2, 6, 7, 8};

}  // namespace bgroid::fixtures
