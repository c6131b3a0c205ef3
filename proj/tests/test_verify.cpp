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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bgroid/bgroid.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bgroid;
namespace fx = bgroid::fixtures;

namespace {

Diagnostic diag(DiagnosticCode c, std::vector<Element> w) { return {c, std::move(w)}; }

}  // namespace

TEST_CASE("FiniteAlgebra rejects degenerate type pairs", "[core]") {
  CHECK_THROWS_AS(FiniteAlgebra(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAlgebra(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAlgebra(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAlgebra(kMaxOrder + 1, 1), std::invalid_argument);
  CHECK_NOTHROW(FiniteAlgebra(kMaxOrder, 1));
  CHECK_NOTHROW(FiniteAlgebra(3, 3));
  CHECK_THROWS_AS(FiniteAlgebra(2, 1, {1, 1}, {1, 1}, {1}, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("composable follows beta(i) = alpha(j)", "[core]") {
  const FiniteAlgebra f = saltus_f42();
  CHECK(composable(f, 1, 3));
  CHECK_FALSE(composable(f, 1, 2));
  const FiniteAlgebra nul = nul_groupoid(3);
  for (Element i = 1; i <= 3; ++i) {
    for (Element j = 1; j <= 3; ++j) CHECK(composable(nul, i, j) == (i == j));
  }
  CHECK_THROWS_AS(composable(f, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(composable(f, 1, 5), std::out_of_range);
}

TEST_CASE("validate_structure", "[core]") {
  CHECK_FALSE(validate_structure(fx::groupoid_9_3()));

  SECTION("explicit zero sentinel in u_left") {
    FiniteAlgebra a = fx::groupoid_9_3();
    a.set_u_left(5, 0);
    CHECK(validate_structure(a) == diag(DiagnosticCode::IncompleteStructure, {5}));
  }
  SECTION("product on a non-composable pair") {
    FiniteAlgebra a = saltus_f42();
    a.set_product(1, 2, 3);
    CHECK(validate_structure(a) == diag(DiagnosticCode::ProductOnNonComposable, {1, 2}));
  }
  SECTION("missing product on a composable pair") {
    FiniteAlgebra a = saltus_f42();
    a.set_product(3, 4, 0);
    CHECK(validate_structure(a) == diag(DiagnosticCode::IncompleteStructure, {3, 4}));
  }
  SECTION("unit value out of range") {
    FiniteAlgebra a = saltus_f42();
    a.set_u_right(4, 3);
    CHECK(validate_structure(a) == diag(DiagnosticCode::UnitOutOfRange, {4}));
  }
  SECTION("table entry out of range") {
    FiniteAlgebra a = saltus_f42();
    a.set_product(2, 4, 7);
    CHECK(validate_structure(a) == diag(DiagnosticCode::UnitOutOfRange, {2, 4}));
  }
  SECTION("unit not fixed by its structure maps") {
    FiniteAlgebra a = saltus_f42();
    a.set_inv(2, 1);
    a.set_inv(1, 2);
    CHECK(validate_structure(a) == diag(DiagnosticCode::UnitSelfMapViolation, {1}));
  }
  SECTION("inversion not injective") {
    FiniteAlgebra a = saltus_f42();
    a.set_inv(4, 4);
    a.set_inv(3, 4);
    CHECK(validate_structure(a) == diag(DiagnosticCode::NonInjectiveInversion, {3, 4}));
  }
  SECTION("per-element assignments are scanned before the table") {
    FiniteAlgebra a = saltus_f42();
    a.set_product(1, 2, 3);
    a.set_inv(4, 0);
    CHECK(validate_structure(a) == diag(DiagnosticCode::IncompleteStructure, {4}));
  }
}

TEST_CASE("check_associativity", "[core]") {
  CHECK_FALSE(check_associativity(fx::groupoid_9_3()));
  CHECK_FALSE(check_associativity(fx::monoid_6_1()));

  // With mu(a3,a4) = mu(a4,a3) = a2 the fibre {a2,a3,a4} is Z3, so the
  // table is associative; the failure only shows up at the inverse stage.
  const FiniteAlgebra z3_with_bad_inverse = fx::case_1_1(2, 2);
  CHECK_FALSE(check_associativity(z3_with_bad_inverse));
  CHECK(classify_structure(z3_with_bad_inverse) ==
        CheckVerdict{Level::Monoidoid, diag(DiagnosticCode::NoInverse, {3})});

  CHECK(check_associativity(fx::case_1_1(2, 3)) == diag(DiagnosticCode::NotAssociative, {3, 3, 3}));
  CHECK(check_associativity(fx::case_1_1(3, 3)) == diag(DiagnosticCode::NotAssociative, {3, 3, 4}));

  SECTION("closure failure is reported on the pair") {
    FiniteAlgebra a = fx::groupoid_9_3();
    a.set_product(1, 1, 4);  // alpha(4) = 1 but beta(4) = 2 != beta(1)
    CHECK(check_associativity(a) == diag(DiagnosticCode::NotAssociative, {1, 1}));
  }
}

TEST_CASE("check_identities", "[core]") {
  CHECK_FALSE(check_identities(fx::monoid_6_1()));
  for (int k = 1; k <= 5; ++k) CHECK_FALSE(check_identities(nul_groupoid(k)));

  FiniteAlgebra a = fx::groupoid_9_3();
  a.set_product(1, 1, 4);
  CHECK(check_identities(a) == diag(DiagnosticCode::NoUnit, {1}));
}

TEST_CASE("check_inverses", "[core]") {
  CHECK_FALSE(check_inverses(fx::groupoid_9_3()));
  CHECK(check_inverses(fx::monoid_6_1()) == diag(DiagnosticCode::NoInverse, {5}));
  CHECK(check_inverses(fx::sign_monoidoid()) == diag(DiagnosticCode::NoInverse, {3}));

  SECTION("a non-composable inverse pair fails even when products happen to match") {
    FiniteAlgebra a = saltus_f42();
    a.set_inv(3, 3);
    a.set_inv(4, 4);
    CHECK(check_inverses(a) == diag(DiagnosticCode::NoInverse, {3}));
  }
}

TEST_CASE("classify_structure runs the cascade", "[core]") {
  CHECK(classify_structure(fx::groupoid_9_3()) == CheckVerdict{Level::Groupoid, std::nullopt});
  CHECK(classify_structure(fx::monoid_6_1()) ==
        CheckVerdict{Level::Monoidoid, diag(DiagnosticCode::NoInverse, {5})});
  CHECK(classify_structure(saltus_f42()).is_groupoid());
  CHECK(classify_structure(fx::sign_monoidoid()).level == Level::Monoidoid);

  FiniteAlgebra a = fx::groupoid_9_3();
  a.set_product(1, 1, 4);
  CHECK(classify_structure(a).level == Level::Structure);
  a.set_u_left(5, 0);
  CHECK(classify_structure(a).level == Level::Malformed);
}

TEST_CASE("diagnostic text is stable", "[core]") {
  CHECK(describe(diag(DiagnosticCode::NoInverse, {5})) == "element 5 has no inverse");
  CHECK(describe(diag(DiagnosticCode::NoUnit, {1})) == "element 1 has no unit");
  CHECK(describe(diag(DiagnosticCode::NotAssociative, {3, 3, 4})) == "3, 3, 4 - not associative");
  CHECK(to_string(Level::Monoidoid) == "Monoidoid");
  CHECK(to_string(DiagnosticCode::ProductOnNonComposable) == "ProductOnNonComposable");
}

// ---------------------------------------------------------------------------
// Properties over random perturbations of known groupoids.

namespace {

/// Re-checks a witness against its condition, independently of the stage
/// that produced it.
bool witness_violates(const FiniteAlgebra& a, const Diagnostic& d) {
  const int n = a.order(), m = a.unit_count();
  const auto& w = d.witness;
  const auto comp = [&](Element i, Element j) { return a.u_right(i) == a.u_left(j); };
  switch (d.code) {
    case DiagnosticCode::IncompleteStructure:
      if (w.size() == 1) return a.u_left(w[0]) == 0 || a.u_right(w[0]) == 0 || a.inv(w[0]) == 0;
      return comp(w[0], w[1]) && a.product(w[0], w[1]) == 0;
    case DiagnosticCode::UnitOutOfRange:
      if (w.size() == 1) {
        const Element l = a.u_left(w[0]), r = a.u_right(w[0]), v = a.inv(w[0]);
        return l < 1 || l > m || r < 1 || r > m || v < 1 || v > n;
      }
      return a.product(w[0], w[1]) < 0 || a.product(w[0], w[1]) > n;
    case DiagnosticCode::UnitSelfMapViolation:
      return a.u_left(w[0]) != w[0] || a.u_right(w[0]) != w[0] || a.inv(w[0]) != w[0];
    case DiagnosticCode::UnitNotSurjective: {
      const auto& l = a.u_left_row();
      const auto& r = a.u_right_row();
      return std::find(l.begin(), l.end(), w[0]) == l.end() ||
             std::find(r.begin(), r.end(), w[0]) == r.end();
    }
    case DiagnosticCode::NonInjectiveInversion:
      return w[0] != w[1] && a.inv(w[0]) == a.inv(w[1]);
    case DiagnosticCode::ProductOnNonComposable:
      return !comp(w[0], w[1]) && a.product(w[0], w[1]) != 0;
    case DiagnosticCode::NotAssociative:
      if (w.size() == 2) {
        const Element p = a.product(w[0], w[1]);
        return a.u_left(p) != a.u_left(w[0]) || a.u_right(p) != a.u_right(w[1]);
      }
      return comp(w[0], w[1]) && comp(w[1], w[2]) &&
             a.product(a.product(w[0], w[1]), w[2]) != a.product(w[0], a.product(w[1], w[2]));
    case DiagnosticCode::NoUnit:
      return a.product(a.u_left(w[0]), w[0]) != w[0] || a.product(w[0], a.u_right(w[0])) != w[0];
    case DiagnosticCode::NoInverse: {
      const Element x = w[0], v = a.inv(x);
      return !comp(x, v) || !comp(v, x) || a.product(x, v) != a.u_left(x) ||
             a.product(v, x) != a.u_right(x);
    }
  }
  return false;
}

FiniteAlgebra perturb(FiniteAlgebra a, std::mt19937& rng) {
  const int n = a.order();
  std::uniform_int_distribution<int> el(1, n), val(0, n), kind(0, 9);
  const int edits = 1 + static_cast<int>(rng() % 3);
  for (int e = 0; e < edits; ++e) {
    switch (kind(rng)) {
      case 0: a.set_u_left(el(rng), val(rng)); break;
      case 1: a.set_u_right(el(rng), val(rng)); break;
      case 2: a.set_inv(el(rng), val(rng)); break;
      default: {
        const Element i = el(rng), j = el(rng);
        a.set_product(i, j, composable(a, i, j) ? el(rng) : val(rng));
      }
    }
  }
  return a;
}

}  // namespace

TEST_CASE("cascade verdicts are re-checkable, monotone and match the definition", "[core][property]") {
  std::mt19937 rng(20261019);
  const std::vector<FiniteAlgebra> seeds = {saltus_f42(),         fx::groupoid_9_3(),
                                            fx::monoid_6_1(),     klein_plus_z4(),
                                            trivial_plus_z3(),    nul_groupoid(4),
                                            from_group(symmetric_s3())};
  int groupoids = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const FiniteAlgebra a = perturb(seeds[static_cast<std::size_t>(trial) % seeds.size()], rng);
    const CheckVerdict v = classify_structure(a);
    REQUIRE(v == classify_structure(a));
    REQUIRE(v.is_groupoid() == !v.diagnostic.has_value());
    REQUIRE(v.is_groupoid() == oracle::is_groupoid(a));
    if (v.diagnostic) {
      INFO("code " << to_string(v.diagnostic->code));
      REQUIRE(witness_violates(a, *v.diagnostic));
    } else {
      ++groupoids;
      REQUIRE_FALSE(validate_structure(a));
      REQUIRE_FALSE(check_associativity(a));
      REQUIRE_FALSE(check_identities(a));
      REQUIRE_FALSE(check_inverses(a));
    }
  }
  CHECK(groupoids > 0);
}

TEST_CASE("groupoid invariants hold on known groupoids", "[core][property]") {
  for (const FiniteAlgebra& a : {saltus_f42(), fx::groupoid_9_3(), klein_plus_z4(),
                                 from_group(symmetric_s3()), nul_groupoid(3)}) {
    REQUIRE(is_groupoid(a));
    const int n = a.order();
    for (Element i = 1; i <= n; ++i) {
      // Units are idempotent; inversion is an anchor-swapping involution.
      if (a.is_unit(i)) CHECK(a.product(i, i) == i);
      CHECK(a.inv(a.inv(i)) == i);
      CHECK(a.u_left(a.inv(i)) == a.u_right(i));
      CHECK(a.u_right(a.inv(i)) == a.u_left(i));
      std::vector<Element> row, col;
      for (Element j = 1; j <= n; ++j) {
        // 0-sentinel coherence.
        CHECK((a.product(i, j) == kUndefined) == !composable(a, i, j));
        if (!composable(a, i, j)) continue;
        const Element p = a.product(i, j);
        CHECK(a.u_left(p) == a.u_left(i));
        CHECK(a.u_right(p) == a.u_right(j));
        row.push_back(p);
        // Unit uniqueness on the right.
        if (a.is_unit(j) && p == i) CHECK(j == a.u_right(i));
      }
      for (Element j = 1; j <= n; ++j) {
        if (!composable(a, j, i)) continue;
        col.push_back(a.product(j, i));
        if (a.is_unit(j) && a.product(j, i) == i) CHECK(j == a.u_left(i));
      }
      // Cancellation.
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      CHECK(std::adjacent_find(row.begin(), row.end()) == row.end());
      CHECK(std::adjacent_find(col.begin(), col.end()) == col.end());
    }
  }
}
