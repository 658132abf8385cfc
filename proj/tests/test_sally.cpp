#include <algorithm>
#include <vector>

#include "doctest.h"
#include "sgbetti/sally.hpp"

using sgb::i64;
using sgb::SallyParams;

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(SallyParams(5, 2, 3));
  CHECK_NOTHROW(SallyParams(10, 2, 8));
  CHECK_THROWS_AS(SallyParams(5, 2, 4), sgb::InvalidParams);   // n > e-2
  CHECK_THROWS_AS(SallyParams(10, 1, 3), sgb::InvalidParams);  // m < 2
  CHECK_THROWS_AS(SallyParams(10, 3, 3), sgb::InvalidParams);  // m == n
  CHECK_THROWS_AS(SallyParams(10, 5, 4), sgb::InvalidParams);  // m > n
  CHECK_THROWS_AS(SallyParams(4, 2, 3), sgb::InvalidParams);   // forces e >= 5
}

TEST_CASE("generator lists") {
  CHECK(sgb::sally_generators(SallyParams(7, 2, 3)) == std::vector<i64>{7, 8, 11, 12, 13});
  CHECK(sgb::sally_generators(SallyParams(10, 2, 6)) ==
        std::vector<i64>{10, 11, 13, 14, 15, 17, 18, 19});
  CHECK(sgb::sally_generators(SallyParams(5, 2, 3)) == std::vector<i64>{5, 6, 9});
}

TEST_CASE("frobenius closed form vs apery computation") {
  for (i64 e = 5; e <= 12; ++e) {
    for (i64 m = 2; m < e - 2; ++m) {
      for (i64 n = m + 1; n <= e - 2; ++n) {
        const SallyParams p(e, m, n);
        CAPTURE(e);
        CAPTURE(m);
        CAPTURE(n);
        const i64 expected = (m == 2 && n == 3) ? 2 * e + 3 : e + n;
        CHECK(sgb::sally_frobenius(p) == expected);
        CHECK(sgb::sally_frobenius(p) == sgb::sally_semigroup(p).frobenius());
      }
    }
  }
}

TEST_CASE("gorenstein closed form vs symmetry") {
  for (i64 e = 5; e <= 12; ++e) {
    for (i64 m = 2; m < e - 2; ++m) {
      for (i64 n = m + 1; n <= e - 2; ++n) {
        const SallyParams p(e, m, n);
        CAPTURE(e);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(sgb::sally_is_gorenstein(p) == ((m == 2 && n == 3)));
        CHECK(sgb::sally_is_gorenstein(p) == sgb::sally_semigroup(p).is_symmetric());
      }
    }
  }
}

TEST_CASE("generator-count closed form") {
  CHECK(sgb::mu_formula(SallyParams(10, 2, 4)) == 28);  // C(8,2)
  CHECK(sgb::mu_formula(SallyParams(10, 2, 6)) == 27);  // C(8,2) - 1
  CHECK(sgb::mu_formula(SallyParams(10, 3, 5)) == 26);  // C(8,2) - 2
  CHECK(sgb::mu_formula(SallyParams(10, 2, 5)) == 28);
  CHECK(sgb::mu_formula(SallyParams(10, 3, 4)) == 28);
  CHECK(sgb::mu_formula(SallyParams(10, 2, 3)) == 27);
  CHECK(sgb::mu_formula(SallyParams(12, 4, 5)) == 43);  // C(10,2) - 2
  CHECK(sgb::mu_formula(SallyParams(7, 2, 3)) == 9);
}

TEST_CASE("special degrees and their first Betti values") {
  CHECK(sgb::special_lambdas(SallyParams(10, 2, 6)) == std::vector<i64>{24, 28, 32});

  // Gorenstein pair: the middle special degree.
  for (i64 e = 5; e <= 12; ++e) {
    const SallyParams p(e, 2, 3);
    CHECK(sgb::beta1_special(p, 2 * e + 5) == 1);
  }
  CHECK(sgb::beta1_special(SallyParams(5, 2, 3), 16) == 0);
  CHECK(sgb::beta1_special(SallyParams(10, 3, 5), 26) == 1);

  CHECK_THROWS_AS(sgb::beta1_special(SallyParams(10, 3, 5), 27), sgb::NotSpecialLambda);
  CHECK_THROWS_AS(sgb::rank1_special(SallyParams(10, 3, 5), 27), sgb::NotSpecialLambda);
}

TEST_CASE("special-degree values are consistent with their edge ranks") {
  // At each special degree the table value equals (vertex count) - 1 - rank,
  // with the vertex count from the zero-face predictor.
  for (i64 e = 8; e <= 12; ++e) {
    for (i64 m = 2; m < e - 2; ++m) {
      for (i64 n = m + 1; n <= e - 2; ++n) {
        const SallyParams p(e, m, n);
        for (i64 lam : sgb::special_lambdas(p)) {
          CAPTURE(e);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(lam);
          const i64 vertices =
              static_cast<i64>(sgb::zero_face_index_set(p, lam).indices.size());
          CHECK(sgb::beta1_special(p, lam) ==
                vertices - 1 - sgb::rank1_special(p, lam));
        }
      }
    }
  }
}

TEST_CASE("piecewise window values") {
  for (i64 e = 6; e <= 14; ++e) {
    for (i64 m = 2; m < e - 2; ++m) {
      for (i64 n = m + 1; n <= e - 2; ++n) {
        const SallyParams p(e, m, n);
        // When m = 2 the lowest window degree has a one-monomial fiber (offset
        // 2 is not a variable), so the first branch is empty and the value is 0.
        CHECK(sgb::box_piecewise(p, 2 * e + 2) == (m >= 3 ? 1 : 0));
        CHECK(sgb::box_piecewise(p, 4 * e - 2) == 1);
      }
    }
  }
  CHECK(sgb::box_piecewise(SallyParams(10, 3, 6), 26) == 1);
  CHECK_THROWS_AS(sgb::box_piecewise(SallyParams(10, 3, 6), 21), sgb::OutOfBoxDomain);
  CHECK_THROWS_AS(sgb::box_piecewise(SallyParams(10, 3, 6), 39), sgb::OutOfBoxDomain);
}

TEST_CASE("guarded piecewise accessor") {
  CHECK(sgb::beta1_box(SallyParams(10, 3, 6), 27) == 1);
  CHECK(sgb::beta1_box(SallyParams(10, 3, 6), 22) == 1);
  // m = 2 is outside the proven domain.
  CHECK_THROWS_AS(sgb::beta1_box(SallyParams(10, 2, 6), 27), sgb::OutOfBoxDomain);
  // (3,4) is outside the proven domain.
  CHECK_THROWS_AS(sgb::beta1_box(SallyParams(10, 3, 4), 27), sgb::OutOfBoxDomain);
  // Special degrees (here 26, 29, 32) have their own table.
  CHECK_THROWS_AS(sgb::beta1_box(SallyParams(10, 3, 6), 26), sgb::OutOfBoxDomain);
  CHECK_THROWS_AS(sgb::beta1_box(SallyParams(10, 3, 6), 32), sgb::OutOfBoxDomain);
}

TEST_CASE("window sum identity") {
  for (i64 e = 6; e <= 40; ++e) {
    for (i64 m = 2; m < e - 2; ++m) {
      for (i64 n = m + 1; n <= e - 2; ++n) {
        const SallyParams p(e, m, n);
        CAPTURE(e);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(sgb::box_sum(p) == sgb::choose2(e - 2) - 3);
      }
    }
  }
}

TEST_CASE("zero-face predictor examples") {
  CHECK(sgb::zero_face_index_set(SallyParams(10, 3, 6), 22).indices ==
        std::vector<i64>{0, 1, 2});
  CHECK(sgb::zero_face_index_set(SallyParams(10, 4, 7), 30).indices.size() == 6);
  CHECK_THROWS_AS(sgb::zero_face_index_set(SallyParams(10, 3, 6), 21), sgb::OutOfWindow);
  CHECK_THROWS_AS(sgb::zero_face_index_set(SallyParams(10, 3, 6), 39), sgb::OutOfWindow);
}

TEST_CASE("zero-face predictor matches direct membership enumeration") {
  for (i64 e = 5; e <= 10; ++e) {
    for (i64 m = 2; m < e - 2; ++m) {
      for (i64 n = m + 1; n <= e - 2; ++n) {
        const SallyParams p(e, m, n);
        const sgb::NumericalSemigroup S = sgb::sally_semigroup(p);
        for (i64 lam = 2 * e + 2; lam <= 4 * e - 2; ++lam) {
          std::vector<i64> direct;
          for (i64 j = 0; j <= e - 1; ++j) {
            if (j == m || j == n) continue;
            if (S.contains(lam - (e + j))) direct.push_back(j);
          }
          CAPTURE(e);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(lam);
          CHECK(sgb::zero_face_index_set(p, lam).indices == direct);
        }
      }
    }
  }
}

TEST_CASE("width bound") {
  for (i64 e = 5; e <= 30; ++e) {
    for (i64 m = 2; m < e - 2; ++m) {
      for (i64 n = m + 1; n <= e - 2; ++n) {
        const SallyParams p(e, m, n);
        CHECK(sgb::width_bound(p) == sgb::choose2(e));
        CHECK(sgb::width_conjecture_holds(p));
      }
    }
  }
}

TEST_CASE("family recognition") {
  const SallyParams p(10, 2, 6);
  const auto detected = sgb::detect_sally(sgb::sally_semigroup(p));
  REQUIRE(detected.has_value());
  CHECK(*detected == p);
  CHECK(!sgb::detect_sally(sgb::NumericalSemigroup({3, 5})).has_value());
  CHECK(!sgb::detect_sally(sgb::NumericalSemigroup({7, 8, 9, 10, 11, 12, 13})).has_value());
}
