#pragma once

#include <optional>
#include <vector>

#include "sgbetti/checked.hpp"
#include "sgbetti/errors.hpp"
#include "sgbetti/semigroup.hpp"

namespace sgb {

// Parameters (e, m, n) of the interval-with-two-holes family: the semigroup
// generated by {e, e+1, ..., 2e-1} with e+m and e+n removed.  Validity
// requires 2 <= m < n <= e-2, which forces e >= 5.
struct SallyParams {
  i64 e;
  i64 m;
  i64 n;

  SallyParams(i64 e_, i64 m_, i64 n_) : e(e_), m(m_), n(n_) {
    if (!(2 <= m && m < n && n <= e - 2))
      throw InvalidParams("need 2 <= m < n <= e-2, got (e,m,n) = (" + std::to_string(e) + "," +
                          std::to_string(m) + "," + std::to_string(n) + ")");
  }

  bool operator==(const SallyParams& o) const { return e == o.e && m == o.m && n == o.n; }
};

// The index sets that predict which single generators divide lambda inside the
// semigroup, written in terms of x = lambda - 2e - 2:
//   A      = [0, x+2] minus {m, n}
//   B      = {x+2-m, x+2-n}
//   Bprime = {x, x-1, x-1-e}   (used instead of B when (m,n) = (2,3))
struct IndexWindow {
  i64 x;
  std::vector<i64> A;
  std::vector<i64> B;
  std::vector<i64> Bprime;
};

struct ZeroFaceIndexSet {
  IndexWindow window;
  // Sorted offsets j such that X_j's value e+j can be subtracted from lambda
  // staying inside the semigroup: (J cap A) \ B, with B replaced by Bprime
  // when (m,n) = (2,3).
  std::vector<i64> indices;
};

// Sorted generator list {e..2e-1} \ {e+m, e+n}; always e-2 values with gcd 1.
std::vector<i64> sally_generators(const SallyParams& p);

// Closed form: 2e+3 when (m,n) = (2,3), otherwise e+n.
i64 sally_frobenius(const SallyParams& p);

// Closed form: the semigroup ring is Gorenstein exactly for (m,n) = (2,3).
bool sally_is_gorenstein(const SallyParams& p);

// Closed form for the minimal number of defining-ideal generators:
//   C(e-2,2)     for (m,n) in {(2,4), (2,5), (3,4)},
//   C(e-2,2) - 1 for m = 2 with n = 3 or n >= 6,
//   C(e-2,2) - 2 otherwise.
i64 mu_formula(const SallyParams& p);

// The three lambda values whose first Betti numbers need their own tables.
inline std::vector<i64> special_lambdas(const SallyParams& p) {
  return {2 * p.e + 2 * p.m, 2 * p.e + p.m + p.n, 2 * p.e + 2 * p.n};
}

// Piecewise closed form for beta_1 at the three special lambdas.
// Throws NotSpecialLambda for any other lambda.
i64 beta1_special(const SallyParams& p, i64 lam);

// Companion table: the rank of the edge boundary map at the three special
// lambdas (the dimension of the image of delta_1).
i64 rank1_special(const SallyParams& p, i64 lam);

// The six-branch piecewise value on the window [2e+2, 4e-2], evaluated
// mechanically with no further preconditions.  Throws OutOfBoxDomain when
// lambda is outside the window.
i64 box_piecewise(const SallyParams& p, i64 lam);

// box_piecewise with the full proven-domain guard: requires m >= 3,
// (m,n) != (3,4), lambda in window and not special.  Throws OutOfBoxDomain
// otherwise; callers fall back to the exact oracle.
i64 beta1_box(const SallyParams& p, i64 lam);

// Sum of box_piecewise over the whole window [2e+2, 4e-2] (special lambdas
// included).  Equals C(e-2,2) - 3 for every valid (m,n) and both parities of e.
i64 box_sum(const SallyParams& p);

// Zero-dimensional-face predictor; lambda must lie in [2e+2, 4e-2]
// (OutOfWindow otherwise).  The result provably matches direct membership
// enumeration over the variable offsets.
ZeroFaceIndexSet zero_face_index_set(const SallyParams& p, i64 lam);

// Width-based generator-count bound C(wd+1, 2) with wd = e-1, and whether the
// closed-form generator count respects it.
i64 width_bound(const SallyParams& p);
bool width_conjecture_holds(const SallyParams& p);

// Recognizes a semigroup of this family from its minimal generating set.
std::optional<SallyParams> detect_sally(const NumericalSemigroup& S);

// Convenience: the semigroup itself.
inline NumericalSemigroup sally_semigroup(const SallyParams& p) {
  return NumericalSemigroup(sally_generators(p));
}

}  // namespace sgb
