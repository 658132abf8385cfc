#include "sgbetti/sally.hpp"

#include <algorithm>

namespace sgb {

std::vector<i64> sally_generators(const SallyParams& p) {
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(p.e - 2));
  for (i64 j = 0; j < p.e; ++j) {
    if (j == p.m || j == p.n) continue;
    out.push_back(p.e + j);
  }
  return out;
}

i64 sally_frobenius(const SallyParams& p) {
  if (p.m == 2 && p.n == 3) return 2 * p.e + 3;
  return p.e + p.n;
}

bool sally_is_gorenstein(const SallyParams& p) { return p.m == 2 && p.n == 3; }

i64 mu_formula(const SallyParams& p) {
  const i64 base = choose2(p.e - 2);
  const bool small_pair =
      (p.m == 2 && (p.n == 4 || p.n == 5)) || (p.m == 3 && p.n == 4);
  if (small_pair) return base;
  if (p.m == 2) return base - 1;  // here n == 3 or n >= 6
  return base - 2;
}

i64 beta1_special(const SallyParams& p, i64 lam) {
  const i64 e = p.e, m = p.m, n = p.n;
  if (lam == 2 * e + 2 * m) {
    if (2 <= m && m <= (n - 1) / 2) return m - 1;
    if ((n + 1) / 2 <= m && m <= (e - 1) / 2) return m - 2;
    return e - 2 - m;
  }
  if (lam == 2 * e + m + n) {
    if (m <= e - n - 1) return (m + n) / 2 - 1;
    return e - 3 - (m + n - 3) / 2;
  }
  if (lam == 2 * e + 2 * n) {
    if (3 <= n && n <= (e - 1) / 2) return n - 2;
    if ((e + 1) / 2 <= n && n <= (e + m - 1) / 2) return e - n - 2;
    return e - n - 1;
  }
  throw NotSpecialLambda("lambda " + std::to_string(lam) +
                         " is not one of the three special values");
}

i64 rank1_special(const SallyParams& p, i64 lam) {
  const i64 e = p.e, m = p.m, n = p.n;
  if (lam == 2 * e + 2 * m) {
    if (2 <= m && m <= (n - 1) / 2) return m;
    if ((n + 1) / 2 <= m && m <= (e - 1) / 2) return m - 1;
    return m - 2;
  }
  if (lam == 2 * e + m + n) {
    if (m <= e - n - 1) return (m + n - 1) / 2;
    return (m + n - 3) / 2;
  }
  if (lam == 2 * e + 2 * n) {
    if (3 <= n && n <= (e - 1) / 2) return n - 1;
    return n - 2;
  }
  throw NotSpecialLambda("lambda " + std::to_string(lam) +
                         " is not one of the three special values");
}

i64 box_piecewise(const SallyParams& p, i64 lam) {
  const i64 e = p.e, m = p.m, n = p.n;
  if (2 * e + 2 <= lam && lam <= 2 * e + m - 1) return lam / 2 - e;
  if (2 * e + m <= lam && lam <= 2 * e + n - 1) return lam / 2 - e - 1;
  if (2 * e + n <= lam && lam <= 3 * e - 1) return lam / 2 - e - 2;
  if (3 * e <= lam && lam <= 3 * e + m - 1) return 2 * e - 3 - (lam - 1) / 2;
  if (3 * e + m <= lam && lam <= 3 * e + n - 1) return 2 * e - 2 - (lam - 1) / 2;
  if (3 * e + n <= lam && lam <= 4 * e - 2) return 2 * e - 1 - (lam - 1) / 2;
  throw OutOfBoxDomain("lambda " + std::to_string(lam) + " is outside [2e+2, 4e-2]");
}

i64 beta1_box(const SallyParams& p, i64 lam) {
  if (p.m < 3) throw OutOfBoxDomain("piecewise table proven only for m >= 3");
  if (p.m == 3 && p.n == 4) throw OutOfBoxDomain("piecewise table proven only for (m,n) != (3,4)");
  if (lam < 2 * p.e + 2 || lam > 4 * p.e - 2)
    throw OutOfBoxDomain("lambda " + std::to_string(lam) + " is outside [2e+2, 4e-2]");
  for (i64 s : special_lambdas(p)) {
    if (lam == s)
      throw OutOfBoxDomain("lambda " + std::to_string(lam) +
                           " is a special value; use beta1_special");
  }
  return box_piecewise(p, lam);
}

i64 box_sum(const SallyParams& p) {
  i64 total = 0;
  for (i64 lam = 2 * p.e + 2; lam <= 4 * p.e - 2; ++lam) total += box_piecewise(p, lam);
  return total;
}

ZeroFaceIndexSet zero_face_index_set(const SallyParams& p, i64 lam) {
  const i64 e = p.e, m = p.m, n = p.n;
  if (lam < 2 * e + 2 || lam > 4 * e - 2)
    throw OutOfWindow("lambda " + std::to_string(lam) + " is outside [2e+2, 4e-2]");
  IndexWindow w;
  w.x = lam - 2 * e - 2;
  for (i64 a = 0; a <= w.x + 2; ++a) {
    if (a == m || a == n) continue;
    w.A.push_back(a);
  }
  w.B = {w.x + 2 - m, w.x + 2 - n};
  w.Bprime = {w.x, w.x - 1, w.x - 1 - e};
  const std::vector<i64>& excluded = (m == 2 && n == 3) ? w.Bprime : w.B;
  ZeroFaceIndexSet out;
  for (i64 j : w.A) {
    if (j > e - 1) break;  // past the variable range
    if (std::find(excluded.begin(), excluded.end(), j) != excluded.end()) continue;
    out.indices.push_back(j);
  }
  out.window = std::move(w);
  return out;
}

i64 width_bound(const SallyParams& p) { return choose2(p.e); }

bool width_conjecture_holds(const SallyParams& p) { return mu_formula(p) <= width_bound(p); }

std::optional<SallyParams> detect_sally(const NumericalSemigroup& S) {
  const i64 e = S.multiplicity();
  if (e < 5) return std::nullopt;
  const auto& gens = S.generators();
  if (static_cast<i64>(gens.size()) != e - 2) return std::nullopt;
  std::vector<bool> present(static_cast<std::size_t>(e), false);
  for (i64 g : gens) {
    if (g < e || g > 2 * e - 1) return std::nullopt;
    present[static_cast<std::size_t>(g - e)] = true;
  }
  std::vector<i64> missing;
  for (i64 j = 0; j < e; ++j) {
    if (!present[static_cast<std::size_t>(j)]) missing.push_back(j);
  }
  if (missing.size() != 2) return std::nullopt;
  const i64 m = missing[0], n = missing[1];
  if (!(2 <= m && m < n && n <= e - 2)) return std::nullopt;
  return SallyParams(e, m, n);
}

}  // namespace sgb
