#include "sgbetti/hochster.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "sgbetti/sally.hpp"

namespace sgb {

const std::vector<Face>& SimplicialDelta::faces(int r) const {
  static const std::vector<Face> kEmpty;
  const int slot = r + 1;
  if (slot < 0 || slot >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[static_cast<std::size_t>(slot)];
}

std::vector<i64> SimplicialDelta::vertex_values(const NumericalSemigroup& S) const {
  std::vector<i64> out;
  for (const Face& f : faces(0)) out.push_back(S.generators()[static_cast<std::size_t>(f.indices[0])]);
  return out;
}

SimplicialDelta build_delta(const NumericalSemigroup& S, i64 lam, int max_dim) {
  SimplicialDelta D;
  D.lambda_ = lam;
  if (lam < 0 || !S.contains(lam)) return D;  // void complex

  const auto& gens = S.generators();
  const int g = static_cast<int>(gens.size());
  D.by_dim_.emplace_back();  // dimension -1
  D.by_dim_.back().push_back(Face{});

  // Depth-first ascending extension.  Recursion depth is at most lam/mult.
  std::vector<int> cur;
  auto record = [&D](const std::vector<int>& idx) {
    const std::size_t slot = idx.size();  // dimension + 1
    if (D.by_dim_.size() <= slot) D.by_dim_.resize(slot + 1);
    D.by_dim_[slot].push_back(Face{idx});
  };
  auto dfs = [&](auto&& self, int start, i64 rem) -> void {
    if (static_cast<int>(cur.size()) - 1 >= max_dim) return;
    for (int k = start; k < g; ++k) {
      const i64 nrem = rem - gens[static_cast<std::size_t>(k)];
      if (nrem < 0 || !S.contains(nrem)) continue;
      cur.push_back(k);
      record(cur);
      self(self, k + 1, nrem);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, lam);
  return D;
}

BoundaryMatrix boundary_matrix(const SimplicialDelta& D, int r) {
  const auto& rows_faces = D.faces(r);
  const auto& cols_faces = D.faces(r - 1);
  BoundaryMatrix B;
  B.r = r;
  B.m = Matrix(rows_faces.size(), cols_faces.size());
  if (rows_faces.empty() || cols_faces.empty()) return B;

  std::map<std::vector<int>, std::size_t> col_of;
  for (std::size_t c = 0; c < cols_faces.size(); ++c) col_of[cols_faces[c].indices] = c;

  std::vector<int> sub;
  for (std::size_t i = 0; i < rows_faces.size(); ++i) {
    const auto& idx = rows_faces[i].indices;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      sub.assign(idx.begin(), idx.end());
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
      const auto it = col_of.find(sub);
      if (it == col_of.end())
        throw Error("internal: complex is not downward closed");
      B.m.at(i, it->second) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return B;
}

int rank_exact(const Matrix& M) {
  const std::size_t R = M.rows, C = M.cols;
  if (R == 0 || C == 0) return 0;
  std::vector<i128> a(M.a.begin(), M.a.end());
  auto at = [&](std::size_t i, std::size_t j) -> i128& { return a[i * C + j]; };

  i128 prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = R;
    for (std::size_t r = rank; r < R; ++r) {
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv == R) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < C; ++j) std::swap(at(piv, j), at(rank, j));
    }
    const i128 pivot = at(rank, col);
    for (std::size_t r = rank + 1; r < R; ++r) {
      const i128 factor = at(r, col);
      if (factor == 0 && pivot == prev) {
        // Row update would be the identity; skip the inner loop.
        continue;
      }
      for (std::size_t j = col + 1; j < C; ++j) {
        const i128 t =
            checked_sub128(checked_mul128(pivot, at(r, j)), checked_mul128(factor, at(rank, j)));
        if (t % prev != 0) throw Error("internal: fraction-free elimination lost exactness");
        at(r, j) = t / prev;
      }
      at(r, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_mod_prime(const Matrix& M, std::uint64_t p) {
  const std::size_t R = M.rows, C = M.cols;
  if (R == 0 || C == 0) return 0;
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t k = 0; k < R * C; ++k) {
    const i64 v = M.a[k] % static_cast<i64>(p);
    a[k] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<i64>(p) : v);
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * C + j]; };
  auto pow_mod = [p](std::uint64_t b, std::uint64_t x) {
    std::uint64_t r = 1;
    while (x) {
      if (x & 1) r = r * b % p;
      b = b * b % p;
      x >>= 1;
    }
    return r;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = R;
    for (std::size_t r = rank; r < R; ++r) {
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv == R) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < C; ++j) std::swap(at(piv, j), at(rank, j));
    }
    const std::uint64_t inv = pow_mod(at(rank, col), p - 2);
    for (std::size_t j = col; j < C; ++j) at(rank, j) = at(rank, j) * inv % p;
    for (std::size_t r = rank + 1; r < R; ++r) {
      const std::uint64_t f = at(r, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < C; ++j) at(r, j) = (at(r, j) + (p - f) * at(rank, j)) % p;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::uint64_t random_31bit_prime() {
  static const std::uint64_t prime = [] {
    std::mt19937_64 rng(std::random_device{}());
    std::uniform_int_distribution<std::uint64_t> dist(1ull << 30, (1ull << 31) - 1);
    auto is_prime = [](std::uint64_t v) {
      if (v % 2 == 0) return v == 2;
      for (std::uint64_t d = 3; d * d <= v; d += 2) {
        if (v % d == 0) return false;
      }
      return true;
    };
    std::uint64_t v = dist(rng) | 1;
    while (!is_prime(v)) v += 2;
    return v;
  }();
  return prime;
}

i64 graded_betti(const NumericalSemigroup& S, i64 lam, int i) {
  if (i < 0) throw InvalidParams("Betti index must be nonnegative");
  if (lam < 0 || !S.contains(lam)) return 0;
  const SimplicialDelta D = build_delta(S, lam, i);
  const auto& below = D.faces(i - 1);
  if (below.empty()) return 0;
  const int rk_below = (i >= 1) ? rank_exact(boundary_matrix(D, i - 1).m) : 0;
  const int rk_here = rank_exact(boundary_matrix(D, i).m);
  const i64 beta = static_cast<i64>(below.size()) - rk_below - rk_here;
  if (beta < 0) throw Error("internal: negative Betti number");
  return beta;
}

std::vector<i64> betti_column(const NumericalSemigroup& S, i64 lam) {
  if (lam < 0 || !S.contains(lam)) return {};
  const SimplicialDelta D = build_delta(S, lam);
  const int d = D.dim();
  std::vector<int> rk(static_cast<std::size_t>(d + 2), 0);  // rk[r] = rank of delta_r, r in [0, d]
  for (int r = 0; r <= d; ++r)
    rk[static_cast<std::size_t>(r)] = rank_exact(boundary_matrix(D, r).m);
  std::vector<i64> betti;
  for (int i = 0; i <= d + 1; ++i) {
    const i64 f_below = static_cast<i64>(D.faces(i - 1).size());
    const i64 rk_below = (i >= 1) ? rk[static_cast<std::size_t>(i - 1)] : 0;
    const i64 rk_here = (i <= d) ? rk[static_cast<std::size_t>(i)] : 0;
    betti.push_back(f_below - rk_below - rk_here);
  }
  return betti;
}

BettiWindow default_beta1_window(const NumericalSemigroup& S) {
  BettiWindow w;
  if (auto p = detect_sally(S)) {
    w.lo = 2 * p->e + 2;
    w.hi = 4 * p->e - 2;
    w.proven = true;
    w.note = "established window for the interval-with-two-holes family";
  } else {
    w.lo = 0;
    w.hi = checked_add(S.frobenius(), checked_add(checked_mul(2, S.generators().back()), 2));
    w.proven = false;
    w.note = "heuristic window for arbitrary semigroups; not proven complete";
  }
  return w;
}

Beta1Total betti1_total(const NumericalSemigroup& S, std::optional<std::pair<i64, i64>> window,
                        int jobs) {
  Beta1Total out;
  if (window) {
    out.window.lo = window->first;
    out.window.hi = window->second;
    out.window.proven = false;
    out.window.note = "caller-supplied window";
  } else {
    out.window = default_beta1_window(S);
  }

  std::vector<i64> lams;
  for (i64 lam = out.window.lo; lam <= out.window.hi; ++lam) {
    if (S.contains(lam)) lams.push_back(lam);
  }
  std::vector<i64> betas(lams.size(), 0);

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(lams.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < lams.size(); ++k) betas[k] = graded_betti(S, lams[k], 1);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::mutex fail_mutex;
    std::exception_ptr failure;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        try {
          for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= lams.size()) break;
            betas[k] = graded_betti(S, lams[k], 1);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(fail_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t k = 0; k < lams.size(); ++k) {
    out.table.push_back(Beta1Row{lams[k], betas[k]});
    out.total += betas[k];
  }
  return out;
}

}  // namespace sgb
