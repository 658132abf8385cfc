#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgbetti/checked.hpp"
#include "sgbetti/semigroup.hpp"

namespace sgb {

// A face of the divisor complex: strictly increasing positions into the
// generator list.  The empty face has dimension -1.
struct Face {
  std::vector<int> indices;
  int dim() const { return static_cast<int>(indices.size()) - 1; }
  bool operator==(const Face& o) const { return indices == o.indices; }
};

// The squarefree divisor complex of a degree lambda: a generator subset F is a
// face iff lambda minus the sum over F stays in the semigroup.  Faces are
// grouped by dimension; within one dimension they are ordered lexicographically
// by index sequence, and that order is part of the contract (it fixes the row
// and column order of every boundary matrix).  When lambda itself is not in
// the semigroup the complex is void: no faces at all, not even the empty one.
class SimplicialDelta {
 public:
  i64 lambda() const { return lambda_; }
  bool is_void() const { return by_dim_.empty(); }
  bool has_empty_face() const { return !by_dim_.empty(); }
  // Largest dimension with a face: -1 when only the empty face exists,
  // -2 for the void complex.
  int dim() const { return static_cast<int>(by_dim_.size()) - 2; }
  // Faces of dimension r (r >= -1); an empty list when there are none.
  const std::vector<Face>& faces(int r) const;
  // Values (not positions) of the 0-dimensional faces, ascending.
  std::vector<i64> vertex_values(const NumericalSemigroup& S) const;

 private:
  friend SimplicialDelta build_delta(const NumericalSemigroup&, i64, int);
  i64 lambda_ = 0;
  // by_dim_[r+1] = faces of dimension r; empty vector overall means void.
  std::vector<std::vector<Face>> by_dim_;
};

// Builds the complex, optionally truncated at max_dim (faces of larger
// dimension are not enumerated).  Subsets of faces are themselves faces
// because the semigroup is closed under addition, so ascending-index
// extension enumerates every face exactly once, in lexicographic order.
SimplicialDelta build_delta(const NumericalSemigroup& S, i64 lam,
                            int max_dim = std::numeric_limits<int>::max());

// Dense integer matrix, row-major.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<i64> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  i64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  i64 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// The boundary map delta_r of the augmented oriented chain complex: rows are
// r-faces, columns are (r-1)-faces, and the entry at (F, F with its j-th
// vertex removed) is (-1)^j.  For r = 0 this is the all-ones column onto the
// empty face.  Empty matrices (no faces on either side) are legal.
struct BoundaryMatrix {
  int r = 0;
  Matrix m;
};

BoundaryMatrix boundary_matrix(const SimplicialDelta& D, int r);

// Rank over the rationals by fraction-free (Bareiss) elimination carried out
// in 128-bit integers; any overflow is a hard error, never a wrong rank.
int rank_exact(const Matrix& M);

// Rank over the field with p elements (p prime).  Always <= rank_exact; used
// as a probabilistic cross-check with a random 31-bit prime.
int rank_mod_prime(const Matrix& M, std::uint64_t p);

// Process-wide random 31-bit prime, chosen once.
std::uint64_t random_31bit_prime();

// Graded Betti number: beta_{i,lambda} = nullity(delta_{i-1}) - rank(delta_i)
// over the rationals, with delta_{-1} the zero map.  Degrees whose complex is
// void (lambda not in the semigroup) and complexes lacking (i-1)-faces give 0.
i64 graded_betti(const NumericalSemigroup& S, i64 lam, int i);

// All beta_{i,lambda} for i = 0 .. dim+1 from one full complex build.
std::vector<i64> betti_column(const NumericalSemigroup& S, i64 lam);

// A degree window for first-Betti-number sweeps, with its provenance flag.
struct BettiWindow {
  i64 lo = 0;
  i64 hi = 0;
  bool proven = false;
  std::string note;
};

// Default window: [2e+2, 4e-2] (established) when the generators form an
// interval-with-two-holes family; otherwise the heuristic
// [0, frobenius + 2*max_generator + 2], flagged unproven.
BettiWindow default_beta1_window(const NumericalSemigroup& S);

struct Beta1Row {
  i64 lambda;
  i64 beta;
};

struct Beta1Total {
  i64 total = 0;
  std::vector<Beta1Row> table;  // one row per lambda in window cap semigroup
  BettiWindow window;
};

// Sum of beta_{1,lambda} over the window intersected with the semigroup.
// jobs > 1 evaluates distinct lambdas concurrently; the table is assembled in
// ascending lambda order regardless of completion order.
Beta1Total betti1_total(const NumericalSemigroup& S,
                        std::optional<std::pair<i64, i64>> window = std::nullopt,
                        int jobs = 1);

}  // namespace sgb
