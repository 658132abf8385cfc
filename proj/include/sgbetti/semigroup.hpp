#pragma once

#include <vector>

#include "sgbetti/checked.hpp"
#include "sgbetti/errors.hpp"

namespace sgb {

// A numerical semigroup: the set of all nonnegative integer combinations of a
// finite generator list with gcd 1.  Immutable after construction; all methods
// are pure and safe to call concurrently.
class NumericalSemigroup {
 public:
  // Accepts any nonempty list of positive integers with gcd 1.  Duplicates are
  // removed, the list is sorted, and redundant generators (those expressible
  // as sums of smaller semigroup elements) are dropped, so `generators()` is
  // always a minimal generating set.
  explicit NumericalSemigroup(std::vector<i64> raw_generators);

  // Minimal generating set, strictly increasing.
  const std::vector<i64>& generators() const { return gens_; }
  // Smallest nonzero element.
  i64 multiplicity() const { return gens_.front(); }
  // apery()[r] = least element congruent to r modulo multiplicity(); entry 0 is 0.
  const std::vector<i64>& apery() const { return apery_; }
  // Largest integer not in the semigroup; -1 when the semigroup is all of N.
  i64 frobenius() const { return frobenius_; }
  // Number of positive integers missing from the semigroup.
  i64 genus() const { return genus_; }
  i64 embedding_dimension() const { return static_cast<i64>(gens_.size()); }
  i64 width() const { return gens_.back() - gens_.front(); }

  // Membership.  Negative values are allowed and are never members.
  bool contains(i64 x) const;

  // All x in [0, frobenius] that are not members, ascending.  Size == genus().
  std::vector<i64> gaps() const;

  // True iff the gap count equals (frobenius+1)/2 with frobenius odd -- the
  // symmetry (Gorenstein) criterion.
  bool is_symmetric() const;
  // Independent check: x is a gap exactly when frobenius - x is a member.
  // Must always agree with is_symmetric(); kept separate as a test oracle.
  bool is_symmetric_pointwise() const;

 private:
  std::vector<i64> gens_;
  std::vector<i64> apery_;
  i64 frobenius_ = 0;
  i64 genus_ = 0;
};

// Named constructor mirroring the library's operation vocabulary.
inline NumericalSemigroup make_semigroup(std::vector<i64> raw_generators) {
  return NumericalSemigroup(std::move(raw_generators));
}

}  // namespace sgb
