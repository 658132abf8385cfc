#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgbetti/checked.hpp"
#include "sgbetti/errors.hpp"
#include "sgbetti/sally.hpp"

namespace sgb {

// The variable index set J = [0, e-1] \ {m, n}.  Variable X_j has S-degree
// e+j; monomials are dense exponent vectors over the sorted positions of J.
class VarIndexSet {
 public:
  explicit VarIndexSet(const SallyParams& p);

  const SallyParams& params() const { return params_; }
  // Sorted variable offsets j, size e-2.
  const std::vector<i64>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  // Position of offset j; throws IndexOutOfRange / ExcludedVariable.
  std::size_t position(i64 j) const;

 private:
  SallyParams params_;
  std::vector<i64> indices_;
};

// Exponent vector over the positions of a VarIndexSet.
using Monomial = std::vector<i64>;

// S-degree of a monomial: sum of exponent times (e + offset).
i64 sdegree(const VarIndexSet& vars, const Monomial& u);
// Same, for an explicit offset -> exponent list (offsets validated).
i64 sdegree(const SallyParams& p, const std::vector<std::pair<i64, i64>>& exps);

// A difference of two monomials of equal S-degree, stored with their common
// factor divided out and with plus != minus.
struct Binomial {
  Monomial plus;
  Monomial minus;
  i64 sdeg = 0;
  std::string tag;  // producing family, e.g. "f1(7,2)", or "user"
};

// Validates, reduces, and labels a binomial.  Throws NotHomogeneous when the
// S-degrees differ and DegenerateBinomial when the difference is zero.
Binomial make_binomial(const VarIndexSet& vars, std::string tag, Monomial plus, Monomial minus);

// Builds one instance of the families f1..f15 (with "f13a"/"f13b" for the two
// variants of the cubic-with-completion family).  Arguments are the integer
// parameters in definition order, e.g. family_instance(p, "f1", {j, k}).
// The instance is written exactly as defined; indices outside [0, e-1] raise
// IndexOutOfRange, uses of X_m or X_n raise ExcludedVariable, and an
// inhomogeneous instance raises NotHomogeneous.  With repair = true, the
// quadratic monomial of "f13a" is replaced by the lexicographically smallest
// homogeneous quadratic completion over J (tagged "f13a*"); repair changes no
// other family.
Binomial family_instance(const SallyParams& p, const std::string& family,
                         const std::vector<i64>& args, bool repair = false);

// A full candidate generating set for the defining ideal, as dispatched by the
// construction case table (case ids "5.1" .. "5.6").
struct CandidateSet {
  SallyParams params;
  VarIndexSet vars;
  std::vector<Binomial> binomials;
  std::string case_id;
  std::string sub_branch;
  std::vector<std::string> notes;  // construction report: deviations, repairs
};

// Builds the candidate set for e >= 10 (UnsupportedE below that).  Every
// item-group count implied by the case table is checked during construction;
// a failed count or an unbuildable item raises ConstructionMismatch carrying
// the case id and sub-branch.  repair is forwarded to family_instance and is
// needed only where "f13a" occurs (m = 2, n = 4).
CandidateSet candidate_generators(const SallyParams& p, bool repair = false);

// Evidence that no member is redundant: every binomial should contain a
// monomial that appears in no other binomial of the set.  The scan is
// mechanical; failures are reported, never repaired.
struct MinimalityViolation {
  std::size_t index;
  std::string tag;
};

struct MinimalityReport {
  bool all_homogeneous = true;
  std::vector<std::size_t> inhomogeneous;                        // positions, if any
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;   // identical binomial pairs
  std::vector<std::optional<Monomial>> private_monomial;         // per binomial, if found
  std::vector<MinimalityViolation> violations;                   // no private monomial
  bool pass() const {
    return all_homogeneous && duplicates.empty() && violations.empty();
  }
};

MinimalityReport minimality_evidence(const CandidateSet& c);

// All monomials of the given S-degree, in ascending lexicographic order of the
// exponent vector.  Enumerated by bounded depth-first search.
std::vector<Monomial> fiber(const SallyParams& p, i64 lam);
// Independent second enumeration (descending-exponent recursion), for
// cross-checking; returns the same sorted result.
std::vector<Monomial> fiber_alt(const SallyParams& p, i64 lam);

// Connectivity certificate: for every degree lambda in [2e, 4e-2] whose fiber
// has at least two monomials, the graph connecting u to u - plus(b) + minus(b)
// (whenever the subtraction stays nonnegative, either orientation) over all
// binomials b must be connected.  First Betti numbers vanish beyond 4e-2, so
// the ideal is generated in S-degrees <= 4e-2 and full connectivity up to that
// bound certifies that the set generates the ideal.
struct GenerationReport {
  bool generates = false;
  i64 degree_lo = 0;
  i64 degree_hi = 0;
  i64 witness_lambda = -1;                // first disconnected degree, if any
  std::vector<Monomial> component_a;      // two components of the witness fiber
  std::vector<Monomial> component_b;
  std::string justification;
};

GenerationReport verify_generates(const CandidateSet& c);

// Text forms: "X_0^2 X_9" and "f2(0): X_0^2 X_9 - X_1 X_8".
std::string monomial_text(const VarIndexSet& vars, const Monomial& u);
std::string binomial_text(const VarIndexSet& vars, const Binomial& b);

}  // namespace sgb
