#pragma once

#include <stdexcept>
#include <string>

namespace sgb {

// Root of the library's exception hierarchy.  Every error the library throws
// on purpose derives from Error; anything else escaping is a bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic left the 64-bit (or 128-bit, for rank elimination) range.
// Overflow is always a hard error, never a silent wrap.
struct OverflowError : Error {
  using Error::Error;
};

// --- semigroup construction -------------------------------------------------
struct EmptyInput : Error {
  using Error::Error;
};
struct NonPositiveEntry : Error {
  using Error::Error;
};
struct GcdNotOne : Error {
  using Error::Error;
};

// --- interval-family parameters ----------------------------------------------
struct InvalidParams : Error {
  using Error::Error;
};
// beta1_special was asked about a lambda that is none of the three special values.
struct NotSpecialLambda : Error {
  using Error::Error;
};
// beta1_box was asked outside its proven domain (callers fall back to the oracle).
struct OutOfBoxDomain : Error {
  using Error::Error;
};
// zero_face_index_set was asked outside [2e+2, 4e-2].
struct OutOfWindow : Error {
  using Error::Error;
};

// --- binomials over the restricted variable set ------------------------------
// A monomial used variable X_m or X_n, which do not exist for these parameters.
struct ExcludedVariable : Error {
  using Error::Error;
};
// A variable index fell outside [0, e-1].
struct IndexOutOfRange : Error {
  using Error::Error;
};
// The two monomials of a binomial have different S-degrees, so the binomial
// cannot lie in the defining ideal.  Raised rather than repaired by default.
struct NotHomogeneous : Error {
  using Error::Error;
};
// Both monomials of a binomial reduced to the same monomial (the difference is
// identically zero), so there is no binomial to construct.
struct DegenerateBinomial : Error {
  using Error::Error;
};
// candidate_generators supports e >= 10 only.
struct UnsupportedE : Error {
  using Error::Error;
};
// An item count or index constraint of a construction case failed.  The message
// carries the case id and sub-branch for diagnosis.
struct ConstructionMismatch : Error {
  using Error::Error;
};

}  // namespace sgb
