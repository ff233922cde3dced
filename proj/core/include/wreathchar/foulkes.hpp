// SPDX-License-Identifier: Apache-2.0
//
// Block characters and Foulkes characters of W(r,n).
//
// A block function depends on an element only through its number of color-0
// cycles, so it is stored as n+1 values indexed by that length.  chi_k is
// the block character (rk+1)^length; the Foulkes characters phi_k are its
// alternating binomial transform, and the operations here cover the inverse
// transform, irreducible multiplicities (which count tableau descents),
// signed analogues, branching, the coefficient extraction in the phi basis,
// and the q-deformed expansion of (rq+1)^length.
//
// Note on lengths: for r >= 2 every length 0..n is realized by some class;
// for r = 1 every permutation has at least one cycle, so the length-0 slot
// is formal — kept for the transform algebra, invisible to class functions.

#ifndef WREATHCHAR_FOULKES_HPP
#define WREATHCHAR_FOULKES_HPP

#include <stdexcept>
#include <vector>

#include "wreathchar/char_table.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/rational.hpp"
#include "wreathchar/tableaux.hpp"

namespace wreathchar {

/// Raised when irreducible multiplicities come out negative or fractional,
/// i.e. when the component labeling of the character table cannot be the
/// one the descent combinatorics refers to.
struct ConventionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class BlockFunction {
 public:
  /// by_length must have n+1 entries (value at length 0, ..., n); entries
  /// are coerced to order r.
  BlockFunction(unsigned long r, unsigned long n,
                std::vector<Cyclotomic> by_length);

  unsigned long order() const { return r_; }
  unsigned long degree() const { return n_; }
  const Cyclotomic& at_length(unsigned long ell) const;
  const std::vector<Cyclotomic>& values_by_length() const { return values_; }

  /// The class function with value at_length(#parts of mu^{(0)}).
  ClassFunction to_class_function() const;

  BlockFunction& operator+=(const BlockFunction& o);
  BlockFunction& operator-=(const BlockFunction& o);
  BlockFunction& operator*=(const Cyclotomic& c);
  friend BlockFunction operator+(BlockFunction a, const BlockFunction& b) {
    return a += b;
  }
  friend BlockFunction operator-(BlockFunction a, const BlockFunction& b) {
    return a -= b;
  }
  friend BlockFunction operator*(BlockFunction a, const Cyclotomic& c) {
    return a *= c;
  }
  bool operator==(const BlockFunction& o) const;
  bool operator!=(const BlockFunction& o) const { return !(*this == o); }

 private:
  unsigned long r_ = 1;
  unsigned long n_ = 0;
  std::vector<Cyclotomic> values_;
};

/// Coordinates of a block function in the basis phi_0, ..., phi_n.
struct FoulkesCoefficients {
  unsigned long r = 1;
  unsigned long n = 0;
  std::vector<Cyclotomic> coeffs;  // n+1 entries
};

/// chi_k: value (rk+1)^ell at length ell.
BlockFunction chi_block(unsigned long r, unsigned long n, unsigned long k);

/// The printed closed form (-1)^{n+r-1} (-rk-1)^ell of the signed block
/// character.  Kept verbatim so it can be compared against directly
/// computed signed traces; for r >= 2 it is already negative at the
/// identity, so trust nothing here without that comparison.
BlockFunction chi_signed_closed(unsigned long r, unsigned long n,
                                unsigned long k);

/// phi_k = sum_{j=0}^{k} (-1)^j C(n+1, j) chi_{k-j}.  Defined for every
/// k >= 0; for k > n the alternating sum telescopes to zero because it is
/// an (n+1)-st finite difference of a polynomial of degree <= n.
BlockFunction foulkes(unsigned long r, unsigned long n, unsigned long k);

/// Verifies chi_k = sum_j C(n+j, j) phi_{k-j} for k = 0..n, exactly.
bool foulkes_inverse_check(unsigned long r, unsigned long n);

/// <phi_k, chi^lambda> for every row of the table, in label order.  Each
/// multiplicity is checked to be a non-negative rational integer equal to
/// the number of standard tableaux of that shape with k descents; any
/// violation throws ConventionMismatch.
std::vector<mpz_class> foulkes_multiplicities(const CharacterTable& table,
                                              unsigned long k);
std::vector<mpz_class> foulkes_multiplicities(unsigned long r, unsigned long n,
                                              unsigned long k);

/// Signed Foulkes character, defined combinatorially as
/// sum_lambda mbar_count(lambda, k, conv) * chi^lambda.
ClassFunction signed_foulkes_combinatorial(const CharacterTable& table,
                                           unsigned long k,
                                           BoundaryConvention conv);

/// Verifies restrict(chi^n_k) = (rk+1) chi^{n-1}_k and
/// restrict(phi^n_k) = (r(n+1)-(rk+1)) phi^{n-1}_{k-1} + (rk+1) phi^{n-1}_k
/// for k = 0..n, as exact class functions.
bool branching_check(unsigned long r, unsigned long n);

/// Verifies phi_k(e) = E_{r,n}(k) for all k and that sum_k phi_k is the
/// regular character (r^n n! at the identity class, 0 elsewhere).
bool properties_check(unsigned long r, unsigned long n);

/// The shape family whose rows isolate single Foulkes coefficients: a row
/// (n-k) in component 0 and a column (1^k) in component 1.  Every standard
/// tableau of this shape has exactly k descents.  For r = 1 the column
/// moves into the unique component, forming the hook (n-k, 1^k); that
/// family only reaches k <= n-1.
Multipartition descent_isolating_shape(unsigned long r, unsigned long n,
                                       unsigned long k);

/// Coordinates of f in the phi basis via the exact (n+1)x(n+1) linear
/// solve against the values-by-length matrix [phi_j(ell)].
FoulkesCoefficients block_coefficients(const BlockFunction& f);

/// Same coordinates extracted by inner products against the isolating
/// shapes: coefficient k is <f, chi^{lambda_k}> / #std(lambda_k).  For
/// r = 1 the top coefficient is fixed by the formal length-0 slot instead
/// (no shape isolates it, since no permutation has zero cycles).
/// Reconstruction is verified exactly; both routes agree.
FoulkesCoefficients block_coefficients(const BlockFunction& f,
                                       const CharacterTable& table);

/// True iff every phi-coordinate of f is a non-negative rational.
bool is_block_character(const BlockFunction& f);

/// Coefficients binomial(q+n-j, n) of the expansion
/// (rq+1)^ell = sum_j binomial(q+n-j, n) phi_j(ell); the identity is
/// verified exactly at the given q before returning.
FoulkesCoefficients q_block_expansion(unsigned long r, unsigned long n,
                                      const Rational& q);

}  // namespace wreathchar

#endif  // WREATHCHAR_FOULKES_HPP
