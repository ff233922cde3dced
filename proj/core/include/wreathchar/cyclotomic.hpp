// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in the cyclotomic field Q(zeta_r).
//
// Elements are stored in the canonical power basis 1, z, ..., z^{phi(r)-1}
// of Q[x]/(Phi_r), where Phi_r is the r-th cyclotomic polynomial and
// phi is Euler's totient.  Every operation reduces back to this basis, so
// equality is coefficient-wise and hence decidable.  Order-1 values are
// plain rationals and embed into any other order on demand; mixing two
// orders both greater than one is rejected rather than silently coerced.

#ifndef WREATHCHAR_CYCLOTOMIC_HPP
#define WREATHCHAR_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "wreathchar/rational.hpp"

namespace wreathchar {

unsigned long euler_phi(unsigned long n);

class Cyclotomic {
public:
  /// Zero of order 1 (i.e. the rational 0).
  Cyclotomic() : Cyclotomic(1) {}
  /// Zero of the given order.
  explicit Cyclotomic(unsigned long order);

  static Cyclotomic zero(unsigned long order) { return Cyclotomic(order); }
  static Cyclotomic one(unsigned long order);
  static Cyclotomic from_rational(const Rational& q, unsigned long order = 1);
  /// The primitive root z = zeta_order itself.
  static Cyclotomic root(unsigned long order) { return root_power(order, 1); }
  /// z^e, exponent taken mod order (negative exponents allowed).
  static Cyclotomic root_power(unsigned long order, long e);
  /// Rebuilds an element from coefficient strings, ascending powers.
  /// The vector length must be phi(order).
  static Cyclotomic from_strings(const std::vector<std::string>& coeffs,
                                 unsigned long order);

  unsigned long order() const { return order_; }
  /// Dimension of the field over Q, i.e. phi(order()).
  unsigned long degree() const { return c_.size(); }
  const Rational& coeff(unsigned long i) const { return c_.at(i); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as a Rational; throws std::domain_error unless is_rational().
  Rational rational_part() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  /// Complex conjugation, i.e. the field automorphism z -> z^{-1}.
  Cyclotomic conjugate() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Coefficients as decimal strings, ascending powers (the JSON wire form).
  std::vector<std::string> coeff_strings() const;
  /// Human-readable form such as "1 - z + 2z^2"; "0" for zero.
  std::string str() const;

private:
  // Promotes *this / o to a common order; throws when both are > 1 and differ.
  static void align(Cyclotomic& a, Cyclotomic& b);
  Cyclotomic lifted(unsigned long order) const;

  unsigned long order_;
  std::vector<Rational> c_;  // size euler_phi(order_)
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

/// Dense univariate polynomial over a cyclotomic field, with a display
/// variable name.  The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
  explicit UniPoly(std::string var = "q", unsigned long order = 1)
      : var_(std::move(var)), order_(order) {}
  UniPoly(std::string var, std::vector<Cyclotomic> coeffs);

  static UniPoly monomial(const Cyclotomic& c, unsigned long power,
                          std::string var = "q");

  const std::string& var() const { return var_; }
  unsigned long order() const { return order_; }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of var^i (zero beyond the degree).
  Cyclotomic coeff(unsigned long i) const;
  const std::vector<Cyclotomic>& coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly operator*(const UniPoly& o) const;
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  Cyclotomic eval(const Cyclotomic& x) const;

  /// Descending-power display, e.g. "q^2 + 6q + 1" or "(1 + z)q - 2".
  std::string str() const;

private:
  void trim();

  std::string var_;
  unsigned long order_;  // order of the coefficient field
  std::vector<Cyclotomic> c_;  // ascending powers
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// The r-th cyclotomic polynomial Phi_r as a UniPoly in "x" with (integer)
/// rational coefficients of order 1.
UniPoly cyclotomic_polynomial(unsigned long r);

}  // namespace wreathchar

#endif  // WREATHCHAR_CYCLOTOMIC_HPP
