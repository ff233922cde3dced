// SPDX-License-Identifier: Apache-2.0
//
// Exact rational arithmetic on top of GMP, plus the handful of integer
// combinatorial helpers (factorials, binomials) everything else leans on.

#ifndef WREATHCHAR_RATIONAL_HPP
#define WREATHCHAR_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wreathchar {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (mpq_class canonicalization).
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                     // NOLINT: implicit on purpose
  Rational(const mpz_class& n) : v_(n) {}         // NOLINT
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional leading '-'. Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

/// binomial(n, k) for integer n (0 when k > n or n < 0 with k > 0 handled
/// by the generalized formula below; this overload expects n >= 0).
mpz_class binomial(unsigned long n, unsigned long k);

/// Generalized binomial coefficient binom(t, k) = t(t-1)...(t-k+1)/k!
/// for rational t, used by q-expansions evaluated at rational q.
Rational binomial(const Rational& t, unsigned long k);

}  // namespace wreathchar

#endif  // WREATHCHAR_RATIONAL_HPP
