// SPDX-License-Identifier: Apache-2.0
//
// Elements of W(r,n), the wreath product of the cyclic group of order r by
// the symmetric group S_n: a permutation w together with a color c_i in
// 0..r-1 attached to each position, written w(1)^{c_1} ... w(n)^{c_n}.
//
// Composition is (ab)(i) = a(b(i)) with colors c^{ab}_i = c^b_i + c^a_{b(i)}
// (mod r): apply b first, then a, accumulating colors along the way.  This
// is the unique reading of the twisted product that makes the action on
// polynomial rings a left action, and it satisfies the standard
// presentation (s_0^r = 1, braid relations, s_0 s_1 s_0 s_1 = s_1 s_0 s_1 s_0).

#ifndef WREATHCHAR_COLORED_PERM_HPP
#define WREATHCHAR_COLORED_PERM_HPP

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

#include "wreathchar/partitions.hpp"

namespace wreathchar {

class ColoredPermutation {
public:
  /// images[i-1] = w(i) (a bijection of 1..n), colors[i-1] = c_i in 0..r-1.
  /// Throws std::invalid_argument when either invariant fails.
  ColoredPermutation(unsigned long r, std::vector<unsigned long> images,
                     std::vector<unsigned long> colors);

  static ColoredPermutation identity(unsigned long r, unsigned long n);
  /// s_0: color 1 on position 1, everything else fixed.
  static ColoredPermutation color_generator(unsigned long r, unsigned long n);
  /// s_i = (i, i+1) with all colors 0, for 1 <= i <= n-1.
  static ColoredPermutation adjacent_transposition(unsigned long r,
                                                   unsigned long n,
                                                   unsigned long i);

  unsigned long order() const { return r_; }  // the r of W(r,n)
  unsigned long degree() const { return img_.size(); }  // the n
  unsigned long image(unsigned long i) const { return img_.at(i - 1); }
  unsigned long color(unsigned long i) const { return col_.at(i - 1); }

  ColoredPermutation operator*(const ColoredPermutation& b) const;
  ColoredPermutation inverse() const;
  bool operator==(const ColoredPermutation&) const = default;

  /// One-line word "3^0 2^0 1^0 4^2 6^2 5^1".
  std::string word() const;
  /// Parses the one-line word form; n is the token count.
  static ColoredPermutation parse_word(unsigned long r, const std::string& text);

  /// Sign of the underlying (uncolored) permutation.
  int permutation_sign() const;

private:
  unsigned long r_;
  std::vector<unsigned long> img_;
  std::vector<unsigned long> col_;
};

/// Every element of W(r,n): permutations in lexicographic order, and for
/// each permutation all r^n color vectors with c_n varying fastest.
std::vector<ColoredPermutation> all_elements(unsigned long r, unsigned long n);

/// Type of the conjugacy class of w: component i collects the lengths of
/// cycles whose color sum is congruent to i mod r.
Multipartition cycle_type(const ColoredPermutation& w);

/// Number of cycles of color 0, i.e. parts of component 0 of the type.
unsigned long length(const ColoredPermutation& w);

/// i < n is a descent when c_i > c_{i+1}, or colors tie and w(i) > w(i+1);
/// the sentinel w(n+1) = (n+1)^0 makes n a descent exactly when c_n > 0.
std::set<unsigned long> descent_set(const ColoredPermutation& w);
unsigned long descent_number(const ColoredPermutation& w);

/// Eulerian number: elements of W(r,n) with exactly k descents, computed by
/// the two-term recurrence
///   E_{r,n}(k) = (rk+1) E_{r,n-1}(k) + (r(n+1)-(rk+1)) E_{r,n-1}(k-1)
/// from E_{r,0} = (1).
mpz_class eulerian(unsigned long r, unsigned long n, unsigned long k);
/// The whole row (E_{r,n}(0), ..., E_{r,n}(n)).
std::vector<mpz_class> eulerian_row(unsigned long r, unsigned long n);

}  // namespace wreathchar

#endif  // WREATHCHAR_COLORED_PERM_HPP
