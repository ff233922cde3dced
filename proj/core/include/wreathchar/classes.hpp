// SPDX-License-Identifier: Apache-2.0
//
// Conjugacy-class data for W(r,n): classes are indexed by r-multipartitions
// of n (component i holds the lengths of color-i cycles), with the standard
// centralizer-order formula.  Also the wreath analogue of the Ewens
// distribution, whose weights depend only on the number of color-0 cycles.

#ifndef WREATHCHAR_CLASSES_HPP
#define WREATHCHAR_CLASSES_HPP

#include <gmpxx.h>

#include "wreathchar/colored_perm.hpp"
#include "wreathchar/partitions.hpp"
#include "wreathchar/rational.hpp"

namespace wreathchar {

/// The class list of W(r,n), in the fixed multipartitions(r,n) order.
std::vector<Multipartition> conjugacy_classes(unsigned long r, unsigned long n);

/// Position of mu in conjugacy_classes(r, n); throws std::invalid_argument
/// when mu is not an r-multipartition of n.
std::size_t class_index(unsigned long r, unsigned long n,
                        const Multipartition& mu);

/// |C_{W(r,n)}(w)| for w of type mu:
///   prod_i  r^{#parts(mu_i)} * prod_k k^{a_k} a_k!   (a_k = parts of size k).
mpz_class centralizer_order(unsigned long r, const Multipartition& mu);

/// r^n n! / centralizer_order(mu).
mpz_class class_size(unsigned long r, const Multipartition& mu);

/// One element of cycle type mu (cycles laid out left to right, the full
/// color of each cycle on its first position).
ColoredPermutation class_representative(unsigned long r,
                                        const Multipartition& mu);

/// Ewens weight (rq+1)^{length(w)} of a single element.
Rational ewens_weight(const ColoredPermutation& w, const Rational& q);

/// Normalizing constant sum_w (rq+1)^{length(w)}, accumulated over classes.
Rational ewens_normalizer(unsigned long r, unsigned long n, const Rational& q);

/// Closed form prod_{i=1}^{n} r(q+i), which the tests pin against the sum.
Rational ewens_closed_form(unsigned long r, unsigned long n, const Rational& q);

/// The (n+1)-factor product (rq+1)(r(q+1)+1)...(r(q+n)+1).  Kept for the
/// verification report; already disagrees with the sum at r = n = 1.
Rational ewens_printed_form(unsigned long r, unsigned long n, const Rational& q);

}  // namespace wreathchar

#endif  // WREATHCHAR_CLASSES_HPP
