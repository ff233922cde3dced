// SPDX-License-Identifier: Apache-2.0
//
// W(r,n) acting on V^{tensor n} for V of dimension rk+1, split into a
// color-0 block of size k+1 and r-1 blocks of size k.  The permutation part
// permutes tensor factors, the color generators scale by roots of unity
// according to the block of the vector in that slot.  Traces specialize the
// block characters; the signed variant inserts Koszul signs controlled by a
// parity per color, which is how the super side of the duality is probed.

#ifndef WREATHCHAR_TENSOR_HPP
#define WREATHCHAR_TENSOR_HPP

#include <stdexcept>
#include <vector>

#include "wreathchar/budget.hpp"
#include "wreathchar/char_table.hpp"
#include "wreathchar/colored_perm.hpp"
#include "wreathchar/cyclotomic.hpp"

namespace wreathchar {

/// Parity (0 = even, 1 = odd) per color class 0..r-1.
using ParityAssignment = std::vector<int>;

/// Every block odd: adjacent swaps always pick up a minus sign, matching
/// the uniform-sign description of the signed action.
ParityAssignment all_odd_parities(unsigned long r);

/// Color block of basis vector v in 1..rk+1: vectors 1..k+1 are color 0,
/// then k consecutive vectors per color 1..r-1.
unsigned long index_color(unsigned long v, unsigned long r, unsigned long k);

inline constexpr unsigned long kDefaultTensorBudget = 10000000;

/// Trace of w on V^{tensor n}, computed per cycle: a cycle with color sum c
/// contributes sum_v xi^{c * color(v)} over the rk+1 basis vectors.
/// Throws BudgetExceeded when (rk+1)^n exceeds the budget.
Cyclotomic unsigned_trace(const ColoredPermutation& w, unsigned long k,
                          unsigned long budget = kDefaultTensorBudget);

/// Oracle path: enumerate all (rk+1)^n basis indices, keep those fixed by
/// the underlying permutation, and sum the per-slot color weights.
Cyclotomic naive_unsigned_trace(const ColoredPermutation& w, unsigned long k,
                                unsigned long budget = kDefaultTensorBudget);

/// Trace of the signed action: on top of the color weights, each inversion
/// pair of the underlying permutation whose two slots both hold odd vectors
/// contributes a factor -1.  Enumerates one vector per cycle.
Cyclotomic signed_trace(const ColoredPermutation& w, unsigned long k,
                        const ParityAssignment& parity,
                        unsigned long budget = kDefaultTensorBudget);

/// The trace characters as class functions (evaluated on representatives).
ClassFunction unsigned_trace_character(unsigned long r, unsigned long n,
                                       unsigned long k,
                                       unsigned long budget = kDefaultTensorBudget);
ClassFunction signed_trace_character(unsigned long r, unsigned long n,
                                     unsigned long k,
                                     const ParityAssignment& parity,
                                     unsigned long budget = kDefaultTensorBudget);

/// Multiplicity of chi^lambda in V^{tensor n}; checked against the
/// row-semistandard count s_k(lambda) and returned as an integer.  Throws
/// std::logic_error if the inner product is not that count.
mpz_class tensor_multiplicity(const CharacterTable& table,
                              const Multipartition& lambda, unsigned long k,
                              unsigned long budget = kDefaultTensorBudget);

/// Multiplicity of chi^lambda in the signed action for the given parities,
/// returned raw: callers compare it against the column-semistandard count
/// c_k(lambda) and report, rather than assuming any parity is the right one.
Cyclotomic signed_tensor_multiplicity(const CharacterTable& table,
                                      const Multipartition& lambda,
                                      unsigned long k,
                                      const ParityAssignment& parity,
                                      unsigned long budget = kDefaultTensorBudget);

}  // namespace wreathchar

#endif  // WREATHCHAR_TENSOR_HPP
