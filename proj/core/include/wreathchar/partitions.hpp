// SPDX-License-Identifier: Apache-2.0
//
// Partitions and r-multipartitions: enumeration in fixed orders, conjugation
// in its three flavors (component-reversing, componentwise, color-negating),
// box bookkeeping, and the hook-length count of standard fillings.

#ifndef WREATHCHAR_PARTITIONS_HPP
#define WREATHCHAR_PARTITIONS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace wreathchar {

/// Weakly decreasing sequence of positive integers; empty = partition of 0.
using Partition = std::vector<unsigned long>;

/// An r-multipartition is one Partition per color 0..r-1 (empty components
/// are present as empty vectors, never dropped).
using Multipartition = std::vector<Partition>;

bool is_partition(const Partition& p);
unsigned long partition_size(const Partition& p);
unsigned long multipartition_size(const Multipartition& mp);

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
std::vector<Partition> partitions(unsigned long n);

/// All r-multipartitions of n.  Order: component-size vectors
/// (n_0,...,n_{r-1}) in lexicographically decreasing order; within one size
/// vector the per-component partition lists run in reverse-lex order with
/// the last component varying fastest.  For (r=2, n=2) this gives
/// ((2);()), ((1,1);()), ((1);(1)), (();(2)), (();(1,1)).
std::vector<Multipartition> multipartitions(unsigned long r, unsigned long n);

Partition conjugate_partition(const Partition& p);

/// Component i of the result is the conjugate of component r-1-i of the
/// input (components reversed, each transposed).  An involution.
Multipartition conjugate_multipartition(const Multipartition& mp);

/// Transposes every component in place (component order kept).
Multipartition componentwise_conjugate(const Multipartition& mp);

/// Component c of the result is the conjugate of component (r-c) mod r of
/// the input, i.e. colors are negated mod r and each component transposed.
/// Coincides with componentwise_conjugate for r <= 2.
Multipartition negated_conjugate(const Multipartition& mp);

/// A cell of a multipartition diagram.  row/column are 1-based.
struct Box {
  unsigned long row;
  unsigned long column;
  unsigned long component;
  bool operator==(const Box&) const = default;
};

std::vector<Box> boxes(const Multipartition& mp);
/// Boxes whose addition still leaves a partition in every component.
std::vector<Box> addable_boxes(const Multipartition& mp);
/// Boxes whose removal still leaves a partition in every component.
std::vector<Box> removable_boxes(const Multipartition& mp);

/// Text form "[[3,2,2],[2,1]]"; an empty component prints as "[]".
std::string format_multipartition(const Multipartition& mp);
/// Inverse of format_multipartition.  When expect_r > 0 the component count
/// must match it.  Throws std::invalid_argument on malformed input.
Multipartition parse_multipartition(const std::string& text,
                                    unsigned long expect_r = 0);

/// Number of standard fillings, via hooks:
///   n! * prod_i ( 1 / prod_{cells of component i} hook )
/// equivalently multinomial(n; |mp_0|,...) * prod_i #SYT(mp_i).
mpz_class standard_tableau_count(const Multipartition& mp);

}  // namespace wreathchar

#endif  // WREATHCHAR_PARTITIONS_HPP
