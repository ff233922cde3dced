// SPDX-License-Identifier: Apache-2.0
//
// Standard tableaux on multipartition shapes, their descent and
// column-descent statistics, and the semistandard counting functions
// s_k / c_k used by the tensor-space decompositions.

#ifndef WREATHCHAR_TABLEAUX_HPP
#define WREATHCHAR_TABLEAUX_HPP

#include <set>
#include <vector>

#include "wreathchar/partitions.hpp"

namespace wreathchar {

/// A standard filling of a multipartition diagram with 1..n, increasing
/// along rows and down columns of every component.
class StandardTableau {
public:
  /// position[i-1] is the box of entry i.  Validates shape coverage and
  /// monotonicity; throws std::invalid_argument otherwise.
  StandardTableau(Multipartition shape, std::vector<Box> position);

  const Multipartition& shape() const { return shape_; }
  unsigned long size() const { return position_.size(); }
  const Box& box_of(unsigned long entry) const { return position_.at(entry - 1); }
  unsigned long component_of(unsigned long entry) const {
    return box_of(entry).component;
  }

  /// Row-lists per component: rows()[c][i] are the entries of row i+1 of
  /// component c, left to right.
  std::vector<std::vector<std::vector<unsigned long>>> rows() const;

  bool operator==(const StandardTableau& o) const {
    return shape_ == o.shape_ && position_ == o.position_;
  }

private:
  Multipartition shape_;
  std::vector<Box> position_;
};

/// All standard fillings of the shape.  Entries are placed from n down to 1,
/// trying removable boxes in (component, row) ascending order, which fixes
/// the output order.
std::vector<StandardTableau> standard_tableaux(const Multipartition& shape);

/// How the otherwise-undefined comparison at i = n is resolved for
/// column-descents.  Complement makes descents and column-descents
/// partition {1..n}; PaperSentinel compares against a fictitious entry of
/// maximal component, mirroring the sentinel used for descents.
enum class BoundaryConvention { PaperSentinel, Complement };

/// i in 1..n-1 is a descent when entry i+1 sits strictly lower in the same
/// component, or in a smaller-indexed component; n is a descent iff entry n
/// lies outside component 0.
std::set<unsigned long> descent_set(const StandardTableau& t);

/// i in 1..n-1 is a column-descent when entry i+1 sits strictly right in
/// the same component, or in a larger-indexed component.  At i = n:
/// Complement marks n iff component(n) = 0, PaperSentinel iff
/// component(n) < r-1.
std::set<unsigned long> column_descent_set(const StandardTableau& t,
                                           BoundaryConvention conv);

/// Entry i at (row a, col b, component c) moves to (row b, col a,
/// component r-1-c): the standard filling of conjugate_multipartition(shape).
StandardTableau conjugate_tableau(const StandardTableau& t);

/// Number of standard fillings with exactly k descents.
unsigned long m_count(const Multipartition& shape, unsigned long k);
/// Number of standard fillings with exactly k column-descents.
unsigned long mbar_count(const Multipartition& shape, unsigned long k,
                         BoundaryConvention conv);

/// s_k: row-semistandard fillings; component 0 uses the alphabet {1..k+1},
/// components 1..r-1 use {1..k}; rows weakly increase, columns strictly
/// increase.  Counted by direct enumeration.
mpz_class row_semistandard_count(const Multipartition& shape, unsigned long k);
/// c_k: columns weakly increase, rows strictly increase, same alphabets.
mpz_class column_semistandard_count(const Multipartition& shape,
                                    unsigned long k);

/// Alphabet-size support tests: s_k (resp. c_k) is nonzero exactly when the
/// component lengths (resp. widths) fit the alphabets.
bool fits_row_alphabet(const Multipartition& shape, unsigned long k);
bool fits_column_alphabet(const Multipartition& shape, unsigned long k);

/// Compares s_k(shape) against the two candidate binomial transforms of the
/// descent counts m_j(shape):
///   printed:    sum_j binomial(n+1, j)   * m_{k-j}
///   corrected:  sum_j binomial(n+j, j)   * m_{k-j}
struct BinomialTransformReport {
  mpz_class s_value;
  mpz_class printed_sum;
  mpz_class corrected_sum;
  bool printed_holds = false;
  bool corrected_holds = false;
};
BinomialTransformReport binomial_transform_check(const Multipartition& shape,
                                                 unsigned long k);

}  // namespace wreathchar

#endif  // WREATHCHAR_TABLEAUX_HPP
