// SPDX-License-Identifier: Apache-2.0
//
// Exact irreducible character tables of W(r,n) over Q(xi_r).
//
// A ClassFunction stores one Cyclotomic value per conjugacy class, in the
// fixed multipartitions(r,n) order.  CharacterTable rows are built by
// induction from Young-type subgroups prod_i W(r, n_i): the factor attached
// to component i carries the linear twist xi^{i * (color sum)} times the
// inflated symmetric-group character of lambda^{(i)}.  Induction works
// entirely on class data; classes of the subgroup fuse into W(r,n) by
// color-wise concatenation of parts.
//
// The attachment of Z_r-characters to components is a convention.  We pin it
// by a descent-multiplicity check (the multiplicity of chi^lambda in the k-th
// Foulkes character must count standard tableaux of shape lambda with k
// descents) and fall back to relabeling by a unit of Z/r when the natural
// choice fails; the unit used is recorded on the table.

#ifndef WREATHCHAR_CHAR_TABLE_HPP
#define WREATHCHAR_CHAR_TABLE_HPP

#include <cstddef>
#include <vector>

#include "wreathchar/classes.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/partitions.hpp"

namespace wreathchar {

class ClassFunction {
 public:
  /// Values in multipartitions(r,n) order; each is coerced to order r.
  /// Throws std::invalid_argument on a length mismatch or when a value
  /// lives in an incompatible cyclotomic field.
  ClassFunction(unsigned long r, unsigned long n,
                std::vector<Cyclotomic> values);

  unsigned long order() const { return r_; }
  unsigned long degree() const { return n_; }
  const std::vector<Cyclotomic>& values() const { return values_; }

  const Cyclotomic& value(std::size_t class_idx) const;
  const Cyclotomic& value(const Multipartition& mu) const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclotomic& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
    return a += b;
  }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) {
    return a -= b;
  }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& c) {
    return a *= c;
  }
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }

 private:
  unsigned long r_ = 1;
  unsigned long n_ = 0;
  std::vector<Cyclotomic> values_;
};

class CharacterTable {
 public:
  CharacterTable(unsigned long r, unsigned long n,
                 std::vector<Multipartition> labels,
                 std::vector<ClassFunction> rows, unsigned long color_relabel);

  unsigned long order() const { return r_; }
  unsigned long degree() const { return n_; }
  /// Row labels, in the same multipartitions(r,n) order as the columns.
  const std::vector<Multipartition>& labels() const { return labels_; }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const ClassFunction& row(std::size_t i) const { return rows_.at(i); }
  const ClassFunction& row(const Multipartition& label) const;
  /// Unit u of Z/r applied to component indices during calibration
  /// (1 means the natural labeling survived).
  unsigned long color_relabel() const { return relabel_; }

 private:
  unsigned long r_;
  unsigned long n_;
  std::vector<Multipartition> labels_;
  std::vector<ClassFunction> rows_;
  unsigned long relabel_;
};

/// Shape with component c replaced by component (u*c mod r); for u coprime
/// to r this permutes the r-multipartitions of n.
Multipartition apply_color_relabel(const Multipartition& mp, unsigned long u);

/// The full irreducible table of W(r,n), calibrated as described above.
CharacterTable irreducible_table(unsigned long r, unsigned long n);

/// (1/|W|) sum_mu class_size(mu) f(mu) conj(g(mu)).  Hermitian; throws
/// std::invalid_argument when the domains differ.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

/// Restriction along W(r,n-1) < W(r,n): the value on a class of the smaller
/// group is f at that class with a fixed point (a color-0 part 1) appended.
ClassFunction restrict_character(const ClassFunction& f);

/// Coefficients <f, chi^lambda> in table-label order.  Reconstructs the sum
/// and throws std::logic_error if it fails to reproduce f exactly.
std::vector<Cyclotomic> decompose(const ClassFunction& f,
                                  const CharacterTable& table);

/// True when every Foulkes multiplicity <phi_k, chi^lambda> is a
/// non-negative integer equal to the number of standard tableaux of shape
/// lambda with exactly k descents.
bool descent_multiplicity_check(const CharacterTable& table);

/// Try the candidate relabelings u in (Z/r)^* in ascending order and return
/// the first table passing descent_multiplicity_check; throws
/// std::runtime_error when none does.
CharacterTable calibrate_labels(unsigned long r, unsigned long n,
                                const std::vector<Multipartition>& labels,
                                const std::vector<ClassFunction>& rows);

}  // namespace wreathchar

#endif  // WREATHCHAR_CHAR_TABLE_HPP
