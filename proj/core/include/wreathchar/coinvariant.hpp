// SPDX-License-Identifier: Apache-2.0
//
// W(r,n) acting on C[x_1..x_n] by variable permutation and root-of-unity
// scaling, the ideal generated by the constant-term-free invariants
// e_d(x_1^r,...,x_n^r), normal forms modulo a structured lex reducer set,
// descent monomials built from flag statistics, and graded traces on the
// quotient.  Two flag-statistic conventions are carried side by side
// because they disagree already at n = 1 for r >= 2; everything downstream
// is parameterized by the variant, and the rank check certifies which one
// actually yields a monomial basis of the quotient.

#ifndef WREATHCHAR_COINVARIANT_HPP
#define WREATHCHAR_COINVARIANT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "wreathchar/budget.hpp"
#include "wreathchar/char_table.hpp"
#include "wreathchar/colored_perm.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/linalg.hpp"
#include "wreathchar/tableaux.hpp"

namespace wreathchar {

/// Exponent vector; entry i-1 is the exponent of x_i.
using Monomial = std::vector<unsigned long>;

/// Orders monomials lex-descending with x_1 > x_2 > ... > x_n, so a map's
/// begin() is the leading term.
struct DescendingLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in n variables over a cyclotomic field.  Terms with
/// zero coefficient are never stored.
class PolyCyclo {
public:
  PolyCyclo(unsigned long order, unsigned long nvars);
  static PolyCyclo monomial(unsigned long order, Monomial m, Cyclotomic c);
  static PolyCyclo constant(unsigned long order, unsigned long nvars,
                            Cyclotomic c);

  unsigned long order() const { return order_; }
  unsigned long nvars() const { return nvars_; }
  const std::map<Monomial, Cyclotomic, DescendingLex>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^m, dropping the term if the sum cancels.
  void add_term(const Monomial& m, const Cyclotomic& c);
  Cyclotomic coefficient(const Monomial& m) const;  // zero if absent

  PolyCyclo& operator+=(const PolyCyclo& o);
  PolyCyclo& operator-=(const PolyCyclo& o);
  PolyCyclo& operator*=(const Cyclotomic& c);
  PolyCyclo operator*(const PolyCyclo& o) const;
  friend PolyCyclo operator+(PolyCyclo a, const PolyCyclo& b) { return a += b; }
  friend PolyCyclo operator-(PolyCyclo a, const PolyCyclo& b) { return a -= b; }

  bool operator==(const PolyCyclo& o) const;
  bool operator!=(const PolyCyclo& o) const { return !(*this == o); }

private:
  unsigned long order_;
  unsigned long nvars_;
  std::map<Monomial, Cyclotomic, DescendingLex> terms_;
};

/// Substitution x_i -> zeta^{c_i} x_{w(i)}.  Composes as a left action:
/// act(u*v, p) == act(u, act(v, p)).
PolyCyclo act(const ColoredPermutation& w, const PolyCyclo& p);

/// The two candidate flag-statistic conventions.  PaperFormula counts
/// descents in the full range i..n and subtracts the color from r-1;
/// InteriorColor counts descents in i..n-1 only and adds the color as-is.
/// They coincide at r = 1.
enum class FlagVariant { PaperFormula, InteriorColor };

struct FlagStatistics {
  FlagVariant variant;
  std::vector<unsigned long> des;  // des[i-1] = |Des(w) cap {i..n}|
  std::vector<unsigned long> f;    // flag values f_1..f_n
};

FlagStatistics flag_statistics(const ColoredPermutation& w, FlagVariant v);

/// x_{w(1)}^{f_1} ... x_{w(n)}^{f_n} with integer (order-1) coefficients
/// lifted to order r.
PolyCyclo descent_monomial(const ColoredPermutation& w, FlagVariant v);

/// f_1 of a standard tableau: the same formula as for group elements with
/// Des read off the tableau and c_1 the component of entry 1.
unsigned long tableau_flag_one(const StandardTableau& t, FlagVariant v);

/// e_d(x_1^r, ..., x_n^r) for d = 1..n: generators of the invariant ideal.
std::vector<PolyCyclo> elementary_invariants(unsigned long r, unsigned long n);

/// h_m(x_m^r, ..., x_n^r) for m = 1..n; under lex the leading term of the
/// m-th entry is x_m^{rm}, so division by the set terminates with remainder
/// supported on exponents a_m < rm.
std::vector<PolyCyclo> reducers(unsigned long r, unsigned long n);

/// Certifies each reducer lies in the invariant ideal by solving for
/// polynomial cofactors against the e_d(x^r) generators (exact linear
/// algebra on a degree-bounded monomial basis).
bool reducer_membership_check(unsigned long r, unsigned long n);

/// Remainder of division by the reducer set; linear, idempotent, and
/// supported on the Artin box.
PolyCyclo normal_form(PolyCyclo p, const std::vector<PolyCyclo>& reds);

/// All exponent vectors with a_m < r*m, in descending lex order; there are
/// exactly r^n * n! of them.
std::vector<Monomial> artin_box(unsigned long r, unsigned long n);

inline constexpr unsigned long kDefaultCoinvariantBudget = 200;

struct DescentBasisReport {
  unsigned long dimension = 0;  // r^n * n!
  unsigned long rank = 0;
  bool full_rank = false;
  /// Degree-minimality of the monomials inside their cosets, probed on a
  /// deterministic sample of ideal perturbations (n <= 2 only).
  bool minimality_checked = false;
  bool minimality_holds = false;
};

/// Ranks the normal forms of all descent monomials against the Artin-box
/// basis.  Throws BudgetExceeded when r^n * n! > budget.
DescentBasisReport descent_basis_check(
    unsigned long r, unsigned long n, FlagVariant v,
    unsigned long budget = kDefaultCoinvariantBudget);

/// The quotient by the invariant ideal with the descent monomials of one
/// variant as working basis.  Construction performs the full rank
/// computation; it throws std::runtime_error if the variant's monomials are
/// not a basis and BudgetExceeded if the dimension exceeds the budget.
class CoinvariantAlgebra {
public:
  CoinvariantAlgebra(unsigned long r, unsigned long n, FlagVariant v,
                     unsigned long budget = kDefaultCoinvariantBudget);

  unsigned long order() const { return r_; }
  unsigned long degree() const { return n_; }
  FlagVariant variant() const { return variant_; }
  std::size_t dimension() const { return elements_.size(); }

  /// Basis indexing: element i of all_elements(r, n) labels basis vector i.
  const std::vector<ColoredPermutation>& elements() const { return elements_; }
  const PolyCyclo& basis_monomial(std::size_t i) const;
  /// f_1 of element i (0 when n = 0).
  unsigned long flag_one(std::size_t i) const;

  /// Coordinates of p + ideal in the descent-monomial basis.
  std::vector<Cyclotomic> coordinates(const PolyCyclo& p) const;

  /// Column g holds the coordinates of w . m_g: the matrix of w on the
  /// quotient in the descent-monomial basis.
  Matrix<Cyclotomic> action_matrix(const ColoredPermutation& w) const;

  /// Graded trace of w, grading each basis line m_g by q^{f_1(g)}.
  UniPoly graded_trace(const ColoredPermutation& w) const;

  /// Fully multigraded trace: basis line m_g contributes its diagonal
  /// coefficient times the monomial q_1^{f_1(g)} ... q_n^{f_n(g)}.
  PolyCyclo multigraded_trace(const ColoredPermutation& w) const;

private:
  unsigned long r_;
  unsigned long n_;
  FlagVariant variant_;
  std::vector<ColoredPermutation> elements_;
  std::vector<PolyCyclo> reducers_;
  std::vector<PolyCyclo> monomials_;           // m_g per element
  std::vector<std::vector<unsigned long>> f_;  // flag vector per element
  std::vector<Monomial> box_;
  std::map<Monomial, std::size_t, DescendingLex> box_index_;
  Matrix<Cyclotomic> inverse_;  // descent-basis coords = inverse_ * box coords
};

/// Character-theoretic side of the graded trace: sum over shapes of
/// chi^lambda(w) times the generating polynomial of f_1 over standard
/// tableaux of that shape.
UniPoly tableau_side_trace(const CharacterTable& table,
                           const ColoredPermutation& w, FlagVariant v);

/// Multivariate version, tracking q_1..q_n via every f_i(T).
PolyCyclo tableau_side_multitrace(const CharacterTable& table,
                                  const ColoredPermutation& w, FlagVariant v);

/// Candidate statistics for slicing the basis into a filtration.
enum class GradingStatistic { DescentCount, FlagExponent };

struct FiltrationSlice {
  unsigned long value = 0;      // statistic value of this slice
  unsigned long dimension = 0;  // number of basis lines with that value
  /// Whether span{m_g : statistic(g) <= value} is closed under the group
  /// generators; only then is the compression trace an honest character.
  bool invariant = false;
  ClassFunction character;
};

struct FiltrationReport {
  GradingStatistic statistic;
  std::vector<FiltrationSlice> slices;
  /// True when consecutive slices group (at invariant cut points) into
  /// n+1 blocks whose characters are exactly the Foulkes characters
  /// phi_0..phi_n; boundaries then lists the last slice index of each block.
  bool matches_foulkes = false;
  std::vector<std::size_t> boundaries;
};

FiltrationReport filtration_characters(const CoinvariantAlgebra& algebra,
                                       GradingStatistic statistic);

}  // namespace wreathchar

#endif  // WREATHCHAR_COINVARIANT_HPP
