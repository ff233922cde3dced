// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/coinvariant.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "wreathchar/classes.hpp"
#include "wreathchar/foulkes.hpp"
#include "wreathchar/rational.hpp"

namespace wreathchar {

bool DescendingLex::operator()(const Monomial& a, const Monomial& b) const {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned long av = i < a.size() ? a[i] : 0;
    const unsigned long bv = i < b.size() ? b[i] : 0;
    if (av != bv) return av > bv;
  }
  return false;
}

PolyCyclo::PolyCyclo(unsigned long order, unsigned long nvars)
    : order_(order), nvars_(nvars) {
  if (order == 0) throw std::invalid_argument("PolyCyclo: order must be >= 1");
}

PolyCyclo PolyCyclo::monomial(unsigned long order, Monomial m, Cyclotomic c) {
  PolyCyclo p(order, static_cast<unsigned long>(m.size()));
  p.add_term(m, c);
  return p;
}

PolyCyclo PolyCyclo::constant(unsigned long order, unsigned long nvars,
                              Cyclotomic c) {
  return monomial(order, Monomial(nvars, 0), std::move(c));
}

void PolyCyclo::add_term(const Monomial& m, const Cyclotomic& c) {
  if (m.size() != nvars_)
    throw std::invalid_argument("PolyCyclo: exponent length mismatch");
  const Cyclotomic lifted = c * Cyclotomic::one(order_);
  if (lifted.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, lifted);
    return;
  }
  it->second = it->second + lifted;
  if (it->second.is_zero()) terms_.erase(it);
}

Cyclotomic PolyCyclo::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic::zero(order_) : it->second;
}

PolyCyclo& PolyCyclo::operator+=(const PolyCyclo& o) {
  if (o.nvars_ != nvars_)
    throw std::invalid_argument("PolyCyclo: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyCyclo& PolyCyclo::operator-=(const PolyCyclo& o) {
  if (o.nvars_ != nvars_)
    throw std::invalid_argument("PolyCyclo: variable count mismatch");
  const Cyclotomic minus_one =
      Cyclotomic::from_rational(Rational(-1), order_);
  for (const auto& [m, c] : o.terms_) add_term(m, c * minus_one);
  return *this;
}

PolyCyclo& PolyCyclo::operator*=(const Cyclotomic& c) {
  if ((c * Cyclotomic::one(order_)).is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff = coeff * c;
  return *this;
}

PolyCyclo PolyCyclo::operator*(const PolyCyclo& o) const {
  if (o.nvars_ != nvars_)
    throw std::invalid_argument("PolyCyclo: variable count mismatch");
  PolyCyclo out(order_, nvars_);
  Monomial sum(nvars_, 0);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (unsigned long i = 0; i < nvars_; ++i) sum[i] = ma[i] + mb[i];
      out.add_term(sum, ca * cb);
    }
  return out;
}

bool PolyCyclo::operator==(const PolyCyclo& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!(it->second - jt->second).is_zero()) return false;
  }
  return true;
}

PolyCyclo act(const ColoredPermutation& w, const PolyCyclo& p) {
  const unsigned long n = p.nvars();
  if (w.degree() != n)
    throw std::invalid_argument("act: degree mismatch");
  const unsigned long r = w.order();
  const unsigned long out_order =
      (Cyclotomic::one(p.order()) * Cyclotomic::one(r)).order();
  PolyCyclo out(out_order, n);
  Monomial image(n, 0);
  for (const auto& [m, c] : p.terms()) {
    unsigned long twist = 0;
    for (unsigned long i = 1; i <= n; ++i) {
      image[w.image(i) - 1] = m[i - 1];
      twist = (twist + w.color(i) * (m[i - 1] % r)) % r;
    }
    out.add_term(image, c * Cyclotomic::root_power(r, twist));
  }
  return out;
}

FlagStatistics flag_statistics(const ColoredPermutation& w, FlagVariant v) {
  const unsigned long n = w.degree();
  const unsigned long r = w.order();
  const std::set<unsigned long> des = descent_set(w);
  FlagStatistics out;
  out.variant = v;
  out.des.assign(n, 0);
  out.f.assign(n, 0);
  unsigned long suffix = 0;
  const bool boundary = des.count(n) > 0;
  for (unsigned long i = n; i >= 1; --i) {
    if (des.count(i)) ++suffix;
    out.des[i - 1] = suffix;
    if (v == FlagVariant::PaperFormula) {
      out.f[i - 1] = r * suffix + (r - 1) - w.color(i);
    } else {
      const unsigned long interior = suffix - (boundary ? 1 : 0);
      out.f[i - 1] = r * interior + w.color(i);
    }
  }
  return out;
}

PolyCyclo descent_monomial(const ColoredPermutation& w, FlagVariant v) {
  const unsigned long n = w.degree();
  const FlagStatistics fs = flag_statistics(w, v);
  Monomial exps(n, 0);
  for (unsigned long i = 1; i <= n; ++i) exps[w.image(i) - 1] = fs.f[i - 1];
  return PolyCyclo::monomial(w.order(), exps, Cyclotomic::one(w.order()));
}

namespace {

// Flag vector of a standard tableau, mirroring flag_statistics with the
// tableau descent set and entry components.
std::vector<unsigned long> tableau_flag_vector(const StandardTableau& t,
                                               FlagVariant v) {
  const unsigned long n = t.size();
  const unsigned long r = static_cast<unsigned long>(t.shape().size());
  const std::set<unsigned long> des = descent_set(t);
  std::vector<unsigned long> f(n, 0);
  unsigned long suffix = 0;
  const bool boundary = n > 0 && des.count(n) > 0;
  for (unsigned long i = n; i >= 1; --i) {
    if (des.count(i)) ++suffix;
    if (v == FlagVariant::PaperFormula)
      f[i - 1] = r * suffix + (r - 1) - t.component_of(i);
    else
      f[i - 1] = r * (suffix - (boundary ? 1 : 0)) + t.component_of(i);
  }
  return f;
}

void degree_monomials(unsigned long nvars, unsigned long total,
                      Monomial& scratch, unsigned long pos,
                      std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    scratch[pos] = total;
    out.push_back(scratch);
    return;
  }
  for (unsigned long e = 0; e <= total; ++e) {
    scratch[pos] = e;
    degree_monomials(nvars, total - e, scratch, pos + 1, out);
  }
}

// All exponent vectors of the given total degree, n >= 1.
std::vector<Monomial> monomials_of_degree(unsigned long nvars,
                                          unsigned long total) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  Monomial scratch(nvars, 0);
  degree_monomials(nvars, total, scratch, 0, out);
  return out;
}

mpz_class quotient_dimension(unsigned long r, unsigned long n) {
  mpz_class dim;
  mpz_ui_pow_ui(dim.get_mpz_t(), r, n);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  return dim * fact;
}

}  // namespace

unsigned long tableau_flag_one(const StandardTableau& t, FlagVariant v) {
  if (t.size() == 0) return 0;
  return tableau_flag_vector(t, v)[0];
}

std::vector<PolyCyclo> elementary_invariants(unsigned long r,
                                             unsigned long n) {
  std::vector<PolyCyclo> out;
  for (unsigned long d = 1; d <= n; ++d) {
    PolyCyclo e(r, n);
    std::vector<unsigned long> subset;
    // d-subsets of {1..n} by backtracking.
    auto rec = [&](auto&& self, unsigned long next) -> void {
      if (subset.size() == d) {
        Monomial m(n, 0);
        for (unsigned long i : subset) m[i - 1] = r;
        e.add_term(m, Cyclotomic::one(r));
        return;
      }
      for (unsigned long i = next; i <= n; ++i) {
        subset.push_back(i);
        self(self, i + 1);
        subset.pop_back();
      }
    };
    rec(rec, 1);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<PolyCyclo> reducers(unsigned long r, unsigned long n) {
  std::vector<PolyCyclo> out;
  for (unsigned long m = 1; m <= n; ++m) {
    PolyCyclo h(r, n);
    // Degree-m multisets from {m..n}: weakly increasing index tuples.
    std::vector<unsigned long> pick;
    auto rec = [&](auto&& self, unsigned long low) -> void {
      if (pick.size() == m) {
        Monomial mono(n, 0);
        for (unsigned long i : pick) mono[i - 1] += r;
        h.add_term(mono, Cyclotomic::one(r));
        return;
      }
      for (unsigned long i = low; i <= n; ++i) {
        pick.push_back(i);
        self(self, i);
        pick.pop_back();
      }
    };
    rec(rec, m);
    out.push_back(std::move(h));
  }
  return out;
}

bool reducer_membership_check(unsigned long r, unsigned long n) {
  if (r == 0) throw std::invalid_argument("reducer_membership_check: r >= 1");
  // Work with exponents divided by r: both the reducers and the ideal
  // generators only involve r-th powers, so membership can be certified
  // with cofactors in the r-th powers as well and the check is r-free.
  const Rational zero(0), one(1);
  for (unsigned long m = 1; m <= n; ++m) {
    const std::vector<Monomial> rows = monomials_of_degree(n, m);
    std::map<Monomial, std::size_t, DescendingLex> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

    // Unknowns: coefficients of the cofactor of e_d over monomials of
    // degree m - d, concatenated over d = 1..m.
    std::vector<std::vector<Rational>> a(rows.size());
    for (auto& row : a) row.assign(0, zero);
    std::size_t ncols = 0;
    for (unsigned long d = 1; d <= m; ++d) {
      const std::vector<Monomial> betas = monomials_of_degree(n, m - d);
      // e_d compressed: squarefree degree-d monomials.
      std::vector<Monomial> deltas;
      std::vector<unsigned long> subset;
      auto rec = [&](auto&& self, unsigned long next) -> void {
        if (subset.size() == d) {
          Monomial mono(n, 0);
          for (unsigned long i : subset) mono[i - 1] = 1;
          deltas.push_back(mono);
          return;
        }
        for (unsigned long i = next; i <= n; ++i) {
          subset.push_back(i);
          self(self, i + 1);
          subset.pop_back();
        }
      };
      rec(rec, 1);
      for (const Monomial& beta : betas) {
        for (auto& row : a) row.push_back(zero);
        Monomial gamma(n, 0);
        for (const Monomial& delta : deltas) {
          for (unsigned long i = 0; i < n; ++i) gamma[i] = beta[i] + delta[i];
          a[row_index.at(gamma)][ncols] = a[row_index.at(gamma)][ncols] + one;
        }
        ++ncols;
      }
    }

    // Right-hand side: h_m in the compressed variables x_m..x_n.
    std::vector<Rational> b(rows.size(), zero);
    std::vector<unsigned long> pick;
    auto hrec = [&](auto&& self, unsigned long low) -> void {
      if (pick.size() == m) {
        Monomial mono(n, 0);
        for (unsigned long i : pick) mono[i - 1] += 1;
        b[row_index.at(mono)] = one;
        return;
      }
      for (unsigned long i = low; i <= n; ++i) {
        pick.push_back(i);
        self(self, i);
        pick.pop_back();
      }
    };
    hrec(hrec, m);

    if (!exact_solve(a, b)) return false;
  }
  return true;
}

PolyCyclo normal_form(PolyCyclo p, const std::vector<PolyCyclo>& reds) {
  if (reds.empty()) return p;
  const unsigned long n = p.nvars();
  if (reds.size() != n)
    throw std::invalid_argument("normal_form: need one reducer per variable");
  std::vector<unsigned long> bound(n, 0);
  for (unsigned long m = 0; m < n; ++m) {
    if (reds[m].is_zero())
      throw std::invalid_argument("normal_form: zero reducer");
    bound[m] = reds[m].terms().begin()->first[m];
  }
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const auto& [mono, coeff] : p.terms()) {
      unsigned long m = 0;
      while (m < n && mono[m] < bound[m]) ++m;
      if (m == n) continue;
      Monomial quotient = mono;
      quotient[m] -= bound[m];
      p -= PolyCyclo::monomial(p.order(), quotient, coeff) * reds[m];
      reduced = true;
      break;  // the term map changed; restart the scan
    }
  }
  return p;
}

std::vector<Monomial> artin_box(unsigned long r, unsigned long n) {
  std::vector<Monomial> out;
  Monomial a(n, 0);
  while (true) {
    out.push_back(a);
    unsigned long m = n;
    while (m >= 1) {
      if (++a[m - 1] < r * m) break;
      a[m - 1] = 0;
      --m;
    }
    if (m == 0) break;
  }
  std::sort(out.begin(), out.end(), DescendingLex{});
  return out;
}

namespace {

// a <= b in the lexicographic order on sorted exponent sequences.
bool partition_lex_leq(std::vector<unsigned long> a,
                       std::vector<unsigned long> b) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned long av = i < a.size() ? a[i] : 0;
    const unsigned long bv = i < b.size() ? b[i] : 0;
    if (av != bv) return av < bv;
  }
  return true;
}

// The largest sorted exponent sequence over the support, lexicographically:
// the polynomial's degree in the partition order.
std::vector<unsigned long> partition_degree(const PolyCyclo& p) {
  std::vector<unsigned long> best;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<unsigned long> sorted(mono);
    std::sort(sorted.rbegin(), sorted.rend());
    if (first || !partition_lex_leq(sorted, best)) {
      best = sorted;
      first = false;
    }
  }
  return best;
}

}  // namespace

DescentBasisReport descent_basis_check(unsigned long r, unsigned long n,
                                       FlagVariant v, unsigned long budget) {
  DescentBasisReport report;
  const mpz_class dim = quotient_dimension(r, n);
  if (dim > budget)
    throw BudgetExceeded("descent_basis_check: dimension " + dim.get_str() +
                         " exceeds budget " + std::to_string(budget));
  report.dimension = static_cast<unsigned long>(dim.get_ui());

  const std::vector<PolyCyclo> reds = reducers(r, n);
  const std::vector<Monomial> box = artin_box(r, n);
  std::map<Monomial, std::size_t, DescendingLex> box_index;
  for (std::size_t i = 0; i < box.size(); ++i) box_index.emplace(box[i], i);

  const std::vector<ColoredPermutation> group = all_elements(r, n);
  Matrix<Cyclotomic> rows;
  rows.reserve(group.size());
  for (const ColoredPermutation& g : group) {
    const PolyCyclo nf = normal_form(descent_monomial(g, v), reds);
    std::vector<Cyclotomic> row(box.size(), Cyclotomic::zero(r));
    for (const auto& [mono, coeff] : nf.terms()) row[box_index.at(mono)] = coeff;
    rows.push_back(std::move(row));
  }
  report.rank = static_cast<unsigned long>(exact_rank(rows));
  report.full_rank = report.rank == report.dimension;

  if (n <= 2 && n >= 1) {
    report.minimality_checked = true;
    report.minimality_holds = true;
    // Deterministic ideal perturbations: +/- small monomial multiples of
    // each reducer, singly and in pairs.
    std::vector<PolyCyclo> perturbations;
    for (unsigned long total = 0; total <= 2; ++total)
      for (const Monomial& gamma : monomials_of_degree(n, total))
        for (const PolyCyclo& red : reds) {
          perturbations.push_back(
              PolyCyclo::monomial(r, gamma, Cyclotomic::one(r)) * red);
          perturbations.push_back(
              PolyCyclo::monomial(
                  r, gamma, Cyclotomic::from_rational(Rational(-2), r)) *
              red);
        }
    for (const ColoredPermutation& g : group) {
      const PolyCyclo mg = descent_monomial(g, v);
      const std::vector<unsigned long> fg = flag_statistics(g, v).f;
      for (std::size_t i = 0; i < perturbations.size() &&
                              report.minimality_holds;
           ++i) {
        PolyCyclo coset = mg;
        coset += perturbations[i];
        if (coset.is_zero()) continue;
        if (!partition_lex_leq(fg, partition_degree(coset)))
          report.minimality_holds = false;
      }
      // A two-generator combination for good measure.
      if (perturbations.size() >= 2 && report.minimality_holds) {
        PolyCyclo coset = mg;
        coset += perturbations[0];
        coset += perturbations[1];
        if (!coset.is_zero() &&
            !partition_lex_leq(fg, partition_degree(coset)))
          report.minimality_holds = false;
      }
      if (!report.minimality_holds) break;
    }
  }
  return report;
}

CoinvariantAlgebra::CoinvariantAlgebra(unsigned long r, unsigned long n,
                                       FlagVariant v, unsigned long budget)
    : r_(r), n_(n), variant_(v) {
  const mpz_class dim = quotient_dimension(r, n);
  if (dim > budget)
    throw BudgetExceeded("CoinvariantAlgebra: dimension " + dim.get_str() +
                         " exceeds budget " + std::to_string(budget));
  elements_ = all_elements(r, n);
  reducers_ = reducers(r, n);
  box_ = artin_box(r, n);
  for (std::size_t i = 0; i < box_.size(); ++i) box_index_.emplace(box_[i], i);
  if (elements_.size() != box_.size())
    throw std::logic_error("CoinvariantAlgebra: box / group size mismatch");

  Matrix<Cyclotomic> basis(box_.size(),
                           std::vector<Cyclotomic>(elements_.size(),
                                                   Cyclotomic::zero(r)));
  for (std::size_t g = 0; g < elements_.size(); ++g) {
    f_.push_back(flag_statistics(elements_[g], v).f);
    monomials_.push_back(descent_monomial(elements_[g], v));
    const PolyCyclo nf = normal_form(monomials_.back(), reducers_);
    for (const auto& [mono, coeff] : nf.terms())
      basis[box_index_.at(mono)][g] = coeff;
  }
  auto inv = exact_inverse(basis);
  if (!inv)
    throw std::runtime_error(
        "CoinvariantAlgebra: the descent monomials of this flag variant do "
        "not form a basis of the quotient");
  inverse_ = std::move(*inv);
}

const PolyCyclo& CoinvariantAlgebra::basis_monomial(std::size_t i) const {
  return monomials_.at(i);
}

unsigned long CoinvariantAlgebra::flag_one(std::size_t i) const {
  const auto& f = f_.at(i);
  return f.empty() ? 0 : f[0];
}

std::vector<Cyclotomic> CoinvariantAlgebra::coordinates(
    const PolyCyclo& p) const {
  if (p.nvars() != n_)
    throw std::invalid_argument("coordinates: variable count mismatch");
  const PolyCyclo nf = normal_form(p, reducers_);
  std::vector<Cyclotomic> y(dimension(), Cyclotomic::zero(r_));
  for (const auto& [mono, coeff] : nf.terms()) {
    const std::size_t j = box_index_.at(mono);
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] = y[i] + inverse_[i][j] * coeff;
  }
  return y;
}

Matrix<Cyclotomic> CoinvariantAlgebra::action_matrix(
    const ColoredPermutation& w) const {
  if (w.order() != r_ || w.degree() != n_)
    throw std::invalid_argument("action_matrix: element of the wrong group");
  const std::size_t dim = dimension();
  Matrix<Cyclotomic> out(dim, std::vector<Cyclotomic>(dim,
                                                      Cyclotomic::zero(r_)));
  for (std::size_t g = 0; g < dim; ++g) {
    const std::vector<Cyclotomic> col = coordinates(act(w, monomials_[g]));
    for (std::size_t i = 0; i < dim; ++i) out[i][g] = col[i];
  }
  return out;
}

UniPoly CoinvariantAlgebra::graded_trace(const ColoredPermutation& w) const {
  const Matrix<Cyclotomic> a = action_matrix(w);
  std::vector<Cyclotomic> coeffs;
  for (std::size_t g = 0; g < dimension(); ++g) {
    const unsigned long power = flag_one(g);
    if (coeffs.size() <= power) coeffs.resize(power + 1, Cyclotomic::zero(r_));
    coeffs[power] = coeffs[power] + a[g][g];
  }
  return UniPoly("q", std::move(coeffs));
}

PolyCyclo CoinvariantAlgebra::multigraded_trace(
    const ColoredPermutation& w) const {
  const Matrix<Cyclotomic> a = action_matrix(w);
  PolyCyclo out(r_, n_);
  for (std::size_t g = 0; g < dimension(); ++g)
    out.add_term(Monomial(f_[g].begin(), f_[g].end()), a[g][g]);
  return out;
}

UniPoly tableau_side_trace(const CharacterTable& table,
                           const ColoredPermutation& w, FlagVariant v) {
  const unsigned long r = table.order();
  const unsigned long n = table.degree();
  if (w.order() != r || w.degree() != n)
    throw std::invalid_argument("tableau_side_trace: element of wrong group");
  const Multipartition mu = cycle_type(w);
  std::vector<Cyclotomic> coeffs;
  for (std::size_t li = 0; li < table.labels().size(); ++li) {
    const Cyclotomic chi = table.row(li).value(mu);
    for (const StandardTableau& t : standard_tableaux(table.labels()[li])) {
      const unsigned long power = tableau_flag_one(t, v);
      if (coeffs.size() <= power)
        coeffs.resize(power + 1, Cyclotomic::zero(r));
      coeffs[power] = coeffs[power] + chi;
    }
  }
  return UniPoly("q", std::move(coeffs));
}

PolyCyclo tableau_side_multitrace(const CharacterTable& table,
                                  const ColoredPermutation& w,
                                  FlagVariant v) {
  const unsigned long r = table.order();
  const unsigned long n = table.degree();
  if (w.order() != r || w.degree() != n)
    throw std::invalid_argument("tableau_side_multitrace: wrong group");
  const Multipartition mu = cycle_type(w);
  PolyCyclo out(r, n);
  for (std::size_t li = 0; li < table.labels().size(); ++li) {
    const Cyclotomic chi = table.row(li).value(mu);
    for (const StandardTableau& t : standard_tableaux(table.labels()[li])) {
      const std::vector<unsigned long> f = tableau_flag_vector(t, v);
      out.add_term(Monomial(f.begin(), f.end()), chi);
    }
  }
  return out;
}

FiltrationReport filtration_characters(const CoinvariantAlgebra& algebra,
                                       GradingStatistic statistic) {
  const unsigned long r = algebra.order();
  const unsigned long n = algebra.degree();
  const std::size_t dim = algebra.dimension();

  std::vector<unsigned long> stat(dim, 0);
  for (std::size_t g = 0; g < dim; ++g)
    stat[g] = statistic == GradingStatistic::DescentCount
                  ? descent_number(algebra.elements()[g])
                  : algebra.flag_one(g);
  std::vector<unsigned long> values(stat);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // Invariance of the nested spans is decided on the generators; for each
  // basis line record the largest statistic its generator images touch.
  std::vector<ColoredPermutation> generators;
  for (unsigned long i = 1; i + 1 <= n; ++i)
    generators.push_back(ColoredPermutation::adjacent_transposition(r, n, i));
  if (r >= 2 && n >= 1)
    generators.push_back(ColoredPermutation::color_generator(r, n));
  std::vector<unsigned long> reach(dim, 0);
  for (std::size_t g = 0; g < dim; ++g) reach[g] = stat[g];
  for (const ColoredPermutation& gen : generators) {
    const Matrix<Cyclotomic> a = algebra.action_matrix(gen);
    for (std::size_t g = 0; g < dim; ++g)
      for (std::size_t i = 0; i < dim; ++i)
        if (!a[i][g].is_zero()) reach[g] = std::max(reach[g], stat[i]);
  }

  const std::vector<Multipartition> classes = conjugacy_classes(r, n);
  std::vector<Matrix<Cyclotomic>> rep_action;
  rep_action.reserve(classes.size());
  for (const Multipartition& mu : classes)
    rep_action.push_back(algebra.action_matrix(class_representative(r, mu)));

  FiltrationReport report;
  report.statistic = statistic;
  for (const unsigned long v : values) {
    unsigned long slice_dim = 0;
    bool invariant = true;
    for (std::size_t g = 0; g < dim; ++g) {
      if (stat[g] == v) ++slice_dim;
      if (stat[g] <= v && reach[g] > v) invariant = false;
    }
    std::vector<Cyclotomic> vals(classes.size(), Cyclotomic::zero(r));
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t g = 0; g < dim; ++g)
        if (stat[g] == v) vals[c] = vals[c] + rep_action[c][g][g];
    report.slices.push_back(FiltrationSlice{
        v, slice_dim, invariant, ClassFunction(r, n, std::move(vals))});
  }

  // Greedy grouping against the Foulkes characters: dimensions only grow,
  // so the first exact match at an invariant cut is the only candidate.
  ClassFunction acc(r, n,
                    std::vector<Cyclotomic>(classes.size(),
                                            Cyclotomic::zero(r)));
  const ClassFunction zero = acc;
  unsigned long k = 0;
  bool ok = true;
  for (std::size_t i = 0; i < report.slices.size(); ++i) {
    acc += report.slices[i].character;
    if (k <= n && report.slices[i].invariant &&
        acc == foulkes(r, n, k).to_class_function()) {
      report.boundaries.push_back(i);
      ++k;
      acc = zero;
    }
  }
  if (!(acc == zero)) ok = false;
  // Trailing Foulkes characters of dimension zero are matched by empty
  // groups (for r = 1 the top one always is).
  while (ok && k <= n) {
    if (foulkes(r, n, k).to_class_function() == zero) {
      report.boundaries.push_back(report.slices.empty()
                                      ? 0
                                      : report.slices.size() - 1);
      ++k;
    } else {
      ok = false;
    }
  }
  report.matches_foulkes = ok && k == n + 1;
  if (!report.matches_foulkes) report.boundaries.clear();
  return report;
}

}  // namespace wreathchar
