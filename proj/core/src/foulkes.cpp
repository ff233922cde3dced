// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/foulkes.hpp"

#include <string>
#include <utility>

#include "wreathchar/colored_perm.hpp"
#include "wreathchar/linalg.hpp"

namespace wreathchar {

namespace {

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Cyclotomic scalar(const mpz_class& m) {
  return Cyclotomic::from_rational(Rational(m));
}

}  // namespace

BlockFunction::BlockFunction(unsigned long r, unsigned long n,
                             std::vector<Cyclotomic> by_length)
    : r_(r), n_(n), values_(std::move(by_length)) {
  if (r == 0) throw std::invalid_argument("BlockFunction: r must be positive");
  if (values_.size() != n + 1)
    throw std::invalid_argument("BlockFunction: n+1 length values expected");
  const Cyclotomic lift = Cyclotomic::one(r);
  for (auto& v : values_) v = v * lift;
}

const Cyclotomic& BlockFunction::at_length(unsigned long ell) const {
  return values_.at(ell);
}

ClassFunction BlockFunction::to_class_function() const {
  const auto classes = conjugacy_classes(r_, n_);
  std::vector<Cyclotomic> vals;
  vals.reserve(classes.size());
  for (const auto& mu : classes)
    vals.push_back(values_[mu[0].size()]);
  return ClassFunction(r_, n_, std::move(vals));
}

namespace {
void require_same_block_domain(const BlockFunction& a, const BlockFunction& b,
                               const char* who) {
  if (a.order() != b.order() || a.degree() != b.degree())
    throw std::invalid_argument(std::string(who) + ": mismatched domains");
}
}  // namespace

BlockFunction& BlockFunction::operator+=(const BlockFunction& o) {
  require_same_block_domain(*this, o, "BlockFunction::operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

BlockFunction& BlockFunction::operator-=(const BlockFunction& o) {
  require_same_block_domain(*this, o, "BlockFunction::operator-=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

BlockFunction& BlockFunction::operator*=(const Cyclotomic& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool BlockFunction::operator==(const BlockFunction& o) const {
  if (r_ != o.r_ || n_ != o.n_) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!(values_[i] - o.values_[i]).is_zero()) return false;
  return true;
}

BlockFunction chi_block(unsigned long r, unsigned long n, unsigned long k) {
  std::vector<Cyclotomic> vals;
  vals.reserve(n + 1);
  const mpz_class base = mpz_class(r) * k + 1;
  for (unsigned long ell = 0; ell <= n; ++ell)
    vals.push_back(scalar(ipow(base, ell)));
  return BlockFunction(r, n, std::move(vals));
}

BlockFunction chi_signed_closed(unsigned long r, unsigned long n,
                                unsigned long k) {
  std::vector<Cyclotomic> vals;
  vals.reserve(n + 1);
  const mpz_class base = -(mpz_class(r) * k + 1);
  const bool flip = (n + r - 1) % 2 != 0;
  for (unsigned long ell = 0; ell <= n; ++ell) {
    mpz_class v = ipow(base, ell);
    if (flip) v = -v;
    vals.push_back(scalar(v));
  }
  return BlockFunction(r, n, std::move(vals));
}

BlockFunction foulkes(unsigned long r, unsigned long n, unsigned long k) {
  std::vector<Cyclotomic> vals;
  vals.reserve(n + 1);
  for (unsigned long ell = 0; ell <= n; ++ell) {
    mpz_class v = 0;
    for (unsigned long j = 0; j <= k && j <= n + 1; ++j) {
      const mpz_class base = mpz_class(r) * (k - j) + 1;
      const mpz_class term = binomial(n + 1, j) * ipow(base, ell);
      if (j % 2 == 0)
        v += term;
      else
        v -= term;
    }
    vals.push_back(scalar(v));
  }
  return BlockFunction(r, n, std::move(vals));
}

bool foulkes_inverse_check(unsigned long r, unsigned long n) {
  for (unsigned long k = 0; k <= n; ++k) {
    BlockFunction rhs(r, n,
                      std::vector<Cyclotomic>(n + 1, Cyclotomic::zero(r)));
    for (unsigned long j = 0; j <= k; ++j)
      rhs += foulkes(r, n, k - j) * scalar(binomial(n + j, j));
    if (rhs != chi_block(r, n, k)) return false;
  }
  return true;
}

std::vector<mpz_class> foulkes_multiplicities(const CharacterTable& table,
                                              unsigned long k) {
  const unsigned long r = table.order();
  const unsigned long n = table.degree();
  const ClassFunction phi = foulkes(r, n, k).to_class_function();
  std::vector<mpz_class> out;
  out.reserve(table.rows().size());
  for (std::size_t li = 0; li < table.rows().size(); ++li) {
    const Cyclotomic ip = inner_product(phi, table.row(li));
    const std::string where = "<phi_" + std::to_string(k) + ", chi^" +
                              format_multipartition(table.labels()[li]) + ">";
    if (!ip.is_rational())
      throw ConventionMismatch(where + " is irrational");
    const Rational mult = ip.rational_part();
    if (!mult.is_integer() || mult.sign() < 0)
      throw ConventionMismatch(where + " = " + mult.str() +
                               " is not a non-negative integer");
    if (mult != Rational(mpz_class(m_count(table.labels()[li], k))))
      throw ConventionMismatch(where + " = " + mult.str() +
                               " does not count descents");
    out.push_back(mult.numerator());
  }
  return out;
}

std::vector<mpz_class> foulkes_multiplicities(unsigned long r, unsigned long n,
                                              unsigned long k) {
  return foulkes_multiplicities(irreducible_table(r, n), k);
}

ClassFunction signed_foulkes_combinatorial(const CharacterTable& table,
                                           unsigned long k,
                                           BoundaryConvention conv) {
  const unsigned long r = table.order();
  const unsigned long n = table.degree();
  ClassFunction acc(r, n,
                    std::vector<Cyclotomic>(conjugacy_classes(r, n).size(),
                                            Cyclotomic::zero(r)));
  for (std::size_t li = 0; li < table.rows().size(); ++li) {
    const unsigned long m = mbar_count(table.labels()[li], k, conv);
    if (m != 0) acc += table.row(li) * scalar(mpz_class(m));
  }
  return acc;
}

bool branching_check(unsigned long r, unsigned long n) {
  if (n == 0)
    throw std::invalid_argument("branching_check: nothing below n = 0");
  for (unsigned long k = 0; k <= n; ++k) {
    const mpz_class up = mpz_class(r) * k + 1;            // rk+1
    const mpz_class down = mpz_class(r) * (n + 1) - up;   // r(n+1)-(rk+1)

    const ClassFunction chi_res =
        restrict_character(chi_block(r, n, k).to_class_function());
    if (chi_res !=
        chi_block(r, n - 1, k).to_class_function() * scalar(up))
      return false;

    const ClassFunction phi_res =
        restrict_character(foulkes(r, n, k).to_class_function());
    BlockFunction rhs = foulkes(r, n - 1, k) * scalar(up);
    if (k >= 1) rhs += foulkes(r, n - 1, k - 1) * scalar(down);
    if (phi_res != rhs.to_class_function()) return false;
  }
  return true;
}

bool properties_check(unsigned long r, unsigned long n) {
  BlockFunction total(r, n,
                      std::vector<Cyclotomic>(n + 1, Cyclotomic::zero(r)));
  for (unsigned long k = 0; k <= n; ++k) {
    const BlockFunction phi = foulkes(r, n, k);
    const Cyclotomic dim = phi.at_length(n);
    if (!dim.is_rational() ||
        dim.rational_part() != Rational(eulerian(r, n, k)))
      return false;
    total += phi;
  }
  const auto classes = conjugacy_classes(r, n);
  mpz_class group = factorial(n);
  for (unsigned long i = 0; i < n; ++i) group *= r;
  Multipartition id(r);
  if (n > 0) id[0] = Partition(n, 1);
  std::vector<Cyclotomic> reg(classes.size(), Cyclotomic::zero(r));
  reg[class_index(r, n, id)] = scalar(group);
  return total.to_class_function() == ClassFunction(r, n, std::move(reg));
}

Multipartition descent_isolating_shape(unsigned long r, unsigned long n,
                                       unsigned long k) {
  if (r == 0 || k > n)
    throw std::invalid_argument("descent_isolating_shape: bad parameters");
  Multipartition shape(r);
  if (r >= 2) {
    if (n > k) shape[0] = Partition{n - k};
    shape[1] = Partition(k, 1);
    return shape;
  }
  // r = 1: hook (n-k, 1^k); only k <= n-1 exists (a hook has an arm).
  if (k == n && n > 0)
    throw std::invalid_argument(
        "descent_isolating_shape: no shape isolates k = n when r = 1");
  if (n > 0) {
    shape[0].push_back(n - k);
    for (unsigned long i = 0; i < k; ++i) shape[0].push_back(1);
  }
  return shape;
}

FoulkesCoefficients block_coefficients(const BlockFunction& f) {
  const unsigned long r = f.order();
  const unsigned long n = f.degree();
  std::vector<BlockFunction> phis;
  phis.reserve(n + 1);
  for (unsigned long j = 0; j <= n; ++j) phis.push_back(foulkes(r, n, j));

  Matrix<Cyclotomic> a(n + 1, std::vector<Cyclotomic>());
  std::vector<Cyclotomic> b;
  b.reserve(n + 1);
  for (unsigned long ell = 0; ell <= n; ++ell) {
    for (unsigned long j = 0; j <= n; ++j)
      a[ell].push_back(phis[j].at_length(ell));
    b.push_back(f.at_length(ell));
  }
  auto sol = exact_solve(a, b);
  if (!sol)
    throw std::logic_error("block_coefficients: transform matrix is singular");
  return FoulkesCoefficients{r, n, std::move(*sol)};
}

FoulkesCoefficients block_coefficients(const BlockFunction& f,
                                       const CharacterTable& table) {
  const unsigned long r = f.order();
  const unsigned long n = f.degree();
  if (table.order() != r || table.degree() != n)
    throw std::invalid_argument("block_coefficients: mismatched domains");
  const ClassFunction fc = f.to_class_function();

  std::vector<Cyclotomic> coeffs(n + 1, Cyclotomic::zero(r));
  const unsigned long top = (r >= 2 || n == 0) ? n : n - 1;
  for (unsigned long k = 0; k <= top; ++k) {
    const Multipartition shape = descent_isolating_shape(r, n, k);
    const mpz_class count = standard_tableau_count(shape);
    coeffs[k] = inner_product(fc, table.row(shape)) *
                Cyclotomic::from_rational(Rational(1) / Rational(count));
  }
  if (r == 1 && n > 0) {
    // The length-0 slot pins the remaining coordinate.
    Cyclotomic residue = f.at_length(0);
    for (unsigned long k = 0; k < n; ++k)
      residue -= coeffs[k] * foulkes(r, n, k).at_length(0);
    coeffs[n] = residue / foulkes(r, n, n).at_length(0);
  }

  BlockFunction recon(r, n,
                      std::vector<Cyclotomic>(n + 1, Cyclotomic::zero(r)));
  for (unsigned long k = 0; k <= n; ++k)
    recon += foulkes(r, n, k) * coeffs[k];
  if (recon != f)
    throw std::logic_error("block_coefficients: reconstruction failed");
  return FoulkesCoefficients{r, n, std::move(coeffs)};
}

bool is_block_character(const BlockFunction& f) {
  for (const auto& c : block_coefficients(f).coeffs) {
    if (!c.is_rational()) return false;
    if (c.rational_part().sign() < 0) return false;
  }
  return true;
}

FoulkesCoefficients q_block_expansion(unsigned long r, unsigned long n,
                                      const Rational& q) {
  if (q.sign() < 0)
    throw std::invalid_argument("q_block_expansion: q must be non-negative");
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (unsigned long j = 0; j <= n; ++j)
    coeffs.push_back(binomial(q + Rational(mpz_class(n - j)), n));

  // (rq+1)^ell must come back exactly on every length slot.
  const Rational base = Rational(mpz_class(r)) * q + Rational(1);
  Rational target(1);
  for (unsigned long ell = 0; ell <= n; ++ell) {
    Rational acc(0);
    for (unsigned long j = 0; j <= n; ++j)
      acc += coeffs[j] * foulkes(r, n, j).at_length(ell).rational_part();
    if (acc != target)
      throw std::logic_error("q_block_expansion: reconstruction failed");
    target *= base;
  }

  std::vector<Cyclotomic> out;
  out.reserve(n + 1);
  for (const auto& c : coeffs)
    out.push_back(Cyclotomic::from_rational(c));
  return FoulkesCoefficients{r, n, std::move(out)};
}

}  // namespace wreathchar
