// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/char_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "wreathchar/rational.hpp"
#include "wreathchar/sn_characters.hpp"
#include "wreathchar/tableaux.hpp"

namespace wreathchar {

ClassFunction::ClassFunction(unsigned long r, unsigned long n,
                             std::vector<Cyclotomic> values)
    : r_(r), n_(n), values_(std::move(values)) {
  if (r == 0) throw std::invalid_argument("ClassFunction: r must be positive");
  const std::size_t expect = conjugacy_classes(r, n).size();
  if (values_.size() != expect)
    throw std::invalid_argument("ClassFunction: one value per class expected");
  const Cyclotomic lift = Cyclotomic::one(r);
  for (auto& v : values_) v = v * lift;
}

const Cyclotomic& ClassFunction::value(std::size_t class_idx) const {
  return values_.at(class_idx);
}

const Cyclotomic& ClassFunction::value(const Multipartition& mu) const {
  return values_.at(class_index(r_, n_, mu));
}

namespace {
void require_same_domain(const ClassFunction& a, const ClassFunction& b,
                         const char* who) {
  if (a.order() != b.order() || a.degree() != b.degree())
    throw std::invalid_argument(std::string(who) + ": mismatched domains");
}
}  // namespace

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_domain(*this, o, "ClassFunction::operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_domain(*this, o, "ClassFunction::operator-=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (r_ != o.r_ || n_ != o.n_) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!(values_[i] - o.values_[i]).is_zero()) return false;
  return true;
}

CharacterTable::CharacterTable(unsigned long r, unsigned long n,
                               std::vector<Multipartition> labels,
                               std::vector<ClassFunction> rows,
                               unsigned long color_relabel)
    : r_(r),
      n_(n),
      labels_(std::move(labels)),
      rows_(std::move(rows)),
      relabel_(color_relabel) {
  if (labels_.size() != rows_.size())
    throw std::invalid_argument("CharacterTable: label/row count mismatch");
  for (const auto& row : rows_)
    if (row.order() != r_ || row.degree() != n_)
      throw std::invalid_argument("CharacterTable: row domain mismatch");
}

const ClassFunction& CharacterTable::row(const Multipartition& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return rows_[i];
  throw std::invalid_argument("CharacterTable::row: unknown label");
}

Multipartition apply_color_relabel(const Multipartition& mp, unsigned long u) {
  const unsigned long r = static_cast<unsigned long>(mp.size());
  if (r == 0) return mp;
  Multipartition out(r);
  for (unsigned long c = 0; c < r; ++c) out[c] = mp[(u * c) % r];
  return out;
}

CharacterTable irreducible_table(unsigned long r, unsigned long n) {
  if (r == 0)
    throw std::invalid_argument("irreducible_table: r must be positive");
  const auto classes = conjugacy_classes(r, n);
  const std::size_t num = classes.size();

  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < num; ++i)
    index_of.emplace(format_multipartition(classes[i]), i);

  // Classes of a W(r,m) factor, with everything induction needs about them:
  // the inverse centralizer order, the color sum mod r (which drives the
  // linear twist), and the underlying S_m cycle type.
  struct FactorClass {
    Multipartition nu;
    Partition merged;
    unsigned long twist = 0;
    Rational inv_centralizer;
  };
  std::vector<std::vector<FactorClass>> by_size(n + 1);
  for (unsigned long m = 0; m <= n; ++m) {
    for (const auto& nu : multipartitions(r, m)) {
      FactorClass fc;
      fc.nu = nu;
      unsigned long cs = 0;
      for (unsigned long c = 0; c < r; ++c)
        cs = (cs + c * (nu[c].size() % r)) % r;
      fc.twist = cs;
      for (const auto& comp : nu)
        fc.merged.insert(fc.merged.end(), comp.begin(), comp.end());
      std::sort(fc.merged.begin(), fc.merged.end(), std::greater<>());
      fc.inv_centralizer = Rational(1) / Rational(centralizer_order(r, nu));
      by_size[m].push_back(std::move(fc));
    }
  }

  std::vector<ClassFunction> rows;
  rows.reserve(num);
  for (const auto& lambda : classes) {
    std::vector<unsigned long> sizes(r);
    for (unsigned long i = 0; i < r; ++i) sizes[i] = partition_size(lambda[i]);

    // Induced value per fused class, before the centralizer rescale:
    //   sum over subgroup classes mapping into it of  prod_i f_i / |C_i|.
    std::vector<Cyclotomic> acc(num, Cyclotomic::zero(r));
    std::vector<std::size_t> pick(r, 0);
    for (;;) {
      Cyclotomic w = Cyclotomic::one(r);
      bool vanished = false;
      for (unsigned long i = 0; i < r; ++i) {
        const FactorClass& fc = by_size[sizes[i]][pick[i]];
        const mpz_class chi = sn_character(lambda[i], fc.merged);
        if (chi == 0) {
          vanished = true;
          break;
        }
        w *= Cyclotomic::root_power(
            r, static_cast<long>((i * fc.twist) % r));
        w *= Cyclotomic::from_rational(Rational(chi) * fc.inv_centralizer);
      }
      if (!vanished) {
        Multipartition fused(r);
        for (unsigned long i = 0; i < r; ++i) {
          const Multipartition& nu = by_size[sizes[i]][pick[i]].nu;
          for (unsigned long c = 0; c < r; ++c)
            fused[c].insert(fused[c].end(), nu[c].begin(), nu[c].end());
        }
        for (auto& comp : fused)
          std::sort(comp.begin(), comp.end(), std::greater<>());
        acc[index_of.at(format_multipartition(fused))] += w;
      }
      unsigned long d = 0;
      while (d < r) {
        if (++pick[d] < by_size[sizes[d]].size()) break;
        pick[d] = 0;
        ++d;
      }
      if (d == r) break;
    }

    std::vector<Cyclotomic> vals;
    vals.reserve(num);
    for (std::size_t c = 0; c < num; ++c)
      vals.push_back(acc[c] * Cyclotomic::from_rational(
                                  Rational(centralizer_order(r, classes[c]))));
    rows.emplace_back(r, n, std::move(vals));
  }
  return calibrate_labels(r, n, classes, rows);
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
  require_same_domain(f, g, "inner_product");
  const unsigned long r = f.order();
  const unsigned long n = f.degree();
  const auto classes = conjugacy_classes(r, n);
  Cyclotomic total = Cyclotomic::zero(r);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Cyclotomic term = f.value(c) * g.value(c).conjugate();
    total += term * Cyclotomic::from_rational(Rational(class_size(r, classes[c])));
  }
  mpz_class group = factorial(n);
  for (unsigned long i = 0; i < n; ++i) group *= r;
  return total * Cyclotomic::from_rational(Rational(1) / Rational(group));
}

ClassFunction restrict_character(const ClassFunction& f) {
  if (f.degree() == 0)
    throw std::invalid_argument("restrict_character: degree already zero");
  const unsigned long r = f.order();
  const unsigned long n = f.degree();
  const auto small = conjugacy_classes(r, n - 1);
  std::vector<Cyclotomic> vals;
  vals.reserve(small.size());
  for (const auto& mu : small) {
    Multipartition big = mu;  // adjoin the fixed point n^0
    big[0].push_back(1);
    std::sort(big[0].begin(), big[0].end(), std::greater<>());
    vals.push_back(f.value(big));
  }
  return ClassFunction(r, n - 1, std::move(vals));
}

std::vector<Cyclotomic> decompose(const ClassFunction& f,
                                  const CharacterTable& table) {
  if (f.order() != table.order() || f.degree() != table.degree())
    throw std::invalid_argument("decompose: mismatched domains");
  const std::size_t num = f.values().size();
  std::vector<Cyclotomic> coeffs;
  coeffs.reserve(table.rows().size());
  ClassFunction recon(
      f.order(), f.degree(),
      std::vector<Cyclotomic>(num, Cyclotomic::zero(f.order())));
  for (const auto& row : table.rows()) {
    Cyclotomic c = inner_product(f, row);
    recon += row * c;
    coeffs.push_back(std::move(c));
  }
  if (recon != f) throw std::logic_error("decompose: reconstruction failed");
  return coeffs;
}

bool descent_multiplicity_check(const CharacterTable& table) {
  const unsigned long r = table.order();
  const unsigned long n = table.degree();
  const auto classes = conjugacy_classes(r, n);
  std::vector<unsigned long> ell(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    ell[c] = static_cast<unsigned long>(classes[c][0].size());

  for (unsigned long k = 0; k <= n; ++k) {
    // phi_k = sum_j (-1)^j C(n+1, j) chi_{k-j}, with chi_m = (rm+1)^{#color-0
    // cycles}; rational-valued, so it goes in as an order-1 cyclotomic.
    std::vector<Cyclotomic> phi_vals;
    phi_vals.reserve(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      mpz_class v = 0;
      for (unsigned long j = 0; j <= k; ++j) {
        mpz_class base = r * (k - j) + 1;
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), ell[c]);
        const mpz_class term = binomial(n + 1, j) * pw;
        if (j % 2 == 0)
          v += term;
        else
          v -= term;
      }
      phi_vals.push_back(Cyclotomic::from_rational(Rational(v)));
    }
    const ClassFunction phi(r, n, std::move(phi_vals));
    for (std::size_t li = 0; li < table.labels().size(); ++li) {
      const Cyclotomic ip = inner_product(phi, table.row(li));
      if (!ip.is_rational()) return false;
      const Rational mult = ip.rational_part();
      if (!mult.is_integer() || mult.sign() < 0) return false;
      if (mult != Rational(mpz_class(m_count(table.labels()[li], k))))
        return false;
    }
  }
  return true;
}

CharacterTable calibrate_labels(unsigned long r, unsigned long n,
                                const std::vector<Multipartition>& labels,
                                const std::vector<ClassFunction>& rows) {
  if (labels.size() != rows.size())
    throw std::invalid_argument("calibrate_labels: label/row count mismatch");
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < labels.size(); ++i)
    pos.emplace(format_multipartition(labels[i]), i);

  std::vector<unsigned long> units;
  if (r == 1) {
    units.push_back(1);
  } else {
    for (unsigned long u = 1; u < r; ++u)
      if (std::gcd(u, r) == 1) units.push_back(u);
  }
  for (unsigned long u : units) {
    std::vector<ClassFunction> cand;
    cand.reserve(rows.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      cand.push_back(
          rows[pos.at(format_multipartition(apply_color_relabel(labels[i], u)))]);
    CharacterTable t(r, n, labels, std::move(cand), u);
    if (descent_multiplicity_check(t)) return t;
  }
  throw std::runtime_error(
      "calibrate_labels: no unit of Z/r reconciles the descent multiplicities");
}

}  // namespace wreathchar
