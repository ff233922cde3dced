// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/tensor.hpp"

#include <gmpxx.h>

#include "wreathchar/classes.hpp"
#include "wreathchar/tableaux.hpp"

namespace wreathchar {

namespace {

void check_budget(unsigned long dim, unsigned long n, unsigned long budget) {
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), dim, n);
  if (space > budget)
    throw BudgetExceeded("tensor space of dimension " + space.get_str() +
                         " exceeds budget " + std::to_string(budget));
}

struct Cycle {
  std::vector<unsigned long> positions;  // 1-based
  unsigned long color = 0;               // color sum mod r
};

std::vector<Cycle> cycles_of(const ColoredPermutation& w) {
  const unsigned long r = w.order();
  const unsigned long n = w.degree();
  std::vector<bool> seen(n + 1, false);
  std::vector<Cycle> out;
  for (unsigned long s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    Cycle cyc;
    unsigned long j = s;
    do {
      seen[j] = true;
      cyc.positions.push_back(j);
      cyc.color = (cyc.color + w.color(j)) % r;
      j = w.image(j);
    } while (j != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

ParityAssignment all_odd_parities(unsigned long r) {
  return ParityAssignment(r, 1);
}

unsigned long index_color(unsigned long v, unsigned long r, unsigned long k) {
  const unsigned long dim = r * k + 1;
  if (v == 0 || v > dim)
    throw std::invalid_argument("index_color: vector index out of range");
  if (v <= k + 1) return 0;
  return (v - k - 2) / k + 1;
}

Cyclotomic unsigned_trace(const ColoredPermutation& w, unsigned long k,
                          unsigned long budget) {
  const unsigned long r = w.order();
  const unsigned long dim = r * k + 1;
  check_budget(dim, w.degree(), budget);
  Cyclotomic total = Cyclotomic::one(r);
  for (const Cycle& cyc : cycles_of(w)) {
    Cyclotomic block = Cyclotomic::zero(r);
    for (unsigned long v = 1; v <= dim; ++v)
      block += Cyclotomic::root_power(
          r, static_cast<long>((cyc.color * index_color(v, r, k)) % r));
    total *= block;
  }
  return total;
}

Cyclotomic naive_unsigned_trace(const ColoredPermutation& w, unsigned long k,
                                unsigned long budget) {
  const unsigned long r = w.order();
  const unsigned long n = w.degree();
  const unsigned long dim = r * k + 1;
  check_budget(dim, n, budget);
  Cyclotomic total = Cyclotomic::zero(r);
  std::vector<unsigned long> idx(n, 1);
  for (;;) {
    bool fixed = true;
    for (unsigned long t = 1; t <= n && fixed; ++t)
      if (idx[w.image(t) - 1] != idx[t - 1]) fixed = false;
    if (fixed) {
      unsigned long e = 0;
      for (unsigned long t = 1; t <= n; ++t)
        e = (e + w.color(t) * index_color(idx[t - 1], r, k)) % r;
      total += Cyclotomic::root_power(r, static_cast<long>(e));
    }
    unsigned long d = 0;
    while (d < n && ++idx[d] > dim) idx[d++] = 1;
    if (d == n) break;
  }
  return total;
}

Cyclotomic signed_trace(const ColoredPermutation& w, unsigned long k,
                        const ParityAssignment& parity,
                        unsigned long budget) {
  const unsigned long r = w.order();
  const unsigned long n = w.degree();
  const unsigned long dim = r * k + 1;
  if (parity.size() != r)
    throw std::invalid_argument("signed_trace: one parity per color needed");
  check_budget(dim, n, budget);

  const auto cycles = cycles_of(w);
  std::vector<unsigned long> cycle_of(n + 1, 0);
  for (std::size_t ci = 0; ci < cycles.size(); ++ci)
    for (unsigned long pos : cycles[ci].positions) cycle_of[pos] = ci;

  // Inversion pairs of the underlying permutation; the Koszul sign flips
  // once per pair whose two slots carry odd vectors.
  std::vector<std::pair<unsigned long, unsigned long>> inversions;
  for (unsigned long a = 1; a <= n; ++a)
    for (unsigned long b = a + 1; b <= n; ++b)
      if (w.image(a) > w.image(b)) inversions.emplace_back(a, b);

  Cyclotomic total = Cyclotomic::zero(r);
  std::vector<unsigned long> pick(cycles.size(), 1);  // vector per cycle
  for (;;) {
    unsigned long e = 0;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci)
      e = (e + cycles[ci].color * index_color(pick[ci], r, k)) % r;
    bool odd_sign = false;
    for (const auto& [a, b] : inversions) {
      const int pa = parity[index_color(pick[cycle_of[a]], r, k)];
      const int pb = parity[index_color(pick[cycle_of[b]], r, k)];
      if (pa == 1 && pb == 1) odd_sign = !odd_sign;
    }
    const Cyclotomic term = Cyclotomic::root_power(r, static_cast<long>(e));
    if (odd_sign)
      total -= term;
    else
      total += term;
    std::size_t d = 0;
    while (d < pick.size() && ++pick[d] > dim) pick[d++] = 1;
    if (d == pick.size()) break;
  }
  return total;
}

ClassFunction unsigned_trace_character(unsigned long r, unsigned long n,
                                       unsigned long k, unsigned long budget) {
  const auto classes = conjugacy_classes(r, n);
  std::vector<Cyclotomic> vals;
  vals.reserve(classes.size());
  for (const auto& mu : classes)
    vals.push_back(unsigned_trace(class_representative(r, mu), k, budget));
  return ClassFunction(r, n, std::move(vals));
}

ClassFunction signed_trace_character(unsigned long r, unsigned long n,
                                     unsigned long k,
                                     const ParityAssignment& parity,
                                     unsigned long budget) {
  const auto classes = conjugacy_classes(r, n);
  std::vector<Cyclotomic> vals;
  vals.reserve(classes.size());
  for (const auto& mu : classes)
    vals.push_back(
        signed_trace(class_representative(r, mu), k, parity, budget));
  return ClassFunction(r, n, std::move(vals));
}

mpz_class tensor_multiplicity(const CharacterTable& table,
                              const Multipartition& lambda, unsigned long k,
                              unsigned long budget) {
  const unsigned long r = table.order();
  const unsigned long n = table.degree();
  const ClassFunction trace = unsigned_trace_character(r, n, k, budget);
  const Cyclotomic ip = inner_product(trace, table.row(lambda));
  const mpz_class expect = row_semistandard_count(lambda, k);
  if (!ip.is_rational() || ip.rational_part() != Rational(expect))
    throw std::logic_error(
        "tensor_multiplicity: inner product disagrees with the "
        "row-semistandard count for " +
        format_multipartition(lambda));
  return expect;
}

Cyclotomic signed_tensor_multiplicity(const CharacterTable& table,
                                      const Multipartition& lambda,
                                      unsigned long k,
                                      const ParityAssignment& parity,
                                      unsigned long budget) {
  const unsigned long r = table.order();
  const unsigned long n = table.degree();
  const ClassFunction trace = signed_trace_character(r, n, k, parity, budget);
  return inner_product(trace, table.row(lambda));
}

}  // namespace wreathchar
