// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/classes.hpp"

#include <map>
#include <stdexcept>

namespace wreathchar {

std::vector<Multipartition> conjugacy_classes(unsigned long r,
                                              unsigned long n) {
  return multipartitions(r, n);
}

std::size_t class_index(unsigned long r, unsigned long n,
                        const Multipartition& mu) {
  const auto classes = conjugacy_classes(r, n);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == mu) return i;
  throw std::invalid_argument("class_index: " + format_multipartition(mu) +
                              " is not an " + std::to_string(r) +
                              "-multipartition of " + std::to_string(n));
}

mpz_class centralizer_order(unsigned long r, const Multipartition& mu) {
  mpz_class z(1);
  for (const auto& comp : mu) {
    mpz_class rpow;
    mpz_ui_pow_ui(rpow.get_mpz_t(), r, comp.size());
    z *= rpow;
    std::map<unsigned long, unsigned long> mult;
    for (unsigned long part : comp) ++mult[part];
    for (const auto& [k, a] : mult) {
      mpz_class kpow;
      mpz_ui_pow_ui(kpow.get_mpz_t(), k, a);
      z *= kpow * factorial(a);
    }
  }
  return z;
}

mpz_class class_size(unsigned long r, const Multipartition& mu) {
  const unsigned long n = multipartition_size(mu);
  mpz_class order;
  mpz_ui_pow_ui(order.get_mpz_t(), r, n);
  order *= factorial(n);
  const mpz_class cent = centralizer_order(r, mu);
  if (!mpz_divisible_p(order.get_mpz_t(), cent.get_mpz_t()))
    throw std::logic_error("class_size: centralizer must divide the group order");
  return order / cent;
}

ColoredPermutation class_representative(unsigned long r,
                                        const Multipartition& mu) {
  const unsigned long n = multipartition_size(mu);
  std::vector<unsigned long> img(n), col(n, 0);
  unsigned long next = 1;
  for (unsigned long c = 0; c < mu.size(); ++c) {
    for (unsigned long part : mu[c]) {
      // cycle next -> next+1 -> ... -> next+part-1 -> next
      for (unsigned long j = 0; j + 1 < part; ++j) img[next - 1 + j] = next + j + 1;
      img[next - 1 + part - 1] = next;
      col[next - 1] = c % r;
      next += part;
    }
  }
  return ColoredPermutation(r, std::move(img), std::move(col));
}

Rational ewens_weight(const ColoredPermutation& w, const Rational& q) {
  const Rational base = Rational(static_cast<long>(w.order())) * q + Rational(1);
  Rational out(1);
  for (unsigned long i = 0; i < length(w); ++i) out *= base;
  return out;
}

Rational ewens_normalizer(unsigned long r, unsigned long n, const Rational& q) {
  const Rational base = Rational(static_cast<long>(r)) * q + Rational(1);
  Rational sum(0);
  for (const auto& mu : conjugacy_classes(r, n)) {
    Rational w(1);
    for (unsigned long i = 0; i < mu[0].size(); ++i) w *= base;
    sum += w * Rational(class_size(r, mu));
  }
  return sum;
}

Rational ewens_closed_form(unsigned long r, unsigned long n,
                           const Rational& q) {
  Rational prod(1);
  for (unsigned long i = 1; i <= n; ++i)
    prod *= Rational(static_cast<long>(r)) * (q + Rational(static_cast<long>(i)));
  return prod;
}

Rational ewens_printed_form(unsigned long r, unsigned long n,
                            const Rational& q) {
  Rational prod(1);
  for (unsigned long i = 0; i <= n; ++i)
    prod *= Rational(static_cast<long>(r)) * (q + Rational(static_cast<long>(i))) +
            Rational(1);
  return prod;
}

}  // namespace wreathchar
