// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/sn_characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wreathchar {

namespace {

// Border strips are removed through the beta-set (first-column hook
// lengths): removing a strip of size t means replacing some beta number b
// by b - t, provided b - t is not already present.  The strip height is the
// number of beta numbers strictly between b - t and b.
std::vector<unsigned long> beta_set(const Partition& p) {
  std::vector<unsigned long> beta;
  const unsigned long len = p.size();
  for (unsigned long i = 0; i < len; ++i) beta.push_back(p[i] + (len - 1 - i));
  return beta;  // strictly decreasing
}

Partition from_beta(std::vector<unsigned long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  // Strip trailing zeros of the staircase.
  Partition p;
  const unsigned long len = beta.size();
  for (unsigned long i = 0; i < len; ++i) {
    const unsigned long part = beta[i] - (len - 1 - i);
    if (part > 0) p.push_back(part);
  }
  return p;
}

mpz_class mn_rec(const Partition& lambda, const Partition& mu);

std::string key_of(const Partition& a, const Partition& b) {
  std::string k;
  for (unsigned long x : a) k += std::to_string(x) + ",";
  k += "|";
  for (unsigned long x : b) k += std::to_string(x) + ",";
  return k;
}

std::map<std::string, mpz_class>& cache() {
  static std::map<std::string, mpz_class> c;
  return c;
}
std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

mpz_class mn_rec(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;  // empty shape too, by the size precondition
  const std::string key = key_of(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    if (auto it = cache().find(key); it != cache().end()) return it->second;
  }
  const unsigned long t = mu[0];
  const Partition mu_rest(mu.begin() + 1, mu.end());
  const auto beta = beta_set(lambda);
  mpz_class total = 0;
  for (unsigned long idx = 0; idx < beta.size(); ++idx) {
    const unsigned long b = beta[idx];
    if (b < t) continue;
    const unsigned long target = b - t;
    bool occupied = false;
    unsigned long height = 0;
    for (unsigned long j = 0; j < beta.size(); ++j) {
      if (j == idx) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] < b && beta[j] > target) ++height;
    }
    if (occupied) continue;
    auto nb = beta;
    nb[idx] = target;
    const mpz_class sub = mn_rec(from_beta(std::move(nb)), mu_rest);
    if (height % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().emplace(key, total);
  return total;
}

}  // namespace

mpz_class sn_character(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || !is_partition(mu))
    throw std::invalid_argument("sn_character: arguments must be partitions");
  if (partition_size(lambda) != partition_size(mu))
    throw std::invalid_argument("sn_character: sizes differ");
  return mn_rec(lambda, mu);
}

}  // namespace wreathchar
