// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace wreathchar {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

unsigned long partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0UL);
}

unsigned long multipartition_size(const Multipartition& mp) {
  unsigned long n = 0;
  for (const auto& p : mp) n += partition_size(p);
  return n;
}

namespace {

void partitions_rec(unsigned long n, unsigned long maxpart, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned long first = std::min(n, maxpart); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(unsigned long n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

std::vector<Multipartition> multipartitions(unsigned long r, unsigned long n) {
  if (r == 0) throw std::invalid_argument("multipartitions: r must be >= 1");
  // Per-size partition lists, shared across compositions.
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (unsigned long m = 0; m <= n; ++m) by_size[m] = partitions(m);

  std::vector<Multipartition> out;
  std::vector<unsigned long> sizes(r, 0);
  // Enumerate size vectors in lexicographically decreasing order.
  auto rec_sizes = [&](auto&& self, unsigned long comp, unsigned long left) -> void {
    if (comp + 1 == r) {
      sizes[comp] = left;
      // Cartesian product over components, last component fastest.
      Multipartition cur(r);
      auto rec_fill = [&](auto&& fill, unsigned long c) -> void {
        if (c == r) {
          out.push_back(cur);
          return;
        }
        for (const auto& p : by_size[sizes[c]]) {
          cur[c] = p;
          fill(fill, c + 1);
        }
      };
      rec_fill(rec_fill, 0);
      return;
    }
    for (unsigned long take = left + 1; take-- > 0;) {
      sizes[comp] = take;
      self(self, comp + 1, left - take);
    }
  };
  rec_sizes(rec_sizes, 0, n);
  return out;
}

Partition conjugate_partition(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  out.resize(p[0], 0);
  for (unsigned long part : p)
    for (unsigned long j = 0; j < part; ++j) ++out[j];
  return out;
}

Multipartition conjugate_multipartition(const Multipartition& mp) {
  Multipartition out(mp.size());
  for (size_t c = 0; c < mp.size(); ++c)
    out[c] = conjugate_partition(mp[mp.size() - 1 - c]);
  return out;
}

Multipartition componentwise_conjugate(const Multipartition& mp) {
  Multipartition out(mp.size());
  for (size_t c = 0; c < mp.size(); ++c) out[c] = conjugate_partition(mp[c]);
  return out;
}

Multipartition negated_conjugate(const Multipartition& mp) {
  const size_t r = mp.size();
  Multipartition out(r);
  for (size_t c = 0; c < r; ++c)
    out[c] = conjugate_partition(mp[(r - c) % r]);
  return out;
}

std::vector<Box> boxes(const Multipartition& mp) {
  std::vector<Box> out;
  for (size_t c = 0; c < mp.size(); ++c)
    for (size_t row = 0; row < mp[c].size(); ++row)
      for (unsigned long col = 1; col <= mp[c][row]; ++col)
        out.push_back(Box{row + 1, col, c});
  return out;
}

std::vector<Box> addable_boxes(const Multipartition& mp) {
  std::vector<Box> out;
  for (size_t c = 0; c < mp.size(); ++c) {
    const Partition& p = mp[c];
    for (size_t row = 0; row <= p.size(); ++row) {
      const unsigned long len = row < p.size() ? p[row] : 0;
      const unsigned long above = row == 0 ? ~0UL : p[row - 1];
      if (len < above) out.push_back(Box{row + 1, len + 1, c});
      if (row == p.size()) break;  // only one fresh row can be started
    }
  }
  return out;
}

std::vector<Box> removable_boxes(const Multipartition& mp) {
  std::vector<Box> out;
  for (size_t c = 0; c < mp.size(); ++c) {
    const Partition& p = mp[c];
    for (size_t row = 0; row < p.size(); ++row) {
      const unsigned long below = row + 1 < p.size() ? p[row + 1] : 0;
      if (p[row] > below) out.push_back(Box{row + 1, p[row], c});
    }
  }
  return out;
}

std::string format_multipartition(const Multipartition& mp) {
  std::string s = "[";
  for (size_t c = 0; c < mp.size(); ++c) {
    if (c) s += ",";
    s += "[";
    for (size_t i = 0; i < mp[c].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(mp[c][i]);
    }
    s += "]";
  }
  s += "]";
  return s;
}

Multipartition parse_multipartition(const std::string& text,
                                    unsigned long expect_r) {
  Multipartition out;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_multipartition: " + why + " in '" +
                                text + "'");
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  skip_ws();
  bool done = i < text.size() && text[i] == ']';
  while (!done) {
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail("expected component '['");
    ++i;
    Partition part;
    skip_ws();
    while (i < text.size() && text[i] != ']') {
      size_t j = i;
      while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) fail("expected digit");
      part.push_back(std::stoul(text.substr(i, j - i)));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) fail("unterminated component");
    ++i;  // ']'
    if (!is_partition(part)) fail("component is not a partition");
    out.push_back(std::move(part));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      done = true;
    } else {
      fail("expected ',' or ']'");
    }
  }
  ++i;  // outer ']'
  skip_ws();
  if (i != text.size()) fail("trailing characters");
  if (expect_r > 0 && out.size() != expect_r)
    fail("expected " + std::to_string(expect_r) + " components");
  return out;
}

mpz_class standard_tableau_count(const Multipartition& mp) {
  const unsigned long n = multipartition_size(mp);
  mpz_class numer;
  mpz_fac_ui(numer.get_mpz_t(), n);
  mpz_class hooks(1);
  for (const auto& p : mp) {
    const Partition conj = conjugate_partition(p);
    for (size_t row = 0; row < p.size(); ++row)
      for (unsigned long col = 1; col <= p[row]; ++col)
        hooks *= (p[row] - col) + (conj[col - 1] - (row + 1)) + 1;
  }
  // The hook product divides n! exactly (Frame-Robinson-Thrall per component
  // together with the multinomial distributing entries over components).
  if (!mpz_divisible_p(numer.get_mpz_t(), hooks.get_mpz_t()))
    throw std::logic_error("standard_tableau_count: hook product must divide n!");
  return numer / hooks;
}

}  // namespace wreathchar
