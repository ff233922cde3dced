// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/colored_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreathchar {

ColoredPermutation::ColoredPermutation(unsigned long r,
                                       std::vector<unsigned long> images,
                                       std::vector<unsigned long> colors)
    : r_(r), img_(std::move(images)), col_(std::move(colors)) {
  if (r_ == 0) throw std::invalid_argument("ColoredPermutation: r must be >= 1");
  if (img_.size() != col_.size())
    throw std::invalid_argument("ColoredPermutation: image/color length mismatch");
  const unsigned long n = img_.size();
  std::vector<bool> seen(n, false);
  for (unsigned long v : img_) {
    if (v == 0 || v > n || seen[v - 1])
      throw std::invalid_argument("ColoredPermutation: images not a permutation");
    seen[v - 1] = true;
  }
  for (unsigned long c : col_)
    if (c >= r_)
      throw std::invalid_argument("ColoredPermutation: color out of range");
}

ColoredPermutation ColoredPermutation::identity(unsigned long r,
                                                unsigned long n) {
  std::vector<unsigned long> img(n);
  std::iota(img.begin(), img.end(), 1UL);
  return ColoredPermutation(r, std::move(img), std::vector<unsigned long>(n, 0));
}

ColoredPermutation ColoredPermutation::color_generator(unsigned long r,
                                                       unsigned long n) {
  if (n == 0) throw std::invalid_argument("color_generator: n must be >= 1");
  auto e = identity(r, n);
  e.col_[0] = 1 % r;
  return e;
}

ColoredPermutation ColoredPermutation::adjacent_transposition(unsigned long r,
                                                              unsigned long n,
                                                              unsigned long i) {
  if (i == 0 || i >= n)
    throw std::invalid_argument("adjacent_transposition: need 1 <= i <= n-1");
  auto e = identity(r, n);
  std::swap(e.img_[i - 1], e.img_[i]);
  return e;
}

ColoredPermutation ColoredPermutation::operator*(
    const ColoredPermutation& b) const {
  if (r_ != b.r_ || img_.size() != b.img_.size())
    throw std::invalid_argument("ColoredPermutation: mismatched groups");
  const unsigned long n = img_.size();
  std::vector<unsigned long> img(n), col(n);
  for (unsigned long i = 1; i <= n; ++i) {
    const unsigned long bi = b.image(i);
    img[i - 1] = image(bi);
    col[i - 1] = (b.color(i) + color(bi)) % r_;
  }
  return ColoredPermutation(r_, std::move(img), std::move(col));
}

ColoredPermutation ColoredPermutation::inverse() const {
  const unsigned long n = img_.size();
  std::vector<unsigned long> img(n), col(n);
  for (unsigned long i = 1; i <= n; ++i) img[image(i) - 1] = i;
  for (unsigned long j = 1; j <= n; ++j) {
    const unsigned long pre = img[j - 1];  // w^{-1}(j)
    col[j - 1] = (r_ - color(pre) % r_) % r_;
  }
  return ColoredPermutation(r_, std::move(img), std::move(col));
}

std::string ColoredPermutation::word() const {
  std::ostringstream os;
  for (unsigned long i = 1; i <= degree(); ++i) {
    if (i > 1) os << ' ';
    os << image(i) << '^' << color(i);
  }
  return os.str();
}

ColoredPermutation ColoredPermutation::parse_word(unsigned long r,
                                                  const std::string& text) {
  std::istringstream is(text);
  std::vector<unsigned long> img, col;
  std::string tok;
  while (is >> tok) {
    const auto caret = tok.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == tok.size())
      throw std::invalid_argument("parse_word: token '" + tok +
                                  "' is not of the form value^color");
    try {
      img.push_back(std::stoul(tok.substr(0, caret)));
      col.push_back(std::stoul(tok.substr(caret + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_word: bad number in token '" + tok + "'");
    }
  }
  return ColoredPermutation(r, std::move(img), std::move(col));
}

int ColoredPermutation::permutation_sign() const {
  const unsigned long n = degree();
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (unsigned long i = 0; i < n; ++i) {
    if (seen[i]) continue;
    unsigned long len = 0;
    for (unsigned long j = i; !seen[j]; j = img_[j] - 1) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<ColoredPermutation> all_elements(unsigned long r, unsigned long n) {
  std::vector<ColoredPermutation> out;
  std::vector<unsigned long> perm(n);
  std::iota(perm.begin(), perm.end(), 1UL);
  do {
    std::vector<unsigned long> col(n, 0);
    // Odometer over color vectors, last position fastest.
    while (true) {
      out.emplace_back(r, perm, col);
      unsigned long pos = n;
      while (pos > 0) {
        if (++col[pos - 1] < r) break;
        col[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Multipartition cycle_type(const ColoredPermutation& w) {
  const unsigned long n = w.degree();
  const unsigned long r = w.order();
  Multipartition type(r);
  std::vector<bool> seen(n, false);
  for (unsigned long i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    unsigned long len = 0, colorsum = 0;
    for (unsigned long j = i; !seen[j - 1]; j = w.image(j)) {
      seen[j - 1] = true;
      colorsum += w.color(j);
      ++len;
    }
    type[colorsum % r].push_back(len);
  }
  for (auto& comp : type) std::sort(comp.begin(), comp.end(), std::greater<>());
  return type;
}

unsigned long length(const ColoredPermutation& w) {
  return cycle_type(w)[0].size();
}

std::set<unsigned long> descent_set(const ColoredPermutation& w) {
  std::set<unsigned long> out;
  const unsigned long n = w.degree();
  for (unsigned long i = 1; i < n; ++i) {
    if (w.color(i) > w.color(i + 1) ||
        (w.color(i) == w.color(i + 1) && w.image(i) > w.image(i + 1)))
      out.insert(i);
  }
  if (n >= 1 && w.color(n) > 0) out.insert(n);
  return out;
}

unsigned long descent_number(const ColoredPermutation& w) {
  return descent_set(w).size();
}

std::vector<mpz_class> eulerian_row(unsigned long r, unsigned long n) {
  std::vector<mpz_class> row = {mpz_class(1)};
  for (unsigned long m = 1; m <= n; ++m) {
    std::vector<mpz_class> next(m + 1, mpz_class(0));
    for (unsigned long k = 0; k <= m; ++k) {
      if (k < row.size()) next[k] += mpz_class(r * k + 1) * row[k];
      if (k >= 1 && k - 1 < row.size())
        next[k] += mpz_class(r * (m + 1) - (r * k + 1)) * row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

mpz_class eulerian(unsigned long r, unsigned long n, unsigned long k) {
  if (k > n) throw std::invalid_argument("eulerian: need 0 <= k <= n");
  return eulerian_row(r, n)[k];
}

}  // namespace wreathchar
