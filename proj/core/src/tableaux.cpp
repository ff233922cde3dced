// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "wreathchar/rational.hpp"

namespace wreathchar {

StandardTableau::StandardTableau(Multipartition shape, std::vector<Box> position)
    : shape_(std::move(shape)), position_(std::move(position)) {
  const unsigned long n = multipartition_size(shape_);
  if (position_.size() != n)
    throw std::invalid_argument("StandardTableau: entry count != shape size");
  // entry grid per component, 0 = unfilled
  std::vector<std::vector<std::vector<unsigned long>>> grid(shape_.size());
  for (size_t c = 0; c < shape_.size(); ++c) {
    grid[c].resize(shape_[c].size());
    for (size_t row = 0; row < shape_[c].size(); ++row)
      grid[c][row].assign(shape_[c][row], 0);
  }
  for (unsigned long i = 1; i <= n; ++i) {
    const Box& b = position_[i - 1];
    if (b.component >= shape_.size() || b.row == 0 ||
        b.row > shape_[b.component].size() || b.column == 0 ||
        b.column > shape_[b.component][b.row - 1])
      throw std::invalid_argument("StandardTableau: box outside shape");
    unsigned long& cell = grid[b.component][b.row - 1][b.column - 1];
    if (cell != 0)
      throw std::invalid_argument("StandardTableau: duplicate box");
    cell = i;
  }
  for (size_t c = 0; c < grid.size(); ++c)
    for (size_t row = 0; row < grid[c].size(); ++row)
      for (size_t col = 0; col < grid[c][row].size(); ++col) {
        const unsigned long v = grid[c][row][col];
        if (col + 1 < grid[c][row].size() && grid[c][row][col + 1] <= v)
          throw std::invalid_argument("StandardTableau: row not increasing");
        if (row + 1 < grid[c].size() && col < grid[c][row + 1].size() &&
            grid[c][row + 1][col] <= v)
          throw std::invalid_argument("StandardTableau: column not increasing");
      }
}

std::vector<std::vector<std::vector<unsigned long>>> StandardTableau::rows()
    const {
  std::vector<std::vector<std::vector<unsigned long>>> out(shape_.size());
  for (size_t c = 0; c < shape_.size(); ++c) {
    out[c].resize(shape_[c].size());
    for (size_t row = 0; row < shape_[c].size(); ++row)
      out[c][row].assign(shape_[c][row], 0);
  }
  for (unsigned long i = 1; i <= size(); ++i) {
    const Box& b = position_[i - 1];
    out[b.component][b.row - 1][b.column - 1] = i;
  }
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Multipartition& shape) {
  const unsigned long n = multipartition_size(shape);
  std::vector<StandardTableau> out;
  std::vector<Box> pos(n, Box{0, 0, 0});
  Multipartition cur = shape;

  std::function<void(unsigned long)> place = [&](unsigned long entry) {
    if (entry == 0) {
      out.emplace_back(shape, pos);
      return;
    }
    for (const Box& b : removable_boxes(cur)) {
      pos[entry - 1] = b;
      if (--cur[b.component][b.row - 1] == 0) cur[b.component].pop_back();
      place(entry - 1);
      if (cur[b.component].size() < b.row) cur[b.component].push_back(1);
      else ++cur[b.component][b.row - 1];
    }
  };
  place(n);
  return out;
}

std::set<unsigned long> descent_set(const StandardTableau& t) {
  std::set<unsigned long> out;
  const unsigned long n = t.size();
  for (unsigned long i = 1; i < n; ++i) {
    const Box& a = t.box_of(i);
    const Box& b = t.box_of(i + 1);
    if ((a.component == b.component && b.row > a.row) ||
        a.component > b.component)
      out.insert(i);
  }
  if (n >= 1 && t.component_of(n) > 0) out.insert(n);
  return out;
}

std::set<unsigned long> column_descent_set(const StandardTableau& t,
                                           BoundaryConvention conv) {
  std::set<unsigned long> out;
  const unsigned long n = t.size();
  for (unsigned long i = 1; i < n; ++i) {
    const Box& a = t.box_of(i);
    const Box& b = t.box_of(i + 1);
    if ((a.component == b.component && b.column > a.column) ||
        a.component < b.component)
      out.insert(i);
  }
  if (n >= 1) {
    const unsigned long r = t.shape().size();
    const unsigned long cn = t.component_of(n);
    const bool mark = conv == BoundaryConvention::Complement
                          ? cn == 0
                          : cn + 1 < r;
    if (mark) out.insert(n);
  }
  return out;
}

StandardTableau conjugate_tableau(const StandardTableau& t) {
  const unsigned long r = t.shape().size();
  std::vector<Box> pos;
  pos.reserve(t.size());
  for (unsigned long i = 1; i <= t.size(); ++i) {
    const Box& b = t.box_of(i);
    pos.push_back(Box{b.column, b.row, r - 1 - b.component});
  }
  return StandardTableau(conjugate_multipartition(t.shape()), std::move(pos));
}

unsigned long m_count(const Multipartition& shape, unsigned long k) {
  unsigned long count = 0;
  for (const auto& t : standard_tableaux(shape))
    if (descent_set(t).size() == k) ++count;
  return count;
}

unsigned long mbar_count(const Multipartition& shape, unsigned long k,
                         BoundaryConvention conv) {
  unsigned long count = 0;
  for (const auto& t : standard_tableaux(shape))
    if (column_descent_set(t, conv).size() == k) ++count;
  return count;
}

namespace {

// Fillings of a single partition from {1..alphabet}; "strict_rows" selects
// the rows-strict/columns-weak variant, otherwise rows weak/columns strict.
mpz_class semistandard_fillings(const Partition& p, unsigned long alphabet,
                                bool strict_rows) {
  if (p.empty()) return 1;
  std::vector<std::vector<unsigned long>> grid(p.size());
  for (size_t row = 0; row < p.size(); ++row) grid[row].assign(p[row], 0);
  mpz_class count = 0;

  std::function<void(size_t, size_t)> fill = [&](size_t row, size_t col) {
    if (row == p.size()) {
      ++count;
      return;
    }
    const size_t nrow = col + 1 < p[row] ? row : row + 1;
    const size_t ncol = col + 1 < p[row] ? col + 1 : 0;
    unsigned long lo = 1;
    if (strict_rows) {
      if (col > 0) lo = std::max(lo, grid[row][col - 1] + 1);
      if (row > 0 && col < p[row - 1]) lo = std::max(lo, grid[row - 1][col]);
    } else {
      if (col > 0) lo = std::max(lo, grid[row][col - 1]);
      if (row > 0 && col < p[row - 1]) lo = std::max(lo, grid[row - 1][col] + 1);
    }
    for (unsigned long v = lo; v <= alphabet; ++v) {
      grid[row][col] = v;
      fill(nrow, ncol);
    }
    grid[row][col] = 0;
  };
  fill(0, 0);
  return count;
}

}  // namespace

mpz_class row_semistandard_count(const Multipartition& shape, unsigned long k) {
  mpz_class total = 1;
  for (size_t c = 0; c < shape.size(); ++c)
    total *= semistandard_fillings(shape[c], c == 0 ? k + 1 : k, false);
  return total;
}

mpz_class column_semistandard_count(const Multipartition& shape,
                                    unsigned long k) {
  mpz_class total = 1;
  for (size_t c = 0; c < shape.size(); ++c)
    total *= semistandard_fillings(shape[c], c == 0 ? k + 1 : k, true);
  return total;
}

bool fits_row_alphabet(const Multipartition& shape, unsigned long k) {
  for (size_t c = 0; c < shape.size(); ++c)
    if (shape[c].size() > (c == 0 ? k + 1 : k)) return false;
  return true;
}

bool fits_column_alphabet(const Multipartition& shape, unsigned long k) {
  for (size_t c = 0; c < shape.size(); ++c) {
    const unsigned long width = shape[c].empty() ? 0 : shape[c][0];
    if (width > (c == 0 ? k + 1 : k)) return false;
  }
  return true;
}

BinomialTransformReport binomial_transform_check(const Multipartition& shape,
                                                 unsigned long k) {
  const unsigned long n = multipartition_size(shape);
  BinomialTransformReport rep;
  rep.s_value = row_semistandard_count(shape, k);
  std::vector<unsigned long> m(n + 1, 0);
  for (const auto& t : standard_tableaux(shape)) {
    const unsigned long d = descent_set(t).size();
    if (d <= n) ++m[d];
  }
  for (unsigned long j = 0; j <= k; ++j) {
    if (k - j > n) continue;
    rep.printed_sum += binomial(n + 1, j) * m[k - j];
    rep.corrected_sum += binomial(n + j, j) * m[k - j];
  }
  rep.printed_holds = rep.printed_sum == rep.s_value;
  rep.corrected_holds = rep.corrected_sum == rep.s_value;
  return rep;
}

}  // namespace wreathchar
