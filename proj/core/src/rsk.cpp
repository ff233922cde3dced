// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreathchar {

namespace {

using Grid = std::vector<std::vector<unsigned long>>;  // rows of one component

// Standard Schensted row insertion; returns the (1-based) row/column of the
// box that was created.
std::pair<unsigned long, unsigned long> row_insert(Grid& g, unsigned long v) {
  for (size_t row = 0;; ++row) {
    if (row == g.size()) {
      g.push_back({v});
      return {row + 1, 1};
    }
    auto& cells = g[row];
    auto it = std::upper_bound(cells.begin(), cells.end(), v);
    if (it == cells.end()) {
      cells.push_back(v);
      return {row + 1, cells.size()};
    }
    std::swap(*it, v);  // bump the leftmost entry strictly larger than v
  }
}

// Undo an insertion that ended by creating a box at (row, col) (1-based);
// returns the value that falls out of the first row.
unsigned long reverse_insert(Grid& g, unsigned long row, unsigned long col) {
  unsigned long v = g[row - 1][col - 1];
  g[row - 1].pop_back();
  if (g[row - 1].empty()) g.pop_back();
  for (size_t up = row - 1; up-- > 0;) {
    auto& cells = g[up];
    // rightmost entry strictly smaller than v
    auto it = std::lower_bound(cells.begin(), cells.end(), v);
    std::swap(*(it - 1), v);
  }
  return v;
}

Multipartition shape_of(const std::vector<Grid>& grids) {
  Multipartition mp(grids.size());
  for (size_t c = 0; c < grids.size(); ++c)
    for (const auto& row : grids[c]) mp[c].push_back(row.size());
  return mp;
}

}  // namespace

std::pair<StandardTableau, StandardTableau> rsk(const ColoredPermutation& w) {
  const unsigned long n = w.degree();
  std::vector<Grid> grids(w.order());
  std::vector<Box> value_box(n, Box{0, 0, 0});    // box of value v in S
  std::vector<Box> entry_box(n, Box{0, 0, 0});    // box of entry j in T
  for (unsigned long j = 1; j <= n; ++j) {
    const unsigned long c = w.color(j);
    const auto [row, col] = row_insert(grids[c], w.image(j));
    entry_box[j - 1] = Box{row, col, c};
  }
  for (size_t c = 0; c < grids.size(); ++c)
    for (size_t row = 0; row < grids[c].size(); ++row)
      for (size_t col = 0; col < grids[c][row].size(); ++col)
        value_box[grids[c][row][col] - 1] = Box{row + 1, col + 1, c};
  Multipartition shape = shape_of(grids);
  return {StandardTableau(shape, std::move(value_box)),
          StandardTableau(shape, std::move(entry_box))};
}

ColoredPermutation rsk_inverse(const StandardTableau& insertion,
                               const StandardTableau& recording) {
  if (insertion.shape() != recording.shape())
    throw std::invalid_argument("rsk_inverse: shapes differ");
  const unsigned long n = insertion.size();
  const unsigned long r = insertion.shape().size();

  std::vector<Grid> grids(r);
  const auto rows = insertion.rows();
  for (size_t c = 0; c < r; ++c) grids[c] = rows[c];

  std::vector<unsigned long> img(n), col(n);
  for (unsigned long j = n; j >= 1; --j) {
    const Box& b = recording.box_of(j);
    img[j - 1] = reverse_insert(grids[b.component], b.row, b.column);
    col[j - 1] = b.component;
  }
  return ColoredPermutation(r, std::move(img), std::move(col));
}

}  // namespace wreathchar
