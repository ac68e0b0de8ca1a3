// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/linear.hpp"

namespace hgalg {

Terms LinearReducer::reduce(const Terms& v) const {
  Terms work = v;
  Terms out;
  while (!work.empty()) {
    auto last = std::prev(work.end());
    const Word w = last->first;
    const Scalar c = last->second;
    work.erase(last);
    auto row = rows_.find(w);
    if (row == rows_.end()) {
      out.emplace(w, c);
      continue;
    }
    // Every other word of the row is smaller than w, so the loop terminates.
    for (const auto& [u, d] : row->second) {
      if (u == w) continue;
      add_term(work, u, -(c * d));
    }
  }
  return out;
}

bool LinearReducer::insert(const Terms& v) {
  Terms r = reduce(v);
  if (r.empty()) return false;
  const Scalar lead_inv = std::prev(r.end())->second.inverse();
  for (auto& [w, c] : r) c *= lead_inv;
  Word lead = std::prev(r.end())->first;
  rows_.emplace(std::move(lead), std::move(r));
  return true;
}

std::optional<std::vector<Scalar>> solve_linear(Field f, const std::vector<Terms>& columns, const Terms& target) {
  // Dense Gauss-Jordan on the augmented matrix; sizes here are basis-sized.
  std::map<Word, std::size_t, DegLex> row_index;
  for (const auto& col : columns)
    for (const auto& [w, c] : col) row_index.emplace(w, 0);
  for (const auto& [w, c] : target) row_index.emplace(w, 0);
  std::size_t n_rows = 0;
  for (auto& [w, i] : row_index) i = n_rows++;
  const std::size_t n_cols = columns.size();

  std::vector<std::vector<Scalar>> m(n_rows, std::vector<Scalar>(n_cols + 1, Scalar::zero(f)));
  for (std::size_t j = 0; j < n_cols; ++j)
    for (const auto& [w, c] : columns[j]) m[row_index.at(w)][j] = c;
  for (const auto& [w, c] : target) m[row_index.at(w)][n_cols] = c;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n_cols && r < n_rows; ++j) {
    std::size_t p = r;
    while (p < n_rows && m[p][j].is_zero()) ++p;
    if (p == n_rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][j].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r || m[i][j].is_zero()) continue;
      const Scalar factor = m[i][j];
      for (std::size_t k = j; k <= n_cols; ++k) m[i][k] -= factor * m[r][k];
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < n_rows; ++i)
    if (!m[i][n_cols].is_zero()) return std::nullopt;
  std::vector<Scalar> x(n_cols, Scalar::zero(f));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][n_cols];
  return x;
}

}  // namespace hgalg
