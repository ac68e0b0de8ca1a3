// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "hgalg/word.hpp"

namespace hgalg {

/// Incremental row echelon form over a span of word combinations. Each row is
/// monic at its deg-lex largest word (its leading word), and leading words are
/// pairwise distinct, so reduction gives a unique representative modulo the
/// span.
class LinearReducer {
 public:
  explicit LinearReducer(Field f) : field_(f) {}

  /// Adds v to the span. Returns true when the rank grew.
  bool insert(const Terms& v);
  Terms reduce(const Terms& v) const;
  bool contains(const Terms& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::map<Word, Terms, DegLex>& rows() const { return rows_; }
  Field field() const { return field_; }

 private:
  Field field_;
  std::map<Word, Terms, DegLex> rows_;
};

/// Solves sum_j x_j * columns[j] = target over the given field. Columns and
/// target are sparse vectors keyed by word. Returns nullopt when inconsistent;
/// free variables are set to zero.
std::optional<std::vector<Scalar>> solve_linear(Field f, const std::vector<Terms>& columns, const Terms& target);

}  // namespace hgalg
