// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hgalg/scalar.hpp"

namespace hgalg {

/// A letter is generator index * 2, plus 1 for the formal inverse of an
/// invertible generator. Numeric order is the letter order used by deg-lex.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

constexpr Letter make_letter(std::size_t generator, bool inverse) {
  return static_cast<Letter>(generator * 2 + (inverse ? 1 : 0));
}
constexpr std::size_t generator_of(Letter l) { return l / 2; }
constexpr bool is_inverse_letter(Letter l) { return (l & 1u) != 0; }

/// Degree-lexicographic order: shorter words first, then letter by letter.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) h = (h ^ l) * 1099511628211ull;
    return h ^ w.size();
  }
};

/// Sparse linear combination of words. Zero coefficients are never stored.
using Terms = std::map<Word, Scalar, DegLex>;

inline void add_term(Terms& t, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

inline void add_terms(Terms& t, const Terms& other, const Scalar& scale) {
  for (const auto& [w, c] : other) add_term(t, w, c * scale);
}

inline Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace hgalg
