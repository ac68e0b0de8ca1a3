// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgalg/presentation.hpp"

namespace hgalg {

/// An element of a presented algebra, always stored in normal form.
class Element {
 public:
  Element(PresentationPtr p, const Terms& t);

  static Element zero(PresentationPtr p) { return Element(std::move(p), Terms{}); }
  static Element scalar(PresentationPtr p, const Scalar& c);
  static Element one(PresentationPtr p);
  static Element word(PresentationPtr p, const Word& w);
  /// Parses a single monomial given as tokens, e.g. {"g^-1", "x"}.
  static Element parse(PresentationPtr p, const std::vector<std::string>& tokens);

  const PresentationPtr& presentation() const { return p_; }
  const Terms& terms() const { return terms_; }
  Field field() const { return p_->field(); }
  bool is_zero() const { return terms_.empty(); }

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator*(const Element& o) const;
  Element scaled(const Scalar& c) const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string to_string() const { return p_->format(terms_); }

 private:
  struct Normalized {};
  Element(PresentationPtr p, Terms t, Normalized) : p_(std::move(p)), terms_(std::move(t)) {}
  void check_same(const Element& o) const;

  PresentationPtr p_;
  Terms terms_;
};

/// Two-sided inverse, if one can be decided: a nonzero scalar times a word in
/// invertible letters, or any element of a finite-dimensional algebra (by a
/// linear solve over the basis). nullopt means no inverse was found.
std::optional<Element> inverse_of(const Element& e);

/// Product of normal-form combinations inside one presentation.
Terms multiply_terms(const Presentation& p, const Terms& a, const Terms& b);

}  // namespace hgalg
