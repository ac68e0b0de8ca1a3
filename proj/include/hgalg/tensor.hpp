// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hgalg/element.hpp"

namespace hgalg {

/// One tensor factor: an algebra, possibly with opposite multiplication.
struct Factor {
  PresentationPtr alg;
  bool op = false;
  friend bool operator==(const Factor& a, const Factor& b) { return a.alg == b.alg && a.op == b.op; }
};
using TensorSpace = std::vector<Factor>;

/// Shorthand for A (x) A^op (x) A (x) ... with op on odd positions.
TensorSpace alternating_space(const PresentationPtr& alg, std::size_t rank);
TensorSpace plain_space(const PresentationPtr& alg, std::size_t rank);

using WordTuple = std::vector<Word>;

struct TupleLess {
  bool operator()(const WordTuple& a, const WordTuple& b) const {
    DegLex less;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
  }
};
using TensorTerms = std::map<WordTuple, Scalar, TupleLess>;

/// Sparse element of a tensor product of presented algebras. Rank 0 is a
/// scalar. Every component word is in normal form and no zero is stored.
class Tensor {
 public:
  Tensor(TensorSpace space, Field f);

  static Tensor unit(TensorSpace space, Field f);
  static Tensor scalar(TensorSpace space, const Scalar& c);
  /// c * (t_1 (x) ... (x) t_k), expanding each factor combination.
  static Tensor pure(TensorSpace space, const std::vector<Terms>& factors, const Scalar& c);
  static Tensor from_element(const Element& e, bool op = false);

  std::size_t rank() const { return space_.size(); }
  const TensorSpace& space() const { return space_; }
  Field field() const { return field_; }
  const TensorTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * (w_1 (x) ... (x) w_k); the words must already be normal forms.
  void add_normal(const WordTuple& key, const Scalar& c);

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor operator-() const { return scaled(-Scalar::one(field_)); }
  Tensor scaled(const Scalar& c) const;
  /// Factor-wise product, reversing operand order in op factors.
  Tensor operator*(const Tensor& o) const;
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend bool operator==(const Tensor& a, const Tensor& b);
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  /// this (x) o on the concatenated space.
  Tensor outer(const Tensor& o) const;
  /// Multiplies factor i into factor i+1 as u * v in the algebra of factor i.
  /// The merged factor gets the given op flag.
  Tensor contract(std::size_t i, bool op) const;
  /// Replaces factor i by the tensor f(word), which must live on replacement.
  Tensor expand(std::size_t i, const TensorSpace& replacement, const std::function<Tensor(const Word&)>& f) const;
  /// New factor j is old factor order[j].
  Tensor permuted(const std::vector<std::size_t>& order) const;
  /// Same algebras and terms with different op flags.
  Tensor retagged(const TensorSpace& space) const;

  /// Rank-1 tensor as an element of its algebra.
  Element as_element() const;
  /// Rank-0 tensor as a scalar.
  Scalar as_scalar() const;

  std::string to_string() const;

 private:
  void check_compatible(const Tensor& o) const;

  TensorSpace space_;
  Field field_;
  TensorTerms terms_;
};

/// Expands c * prod_i (factors[i]) into target, one normal-form term list per factor.
void accumulate_product(TensorTerms& target, const std::vector<Terms>& factors, const Scalar& c);

}  // namespace hgalg
