// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hgalg/poisson.hpp"

namespace hgalg {

inline constexpr std::size_t kEnvelopeCap = 6;

/// Degree-truncated Poisson enveloping algebra U(A) of a finite-dimensional
/// Poisson algebra A with basis a_0 = 1, a_1, ... . Generators are alpha(a_i)
/// for every i followed by beta(a_i) for every i. Rewrite rules:
///   alpha(1) -> 1, beta(1) -> 0,
///   alpha(a_i) alpha(a_j) -> alpha(a_i a_j),
///   beta(a_i) alpha(a_j) -> alpha(a_j) beta(a_i) + alpha({a_i, a_j}),
///   beta(a_i) beta(a_j) -> beta(a_j) beta(a_i) + beta({a_i, a_j})  (i > j).
/// The product law beta(a_i a_j) = alpha(a_i) beta(a_j) + alpha(a_j) beta(a_i)
/// is imposed as linear side relations: the two-sided ideal it generates,
/// saturated up to the cap.
class Envelope {
 public:
  /// Throws InputError when A has no finite basis or when local confluence
  /// fails at the cap (naming the first unresolved critical pair).
  static Envelope build(const PoissonStructure& a, std::size_t cap = kEnvelopeCap);

  const PoissonStructure& source() const { return source_; }
  const PresentationPtr& algebra() const { return u_; }
  const std::vector<Word>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t cap() const { return u_->cap(); }
  const ConfluenceReport& confluence() const { return confluence_; }
  std::size_t side_relation_rank() const;

  /// Index of a basis word of A; throws InputError for other words.
  std::size_t index_of(const Word& basis_word) const;
  Letter alpha_letter(std::size_t i) const { return make_letter(i, false); }
  Letter beta_letter(std::size_t i) const { return make_letter(basis_.size() + i, false); }

  /// Linear extensions of alpha and beta from A into U(A).
  Element alpha(const Element& a) const;
  Element beta(const Element& a) const;
  Element alpha(const Word& basis_word) const;
  Element beta(const Word& basis_word) const;

 private:
  Envelope(PoissonStructure source, PresentationPtr u, std::vector<Word> basis, ConfluenceReport confluence)
      : source_(std::move(source)), u_(std::move(u)), basis_(std::move(basis)), confluence_(std::move(confluence)) {}

  PoissonStructure source_;
  PresentationPtr u_;
  std::vector<Word> basis_;
  ConfluenceReport confluence_;
};

/// The enveloping laws on every ordered pair of basis elements: the defining
/// pair, its mirrored form, the Lie property of beta, multiplicativity of
/// alpha, the opposite-algebra forms and beta(1) = 0.
Report check_envelope_relations(const Envelope& u);

/// U(A) (x) U(A)^op (x) U(A).
TensorSpace triple_space(const Envelope& u);

/// alpha (x) alpha (x) alpha and xi = alpha⊗alpha⊗beta + alpha⊗beta⊗alpha +
/// beta⊗alpha⊗alpha, applied to a tensor on alternating_space(A, 3).
Tensor alpha3(const Envelope& u, const Tensor& t);
Tensor xi(const Envelope& u, const Tensor& t);

/// Every 3-tuple of the given words of A.
std::vector<WordTuple> word_triples(const std::vector<Word>& words);

/// For every ordered pair (s, t) of sampled triples: alpha3 is multiplicative,
/// xi is a Lie map for the signed triple bracket, and the two mixed laws
/// alpha3({s, t}) = [xi(s), alpha3(t)] and xi(s t) = alpha3(s) xi(t) + alpha3(t) xi(s).
Report check_lemma55(const Envelope& u, const std::vector<WordTuple>& sample);

/// Algebra map out of U(A) given on the alpha and beta generators, with every
/// rewrite rule and side relation of U(A) checked against it.
struct EnvelopeMap {
  GeneratorMap map;
  Report relations;
};
EnvelopeMap envelope_map(const Envelope& u, const TensorSpace& target, const std::function<Tensor(const Word&)>& alpha_image,
                         const std::function<Tensor(const Word&)>& beta_image, const std::string& name,
                         const std::string& anchor);

/// U(phi): alpha_A(a) -> alpha_B(phi(a)), beta_A(a) -> beta_B(phi(a)). Throws
/// InputError naming the first envelope relation the map breaks.
GeneratorMap induced_map(const GeneratorMap& phi, const Envelope& ua, const Envelope& ub);

/// U(mu) with alpha(a) -> alpha3(mu(a)) and beta(a) -> xi(mu(a)) plus its
/// relation checks, then per basis element a whether
/// beta(a) + alpha(a_(1)) beta(a_(2)) alpha(a_(3)) vanishes, and a verdict.
Report check_thm59(const PoissonHopfGaloisStructure& ph, const Envelope& u);

}  // namespace hgalg
