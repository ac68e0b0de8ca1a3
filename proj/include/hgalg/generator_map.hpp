// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "hgalg/report.hpp"
#include "hgalg/tensor.hpp"

namespace hgalg {

/// An algebra map given by images of generators, extended multiplicatively
/// into a (twisted) tensor product. Images of inverse letters that are not
/// supplied are derived and every inverse pair is verified to multiply to 1.
class GeneratorMap {
 public:
  GeneratorMap(PresentationPtr source, TensorSpace target, std::map<Letter, Tensor> images, std::string name = {});

  static GeneratorMap identity(const PresentationPtr& p);

  const PresentationPtr& source() const { return source_; }
  const TensorSpace& target() const { return target_; }
  Field field() const { return source_->field(); }
  const std::string& name() const { return name_; }
  const std::map<Letter, Tensor>& images() const { return images_; }
  bool has_image(Letter l) const { return images_.count(l) != 0; }
  /// Throws InputError when the letter has no image.
  const Tensor& image(Letter l) const;

  Tensor apply(const Word& w) const;
  Tensor apply(const Terms& t) const;
  Tensor apply(const Element& e) const;

  /// Copy with one generator image replaced; a derived inverse image is
  /// re-derived from the new image.
  GeneratorMap with_image(Letter l, const Tensor& image) const;

 private:
  void derive_inverses();

  PresentationPtr source_;
  TensorSpace target_;
  std::map<Letter, Tensor> supplied_;
  std::map<Letter, Tensor> images_;
  std::string name_;

  struct Cache {
    std::mutex mutex;
    std::unordered_map<Word, Tensor, WordHash> values;
  };
  std::shared_ptr<Cache> cache_;
};

/// For every rule lhs -> rhs of the source presentation, f(lhs) == f(rhs);
/// for every vanishing relation v, f(v) == 0.
Report check_map_respects_relations(const GeneratorMap& f, const std::string& anchor);

/// Linear map on a presentation given on generators and extended by
/// d(a w) = tau(a) d(w) + d(a) w (tau = identity when absent). For an inverse
/// letter, d(g^-1) = -tau(g^-1) d(g) g^-1.
class TwistedDerivation {
 public:
  TwistedDerivation(PresentationPtr alg, std::optional<GeneratorMap> tau, std::map<Letter, Element> values,
                    std::string name = {});

  const PresentationPtr& algebra() const { return alg_; }
  const std::string& name() const { return name_; }
  const std::optional<GeneratorMap>& tau() const { return tau_; }
  const Element& value(Letter l) const;
  const std::map<Letter, Element>& values() const { return values_; }

  Element apply(const Word& w) const;
  Element apply(const Terms& t) const;
  Element apply(const Element& e) const { return apply(e.terms()); }

  /// d(lhs) == d(rhs) for every rule and d(v) == 0 for every vanishing relation.
  Report check_relations(const std::string& anchor) const;

 private:
  Element tau_of(Letter l) const;

  PresentationPtr alg_;
  std::optional<GeneratorMap> tau_;
  std::map<Letter, Element> values_;
  std::string name_;

  struct Cache {
    std::mutex mutex;
    std::unordered_map<Word, Element, WordHash> values;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace hgalg
