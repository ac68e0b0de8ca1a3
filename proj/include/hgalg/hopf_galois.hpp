// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "hgalg/generator_map.hpp"
#include "hgalg/report.hpp"

namespace hgalg {

/// R with mu: R -> R (x) R^op (x) R.
struct HopfGaloisStructure {
  HopfGaloisStructure(GeneratorMap mu);
  PresentationPtr alg;
  GeneratorMap mu;
};

/// Delta: H -> H (x) H, counit: H -> k, antipode: H -> H^op.
struct HopfStructure {
  HopfStructure(GeneratorMap delta, GeneratorMap counit, GeneratorMap antipode);
  PresentationPtr alg;
  GeneratorMap delta;
  GeneratorMap counit;
  GeneratorMap antipode;
};

/// Relation preservation, both unit laws and the rank-5 coassociativity law,
/// checked on every letter (inverse letters included).
Report check_hopf_galois(const HopfGaloisStructure& h);

/// Coassociativity, counit and antipode laws on every letter, plus relation
/// preservation of all three maps.
Report check_hopf_axioms(const HopfStructure& h);

struct GrouplikeResult {
  bool grouplike = false;
  std::string reason;
  std::optional<Element> inverse;
  std::optional<Tensor> difference;
};
GrouplikeResult is_grouplike(const HopfGaloisStructure& h, const Element& g);

/// r (3) (x) r (2) (x) r (1). Refuses non-commutative R.
HopfGaloisStructure reverse_mu(const HopfGaloisStructure& h);

/// Applies f to every factor of t, landing on the given space.
Tensor apply_factorwise(const Tensor& t, const GeneratorMap& f, const TensorSpace& target);

/// mu_B(b) = (f (x) f (x) f)(mu_R(section(b))) for the quotient f: R -> B.
/// Requires f to respect R's relations, f(section(b)) = b on generators, and
/// mu_B to respect B's relations; violations are input errors naming the rule.
HopfGaloisStructure pushforward(const HopfGaloisStructure& h, const GeneratorMap& f, const GeneratorMap& section);

/// mu(x) = x_1 (x) S(x_2) (x) x_3.
HopfGaloisStructure hopf_to_galois(const HopfStructure& hs);

/// Delta(x) = alpha(x_(2)) x_(1) (x) x_(3), S(x) = alpha(x_(1) x_(3)) x_(2),
/// counit alpha. Throws InputError when alpha is not an algebra map.
HopfStructure galois_to_hopf(const HopfGaloisStructure& h, const GeneratorMap& alpha);

/// Scalar-valued map from generator values.
GeneratorMap scalar_map(const PresentationPtr& p, const std::map<Letter, Scalar>& values, std::string name);

}  // namespace hgalg
