// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "hgalg/poisson.hpp"

namespace hgalg {

inline constexpr std::size_t kExtensionCap = 8;

/// A[z; tau, delta]. tau is an endomorphism of A into the plain rank-1 space;
/// delta is a tau-derivation (its tau must be this tau). tau_inverse is only
/// needed by the criterion checker.
struct OreData {
  PresentationPtr base;
  GeneratorMap tau;
  std::optional<GeneratorMap> tau_inverse;
  TwistedDerivation delta;
  std::string variable = "z";
  std::size_t cap = kExtensionCap;
};

/// tau respects relations, delta respects relations, and tau_inverse (when
/// present) respects relations and inverts tau on every letter.
Report check_ore_data(const OreData& d);

struct OreExtension {
  PresentationPtr algebra;
  /// The new generator; letters of the base keep their numbering.
  Letter z;
};

/// Generators of A plus z with z*a -> tau(a)*z + delta(a) for every letter a.
/// Throws InputError when check_ore_data fails.
OreExtension build_ore(const OreData& d);

/// Rewrites a tensor over copies of A onto the same-shaped space over B,
/// reading every word of A as a word of B.
Tensor lift_tensor(const Tensor& t, const PresentationPtr& b);
Element lift_element(const Element& e, const PresentationPtr& b);

/// The three Ore criterion conditions for every letter of A, with
/// g.r = g r g^-1. Throws InputError when tau_inverse is missing or g is not
/// group-like.
Report check_thm28(const OreData& d, const HopfGaloisStructure& h, const Element& g);

/// mu on A[z; tau, delta] with mu(z) = z⊗1⊗1 + g⊗g^-1⊗z - g⊗g^-1 z⊗1.
/// Refuses (InputError naming the condition) when check_thm28 fails.
HopfGaloisStructure extend_mu_ore(const OreData& d, const OreExtension& ext, const HopfGaloisStructure& h,
                                  const Element& g);

/// The same mu(z) without running the criterion; used for mutation studies.
HopfGaloisStructure extend_mu_ore_unchecked(const OreExtension& ext, const HopfGaloisStructure& h, const Element& g,
                                            const Tensor& mu_z);
Tensor ore_mu_z(const OreExtension& ext, const Element& g);

/// B[x; alpha, delta]_p. alpha and delta are ordinary derivations of B given
/// on generators.
struct PoissonOreData {
  PoissonStructure base;
  TwistedDerivation alpha;
  TwistedDerivation delta;
  std::string variable = "x";
  std::size_t cap = kExtensionCap;
};

/// Both maps respect relations; alpha is a bracket derivation and delta
/// satisfies the twisted rule, both on every pair of distinct letters.
Report check_poisson_ore_data(const PoissonOreData& d);

struct PoissonOreExtension {
  PoissonStructure poisson;
  Letter x;
};

/// B[x] with B's bracket and {x, b} = alpha(b) x + delta(b). Throws InputError
/// naming the first failing law and pair.
PoissonOreExtension build_poisson_ore(const PoissonOreData& d);

/// mu(x) = x⊗1⊗1 - g⊗g^-1 x⊗1 + g⊗g^-1⊗x.
Tensor poisson_ore_mu_x(const PoissonOreExtension& ext, const Element& g);

struct Thm44Result {
  Report report;
  /// Present when every condition held; the report then also carries the
  /// Hopf-Galois and bracket checks of the extension.
  std::optional<PoissonHopfGaloisStructure> extension;
};

/// The Poisson Ore criterion on letters of B (the alpha-compatibility
/// condition on letter pairs), then the assembled structure on B[x] at d.cap.
Thm44Result check_thm44(const PoissonOreData& d, const PoissonHopfGaloisStructure& ph, const Element& g);

}  // namespace hgalg
