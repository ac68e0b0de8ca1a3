// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hgalg/hopf_galois.hpp"

namespace hgalg {

/// A bracket on a commutative presentation, given on ordered pairs of
/// (non-inverse) generator letters and extended by the Leibniz rule. Pairs
/// absent from the table, and the reverse of a given pair, follow from
/// antisymmetry; brackets with inverse letters use {a, g^-1} = -g^-2 {a, g}.
class PoissonStructure {
 public:
  using Table = std::map<std::pair<Letter, Letter>, Element>;

  PoissonStructure(PresentationPtr alg, Table table, std::string name = {});

  const PresentationPtr& algebra() const { return alg_; }
  const Table& table() const { return table_; }
  const std::string& name() const { return name_; }

  Element letter_bracket(Letter a, Letter b) const;
  Element bracket(const Word& u, const Word& v) const;
  Element bracket(const Terms& u, const Terms& v) const;
  Element bracket(const Element& a, const Element& b) const;

 private:
  PresentationPtr alg_;
  Table table_;
  std::string name_;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<Word, Word>, Element> values;
  };
  std::shared_ptr<Cache> cache_;
};

/// Commutativity, table antisymmetry, Jacobi on letter triples and
/// compatibility of the bracket with every relation.
Report check_poisson(const PoissonStructure& p);

/// Sum over factors i of sign_i * (bracket in factor i, products elsewhere).
/// Both tensors must live on the same space; ps[i] is the Poisson structure
/// of factor i.
Tensor factor_bracket(const std::vector<const PoissonStructure*>& ps, const std::vector<Scalar>& signs, const Tensor& s,
                      const Tensor& t);

/// {a (x) b, a' (x) b'} = aa' (x) {b, b'} + {a, a'} (x) bb'.
Tensor tensor_bracket(const PoissonStructure& pa, const PoissonStructure& pb, const Tensor& s, const Tensor& t);

/// Signed three-term bracket on R (x) R^op (x) R. The signs default to the
/// (+, -, +) discipline; other values exist only to test that discipline.
using SignTriple = std::array<long, 3>;
inline constexpr SignTriple kTripleSigns{1, -1, 1};
Tensor triple_bracket(const PoissonStructure& p, const Tensor& s, const Tensor& t, SignTriple signs = kTripleSigns);

struct PoissonHopfGaloisStructure {
  PoissonStructure poisson;
  HopfGaloisStructure hg;
};

struct PoissonHopfStructure {
  PoissonStructure poisson;
  HopfStructure hopf;
};

/// mu({a, b}) == {mu(a), mu(b)} for every unordered pair of distinct letters.
Report check_poisson_hg(const PoissonHopfGaloisStructure& ph, SignTriple signs = kTripleSigns);

/// Delta({a, b}) == {Delta a, Delta b}, counit({a, b}) == 0 and
/// S({a, b}) == {S b, S a} for every unordered pair of distinct letters.
Report check_poisson_hopf(const PoissonHopfStructure& ph);

/// Hopf-Galois map from the Hopf structure; requires check_poisson_hopf to pass.
PoissonHopfGaloisStructure phg_from_poisson_hopf(const PoissonHopfStructure& ph);

/// Hopf structure with counit alpha; requires alpha({a, b}) = 0 on letter pairs.
PoissonHopfStructure poisson_hopf_from_phg(const PoissonHopfGaloisStructure& ph, const GeneratorMap& alpha);

/// Quotient by the ideal generated by ideal_generators (the kernel of f).
/// The ideal must be Poisson: f(i) = 0 and f({a, i}) = 0 for all letters a.
PoissonHopfGaloisStructure poisson_pushforward(const PoissonHopfGaloisStructure& ph, const GeneratorMap& f,
                                               const GeneratorMap& section, const std::vector<Element>& ideal_generators);

}  // namespace hgalg
