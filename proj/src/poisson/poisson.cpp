// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/poisson.hpp"

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

Word without(const Word& w, std::size_t i) {
  Word r = w;
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
  return r;
}

std::string pair_label(const Alphabet& a, Letter x, Letter y) { return "{" + a.letter_name(x) + ", " + a.letter_name(y) + "}"; }

}  // namespace

PoissonStructure::PoissonStructure(PresentationPtr alg, Table table, std::string name)
    : alg_(std::move(alg)), table_(std::move(table)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  for (const auto& [pair, value] : table_) {
    for (Letter l : {pair.first, pair.second}) {
      if (!alg_->alphabet().has_letter(l) || is_inverse_letter(l))
        throw InputError("bracket table entries must be on generators, got " + alg_->alphabet().letter_name(l));
    }
    if (value.presentation() != alg_) throw InputError("bracket value outside the algebra");
  }
}

Element PoissonStructure::letter_bracket(Letter a, Letter b) const {
  if (a == b) return Element::zero(alg_);
  if (is_inverse_letter(b)) {
    const Letter g = b ^ 1u;
    return -(Element::word(alg_, Word{b, b}) * letter_bracket(a, g));
  }
  if (is_inverse_letter(a)) return -letter_bracket(b, a);
  if (auto it = table_.find({a, b}); it != table_.end()) return it->second;
  if (auto it = table_.find({b, a}); it != table_.end()) return -it->second;
  return Element::zero(alg_);
}

Element PoissonStructure::bracket(const Word& u, const Word& v) const {
  if (u.empty() || v.empty()) return Element::zero(alg_);
  if (u.size() == 1 && v.size() == 1) return letter_bracket(u[0], v[0]);
  const auto key = std::make_pair(u, v);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  Element r = Element::zero(alg_);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      const Element rest = Element::word(alg_, concat(without(u, i), without(v, j)));
      r += rest * letter_bracket(u[i], v[j]);
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(key, r);
  return r;
}

Element PoissonStructure::bracket(const Terms& u, const Terms& v) const {
  Element r = Element::zero(alg_);
  for (const auto& [a, c] : u)
    for (const auto& [b, d] : v) r += bracket(a, b).scaled(c * d);
  return r;
}

Element PoissonStructure::bracket(const Element& a, const Element& b) const {
  if (a.presentation() != alg_ || b.presentation() != alg_) throw InputError("bracket of elements outside the algebra");
  return bracket(a.terms(), b.terms());
}

Report check_poisson(const PoissonStructure& p) {
  Report report;
  const PresentationPtr& alg = p.algebra();
  const Alphabet& alpha = alg->alphabet();
  const auto letters = alpha.letters();
  bool commutative = true;
  for (std::size_t i = 0; i < letters.size() && commutative; ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      const Element ab = Element::word(alg, Word{letters[i], letters[j]});
      const Element ba = Element::word(alg, Word{letters[j], letters[i]});
      if (ab != ba) {
        report.fail("commutative algebra", "Def 3.1 commutative algebra", {alpha.letter_name(letters[i]), alpha.letter_name(letters[j])},
                    alpha.format(Word{letters[i], letters[j]}), (ab - ba).to_string());
        commutative = false;
        break;
      }
    }
  }
  if (commutative) report.pass("commutative algebra", "Def 3.1 commutative algebra", {});

  for (const auto& [pair, value] : p.table()) {
    const auto [a, b] = pair;
    const std::string label = pair_label(alpha, a, b);
    if (a == b) {
      report.compare("antisymmetry", "Def 3.1 antisymmetry", {alpha.letter_name(a)}, label, value, Element::zero(alg));
      continue;
    }
    auto rev = p.table().find({b, a});
    if (rev == p.table().end()) {
      report.pass("antisymmetry", "Def 3.1 antisymmetry", {alpha.letter_name(a), alpha.letter_name(b)}, "reverse pair derived");
    } else {
      report.compare("antisymmetry", "Def 3.1 antisymmetry", {alpha.letter_name(a), alpha.letter_name(b)}, label, value,
                     -rev->second);
    }
  }

  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i; j < letters.size(); ++j) {
      for (std::size_t k = j; k < letters.size(); ++k) {
        const Word a{letters[i]}, b{letters[j]}, c{letters[k]};
        const Element jac = p.bracket(Element::word(alg, a), p.bracket(b, c)) +
                            p.bracket(Element::word(alg, b), p.bracket(c, a)) +
                            p.bracket(Element::word(alg, c), p.bracket(a, b));
        const std::vector<std::string> names{alpha.letter_name(letters[i]), alpha.letter_name(letters[j]),
                                             alpha.letter_name(letters[k])};
        report.compare("Jacobi identity", "Def 3.1 Jacobi identity", names,
                       "{" + names[0] + ",{" + names[1] + "," + names[2] + "}} + cyclic", jac, Element::zero(alg));
      }
    }
  }

  for (Letter l : letters) {
    const Terms lt{{Word{l}, Scalar::one(alg->field())}};
    for (const Rule& r : alg->rules()) {
      const Terms lhs{{r.lhs, Scalar::one(alg->field())}};
      report.compare("bracket respects relation", "Def 3.1 Eq (3.1) Leibniz rule", {alpha.letter_name(l), r.label},
                     "{" + alpha.letter_name(l) + ", " + r.label + "}", p.bracket(lt, lhs), p.bracket(lt, r.rhs));
    }
    for (const auto& v : alg->vanishing()) {
      report.compare("bracket respects relation", "Def 3.1 Eq (3.1) Leibniz rule", {alpha.letter_name(l), v.label},
                     "{" + alpha.letter_name(l) + ", " + v.label + "}", p.bracket(lt, v.element), Element::zero(alg));
    }
  }
  return report;
}

Tensor factor_bracket(const std::vector<const PoissonStructure*>& ps, const std::vector<Scalar>& signs, const Tensor& s,
                      const Tensor& t) {
  if (s.space() != t.space()) throw InputError("bracket of tensors on different spaces");
  const std::size_t n = s.rank();
  if (ps.size() != n || signs.size() != n) throw InputError("bracket arity mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (ps[i]->algebra() != s.space()[i].alg) throw InputError("Poisson structure does not match tensor factor");
  TensorTerms acc;
  std::vector<Terms> factors(n);
  for (const auto& [ka, ca] : s.terms()) {
    for (const auto& [kb, cb] : t.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (signs[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const auto& alg = *s.space()[j].alg;
          if (j == i) {
            factors[j] = ps[j]->bracket(ka[j], kb[j]).terms();
          } else {
            factors[j] = alg.normal_form(s.space()[j].op ? concat(kb[j], ka[j]) : concat(ka[j], kb[j]));
          }
        }
        accumulate_product(acc, factors, signs[i] * ca * cb);
      }
    }
  }
  Tensor out(s.space(), s.field());
  for (const auto& [k, c] : acc) out.add_normal(k, c);
  return out;
}

Tensor tensor_bracket(const PoissonStructure& pa, const PoissonStructure& pb, const Tensor& s, const Tensor& t) {
  const Scalar one = Scalar::one(s.field());
  return factor_bracket({&pa, &pb}, {one, one}, s, t);
}

Tensor triple_bracket(const PoissonStructure& p, const Tensor& s, const Tensor& t, SignTriple signs) {
  const Field f = s.field();
  return factor_bracket({&p, &p, &p}, {Scalar(f, signs[0]), Scalar(f, signs[1]), Scalar(f, signs[2])}, s, t);
}

Report check_poisson_hg(const PoissonHopfGaloisStructure& ph, SignTriple signs) {
  Report report;
  const PresentationPtr& alg = ph.poisson.algebra();
  if (ph.hg.alg != alg) throw InputError("Poisson and Hopf-Galois structures on different algebras");
  const Alphabet& alpha = alg->alphabet();
  const auto letters = alpha.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      const Letter a = letters[i], b = letters[j];
      const Tensor lhs = ph.hg.mu.apply(ph.poisson.letter_bracket(a, b));
      const Tensor rhs = triple_bracket(ph.poisson, ph.hg.mu.apply(Word{a}), ph.hg.mu.apply(Word{b}), signs);
      report.compare("mu is a Poisson map", "Def 3.5 Eq (3.4)", {alpha.letter_name(a), alpha.letter_name(b)},
                     "mu(" + pair_label(alpha, a, b) + ")", lhs, rhs);
    }
  }
  return report;
}

Report check_poisson_hopf(const PoissonHopfStructure& ph) {
  Report report;
  const PoissonStructure& p = ph.poisson;
  const PresentationPtr& alg = p.algebra();
  if (ph.hopf.alg != alg) throw InputError("Poisson and Hopf structures on different algebras");
  const Alphabet& alpha = alg->alphabet();
  const auto letters = alpha.letters();
  const TensorSpace s1{Factor{alg, false}};
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      const Letter a = letters[i], b = letters[j];
      const std::vector<std::string> names{alpha.letter_name(a), alpha.letter_name(b)};
      const std::string label = pair_label(alpha, a, b);
      const Element br = p.letter_bracket(a, b);
      report.compare("comultiplication is a Poisson map", "Def 3.3 Eq (3.3)", names, "Delta(" + label + ")",
                     ph.hopf.delta.apply(br),
                     tensor_bracket(p, p, ph.hopf.delta.apply(Word{a}), ph.hopf.delta.apply(Word{b})));
      const Tensor eps = ph.hopf.counit.apply(br);
      report.compare("counit kills brackets", "Lemma 3.4 counit", names, "epsilon(" + label + ")", eps,
                     Tensor(TensorSpace{}, alg->field()));
      const Element sa = ph.hopf.antipode.apply(Word{a}).retagged(s1).as_element();
      const Element sb = ph.hopf.antipode.apply(Word{b}).retagged(s1).as_element();
      report.compare("antipode is a Poisson anti-map", "Lemma 3.4 antipode", names, "S(" + label + ")",
                     ph.hopf.antipode.apply(br).retagged(s1).as_element(), p.bracket(sb, sa));
    }
  }
  return report;
}

PoissonHopfGaloisStructure phg_from_poisson_hopf(const PoissonHopfStructure& ph) {
  const Report r = check_poisson_hopf(ph);
  if (const ReportEntry* e = r.first_failure())
    throw InputError("not a Poisson Hopf algebra: " + e->check + " fails on " + e->witness->input);
  return PoissonHopfGaloisStructure{ph.poisson, hopf_to_galois(ph.hopf)};
}

PoissonHopfStructure poisson_hopf_from_phg(const PoissonHopfGaloisStructure& ph, const GeneratorMap& alpha) {
  const PresentationPtr& alg = ph.poisson.algebra();
  const Alphabet& a = alg->alphabet();
  const auto letters = a.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      const Tensor v = alpha.apply(ph.poisson.letter_bracket(letters[i], letters[j]));
      if (!v.is_zero())
        throw InputError("alpha does not vanish on the bracket " + pair_label(a, letters[i], letters[j]) + " (value " +
                         v.to_string() + ")");
    }
  }
  return PoissonHopfStructure{ph.poisson, galois_to_hopf(ph.hg, alpha)};
}

PoissonHopfGaloisStructure poisson_pushforward(const PoissonHopfGaloisStructure& ph, const GeneratorMap& f,
                                               const GeneratorMap& section, const std::vector<Element>& ideal_generators) {
  const PresentationPtr& r = ph.poisson.algebra();
  const PresentationPtr& b = section.source();
  const Alphabet& ra = r->alphabet();
  for (const Element& i : ideal_generators) {
    if (i.presentation() != r) throw InputError("ideal generator outside the algebra");
    if (!f.apply(i).is_zero()) throw InputError("ideal generator " + i.to_string() + " is not killed by the quotient map");
    for (Letter l : ra.letters()) {
      const Element br = ph.poisson.bracket(Element::word(r, Word{l}), i);
      if (!f.apply(br).is_zero())
        throw InputError("ideal is not Poisson: {" + ra.letter_name(l) + ", " + i.to_string() + "} = " + br.to_string() +
                         " is not in the ideal");
    }
  }
  HopfGaloisStructure hg = pushforward(ph.hg, f, section);
  const TensorSpace s1{Factor{b, false}};
  PoissonStructure::Table table;
  const auto gens = b->alphabet().generator_count();
  for (std::size_t i = 0; i < gens; ++i) {
    for (std::size_t j = i + 1; j < gens; ++j) {
      const Letter x = make_letter(i, false), y = make_letter(j, false);
      const Element br = ph.poisson.bracket(section.apply(Word{x}).as_element(), section.apply(Word{y}).as_element());
      const Element img = f.apply(br).as_element();
      if (!img.is_zero()) table.emplace(std::make_pair(x, y), img);
    }
  }
  return PoissonHopfGaloisStructure{PoissonStructure(b, std::move(table), ph.poisson.name()), std::move(hg)};
}

}  // namespace hgalg
