// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/hopf_galois.hpp"

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

void require_space(const GeneratorMap& m, const TensorSpace& s, const std::string& what) {
  if (m.target() != s) throw InputError(what + " has the wrong target tensor space");
}

Tensor word_tensor(const TensorSpace& s, const std::vector<Word>& words) {
  std::vector<Terms> f;
  for (const auto& w : words) f.push_back(Terms{{w, Scalar::one(s.at(0).alg->field())}});
  return Tensor::pure(s, f, Scalar::one(s.at(0).alg->field()));
}

}  // namespace

HopfGaloisStructure::HopfGaloisStructure(GeneratorMap m) : alg(m.source()), mu(std::move(m)) {
  require_space(mu, alternating_space(alg, 3), "Hopf-Galois map");
}

HopfStructure::HopfStructure(GeneratorMap d, GeneratorMap e, GeneratorMap s)
    : alg(d.source()), delta(std::move(d)), counit(std::move(e)), antipode(std::move(s)) {
  if (counit.source() != alg || antipode.source() != alg) throw InputError("Hopf structure maps on different algebras");
  require_space(delta, plain_space(alg, 2), "comultiplication");
  require_space(counit, TensorSpace{}, "counit");
  require_space(antipode, TensorSpace{Factor{alg, true}}, "antipode");
}

Report check_hopf_galois(const HopfGaloisStructure& h) {
  Report report;
  const PresentationPtr& r = h.alg;
  if (r->normal_form(Word{}).empty()) {
    report.fail("non-zero algebra", "Def 2.1 non-zero algebra", {}, "1", "1 = 0");
    return report;
  }
  report.append(check_map_respects_relations(h.mu, "Def 2.1 algebra map"));
  const TensorSpace s3 = alternating_space(r, 3);
  const TensorSpace s2 = plain_space(r, 2);
  const TensorSpace s5 = alternating_space(r, 5);
  const auto mu_fn = [&](const Word& w) { return h.mu.apply(w); };
  for (Letter l : r->alphabet().letters()) {
    const std::string name = r->alphabet().letter_name(l);
    const Tensor m = h.mu.apply(Word{l});
    report.compare("left unit law", "Def 2.1 Eq (2.1) left law", {name}, name, m.contract(1, false),
                   word_tensor(s2, {{l}, {}}));
    report.compare("right unit law", "Def 2.1 Eq (2.1) right law", {name}, name, m.contract(0, false),
                   word_tensor(s2, {{}, {l}}));
    const Tensor left = m.expand(0, s3, mu_fn);
    const Tensor right = m.expand(2, s3, mu_fn);
    report.compare("coassociativity", "Def 2.1 Eq (2.2) coassociativity", {name}, name, left, right.retagged(s5));
  }
  return report;
}

Report check_hopf_axioms(const HopfStructure& h) {
  Report report;
  const PresentationPtr& r = h.alg;
  report.append(check_map_respects_relations(h.delta, "Hopf algebra comultiplication is an algebra map"));
  report.append(check_map_respects_relations(h.counit, "Hopf algebra counit is an algebra map"));
  report.append(check_map_respects_relations(h.antipode, "Hopf algebra antipode is an anti-algebra map"));
  const TensorSpace s1{Factor{r, false}};
  const TensorSpace s2 = plain_space(r, 2);
  const auto delta_fn = [&](const Word& w) { return h.delta.apply(w); };
  const auto counit_fn = [&](const Word& w) { return h.counit.apply(w); };
  const auto antipode_fn = [&](const Word& w) { return h.antipode.apply(w).retagged(s1); };
  for (Letter l : r->alphabet().letters()) {
    const std::string name = r->alphabet().letter_name(l);
    const Tensor d = h.delta.apply(Word{l});
    report.compare("coassociativity", "Hopf algebra coassociativity", {name}, name, d.expand(0, s2, delta_fn),
                   d.expand(1, s2, delta_fn));
    const Tensor x = word_tensor(s1, {{l}});
    report.compare("left counit law", "Hopf algebra counit law", {name}, name, d.expand(0, {}, counit_fn), x);
    report.compare("right counit law", "Hopf algebra counit law", {name}, name, d.expand(1, {}, counit_fn), x);
    const Tensor eps = Tensor::unit(s1, r->field()).scaled(h.counit.apply(Word{l}).as_scalar());
    report.compare("left antipode law", "Hopf algebra antipode law", {name}, name,
                   d.expand(0, s1, antipode_fn).contract(0, false), eps);
    report.compare("right antipode law", "Hopf algebra antipode law", {name}, name,
                   d.expand(1, s1, antipode_fn).contract(0, false), eps);
  }
  return report;
}

GrouplikeResult is_grouplike(const HopfGaloisStructure& h, const Element& g) {
  GrouplikeResult res;
  if (g.presentation() != h.alg) throw InputError("element outside the Hopf-Galois algebra");
  res.inverse = inverse_of(g);
  if (!res.inverse) {
    res.reason = "no inverse";
    return res;
  }
  const TensorSpace s3 = alternating_space(h.alg, 3);
  const Tensor expected = Tensor::pure(s3, {g.terms(), res.inverse->terms(), g.terms()}, Scalar::one(g.field()));
  const Tensor diff = h.mu.apply(g) - expected;
  if (!diff.is_zero()) {
    res.reason = "mu(g) differs from g ⊗ g^-1 ⊗ g";
    res.difference = diff;
    return res;
  }
  res.grouplike = true;
  return res;
}

HopfGaloisStructure reverse_mu(const HopfGaloisStructure& h) {
  if (!h.alg->is_commutative())
    throw InputError("reversed Hopf-Galois map requires a commutative algebra; '" + h.alg->name() + "' is not");
  std::map<Letter, Tensor> images;
  for (const auto& [l, img] : h.mu.images()) images.emplace(l, img.permuted({2, 1, 0}));
  return HopfGaloisStructure(GeneratorMap(h.alg, h.mu.target(), std::move(images), h.mu.name() + "'"));
}

Tensor apply_factorwise(const Tensor& t, const GeneratorMap& f, const TensorSpace& target) {
  if (target.size() != t.rank()) throw InputError("factorwise map arity mismatch");
  Tensor r = t;
  for (std::size_t i = 0; i < t.rank(); ++i) {
    if (r.space()[i].alg != f.source()) throw InputError("factorwise map source mismatch");
    const TensorSpace one{target[i]};
    r = r.expand(i, one, [&](const Word& w) { return f.apply(w).retagged(one); });
  }
  return r;
}

HopfGaloisStructure pushforward(const HopfGaloisStructure& h, const GeneratorMap& f, const GeneratorMap& section) {
  const PresentationPtr& b = section.source();
  if (f.source() != h.alg || f.target() != TensorSpace{Factor{b, false}})
    throw InputError("pushforward map must go from the Hopf-Galois algebra to the quotient");
  if (section.target() != TensorSpace{Factor{h.alg, false}}) throw InputError("section must map the quotient back");
  const Report rel = check_map_respects_relations(f, "");
  if (const ReportEntry* e = rel.first_failure())
    throw InputError("quotient map does not respect relation " + e->generators.at(0));
  for (Letter l : b->alphabet().letters()) {
    if (f.apply(section.apply(Word{l}).as_element()) != Tensor::from_element(Element::word(b, Word{l})))
      throw InputError("section is not a right inverse of the quotient map on " + b->alphabet().letter_name(l));
  }
  const TensorSpace target = alternating_space(b, 3);
  std::map<Letter, Tensor> images;
  for (Letter l : b->alphabet().letters()) {
    const Element lift = section.apply(Word{l}).as_element();
    images.emplace(l, apply_factorwise(h.mu.apply(lift), f, target));
  }
  GeneratorMap mu_b(b, target, std::move(images), "mu_" + b->name());
  const Report lifted = check_map_respects_relations(mu_b, "");
  if (const ReportEntry* e = lifted.first_failure())
    throw InputError("relation " + e->generators.at(0) + " of the quotient does not lift through the section");
  return HopfGaloisStructure(std::move(mu_b));
}

HopfGaloisStructure hopf_to_galois(const HopfStructure& hs) {
  const PresentationPtr& r = hs.alg;
  const TensorSpace s2 = plain_space(r, 2);
  const TensorSpace op1{Factor{r, true}};
  const TensorSpace target = alternating_space(r, 3);
  std::map<Letter, Tensor> images;
  for (Letter l : r->alphabet().letters()) {
    const Tensor d2 = hs.delta.apply(Word{l}).expand(0, s2, [&](const Word& w) { return hs.delta.apply(w); });
    images.emplace(l, d2.expand(1, op1, [&](const Word& w) { return hs.antipode.apply(w); }).retagged(target));
  }
  return HopfGaloisStructure(GeneratorMap(r, target, std::move(images), "mu"));
}

HopfStructure galois_to_hopf(const HopfGaloisStructure& h, const GeneratorMap& alpha) {
  const PresentationPtr& r = h.alg;
  if (alpha.source() != r || !alpha.target().empty()) throw InputError("alpha must be a scalar-valued map on the algebra");
  const Report rel = check_map_respects_relations(alpha, "");
  if (const ReportEntry* e = rel.first_failure())
    throw InputError("alpha is not an algebra map: relation " + e->generators.at(0) + " fails");
  const auto alpha_fn = [&](const Word& w) { return alpha.apply(w); };
  std::map<Letter, Tensor> delta, antipode;
  for (Letter l : r->alphabet().letters()) {
    const Tensor m = h.mu.apply(Word{l});
    delta.emplace(l, m.expand(1, {}, alpha_fn).retagged(plain_space(r, 2)));
    antipode.emplace(l, m.permuted({0, 2, 1}).contract(0, false).expand(0, {}, alpha_fn));
  }
  return HopfStructure(GeneratorMap(r, plain_space(r, 2), std::move(delta), "Delta"), alpha,
                       GeneratorMap(r, TensorSpace{Factor{r, true}}, std::move(antipode), "S"));
}

GeneratorMap scalar_map(const PresentationPtr& p, const std::map<Letter, Scalar>& values, std::string name) {
  std::map<Letter, Tensor> images;
  for (const auto& [l, c] : values) images.emplace(l, Tensor::scalar(TensorSpace{}, c));
  return GeneratorMap(p, TensorSpace{}, std::move(images), std::move(name));
}

}  // namespace hgalg
