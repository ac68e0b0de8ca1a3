// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/ore.hpp"

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
  return s;
}

void throw_first_failure(const Report& r, const std::string& what) {
  if (const ReportEntry* e = r.first_failure()) throw InputError(what + ": " + e->check + " fails on " + join(e->generators));
}

TensorSpace single(const PresentationPtr& p, bool op) { return TensorSpace{Factor{p, op}}; }

// Expansion of one factor through an element-valued function of its word.
std::function<Tensor(const Word&)> via(const PresentationPtr& p, bool op, std::function<Element(const Element&)> f) {
  return [p, op, f = std::move(f)](const Word& w) { return Tensor::from_element(f(Element::word(p, w)), op); };
}

Generator fresh_generator(const PresentationPtr& base, const std::string& name) {
  if (name.empty()) throw InputError("extension variable needs a name");
  if (base->alphabet().find(name)) throw InputError("extension variable '" + name + "' is already a generator");
  return Generator{name, false};
}

}  // namespace

Tensor lift_tensor(const Tensor& t, const PresentationPtr& b) {
  TensorSpace s;
  for (const Factor& f : t.space()) s.push_back(Factor{b, f.op});
  TensorTerms acc;
  std::vector<Terms> factors(t.rank());
  for (const auto& [k, c] : t.terms()) {
    for (std::size_t i = 0; i < k.size(); ++i) factors[i] = b->normal_form(k[i]);
    accumulate_product(acc, factors, c);
  }
  Tensor out(s, t.field());
  for (const auto& [k, c] : acc) out.add_normal(k, c);
  return out;
}

Element lift_element(const Element& e, const PresentationPtr& b) { return Element(b, e.terms()); }

Report check_ore_data(const OreData& d) {
  Report report;
  const PresentationPtr& a = d.base;
  if (d.tau.source() != a || d.tau.target() != single(a, false)) throw InputError("tau must be an endomorphism of the base");
  if (d.delta.algebra() != a) throw InputError("delta must be defined on the base");
  report.append(check_map_respects_relations(d.tau, "Ore extension tau is an algebra map"));
  for (Letter l : a->alphabet().letters()) {
    const Element want = d.tau.apply(Word{l}).as_element();
    const Element got = d.delta.tau() ? d.delta.tau()->apply(Word{l}).as_element() : Element::word(a, Word{l});
    report.compare("delta is twisted by tau", "Ore extension sigma-derivation law", {a->alphabet().letter_name(l)},
                   a->alphabet().letter_name(l), got, want);
  }
  report.append(d.delta.check_relations("Ore extension sigma-derivation law"));
  if (d.tau_inverse) {
    const GeneratorMap& inv = *d.tau_inverse;
    if (inv.source() != a || inv.target() != single(a, false)) throw InputError("tau^-1 must be an endomorphism of the base");
    report.append(check_map_respects_relations(inv, "Ore extension tau is an automorphism"));
    for (Letter l : a->alphabet().letters()) {
      const std::string name = a->alphabet().letter_name(l);
      const Element x = Element::word(a, Word{l});
      report.compare("tau^-1 inverts tau", "Ore extension tau is an automorphism", {name}, "tau^-1(tau(" + name + "))",
                     inv.apply(d.tau.apply(x).as_element()).as_element(), x);
      report.compare("tau^-1 inverts tau", "Ore extension tau is an automorphism", {name}, "tau(tau^-1(" + name + "))",
                     d.tau.apply(inv.apply(x).as_element()).as_element(), x);
    }
  }
  return report;
}

OreExtension build_ore(const OreData& d) {
  throw_first_failure(check_ore_data(d), "invalid Ore data");
  const PresentationPtr& a = d.base;
  if (a->side_relations()) throw InputError("Ore extensions of presentations with side relations are not supported");
  PresentationOptions o;
  o.name = a->name() + "[" + d.variable + "]";
  o.field = a->field();
  o.generators = a->alphabet().generators();
  o.generators.push_back(fresh_generator(a, d.variable));
  o.rules = a->rules();
  o.forbidden_characteristics = a->options().forbidden_characteristics;
  o.cap = d.cap;
  o.backend = a->backend();
  o.vanishing = a->vanishing();
  const Letter z = make_letter(a->alphabet().generator_count(), false);
  for (Letter l : a->alphabet().letters()) {
    Terms rhs;
    const Element image = d.tau.apply(Word{l}).as_element();
    for (const auto& [w, c] : image.terms()) add_term(rhs, concat(w, Word{z}), c);
    add_terms(rhs, d.delta.apply(Word{l}).terms(), Scalar::one(a->field()));
    o.rules.push_back({Word{z, l}, rhs, d.variable + "*" + a->alphabet().letter_name(l)});
  }
  return OreExtension{Presentation::create(o), z};
}

Report check_thm28(const OreData& d, const HopfGaloisStructure& h, const Element& g) {
  const PresentationPtr& a = d.base;
  if (h.alg != a) throw InputError("Hopf-Galois structure is not on the Ore base");
  if (!d.tau_inverse) throw InputError("the Ore criterion needs tau^-1 but none was supplied");
  const GrouplikeResult gl = is_grouplike(h, g);
  if (!gl.grouplike) throw InputError("element " + g.to_string() + " is not group-like: " + gl.reason);
  const Element ginv = *gl.inverse;
  const GeneratorMap& tau = d.tau;
  const GeneratorMap& tau_inv = *d.tau_inverse;
  const TensorSpace p1 = single(a, false), op1 = single(a, true);
  const auto tau_fn = [&](const Word& w) { return tau.apply(w); };
  const auto tau_op = [&](const Word& w) { return tau.apply(w).retagged(op1); };
  const auto conj = [&](const Element& r) { return g * r * ginv; };
  const auto delta = [&](const Element& r) { return d.delta.apply(r); };

  Report report;
  for (Letter l : a->alphabet().letters()) {
    const std::string name = a->alphabet().letter_name(l);
    const Tensor m = h.mu.apply(Word{l});
    const Tensor tau_first = m.expand(0, p1, tau_fn);
    report.compare("condition (1)", "Theorem 2.8 (1)", {name}, "mu(tau(" + name + "))",
                   h.mu.apply(tau.apply(Word{l}).as_element()), tau_first);
    report.compare("condition (1)", "Theorem 2.8 (1)", {name}, "tau(" + name + "_(1)) ⊗ " + name + "_(2) ⊗ " + name + "_(3)",
                   tau_first, tau_first.expand(1, op1, tau_op).expand(2, p1, tau_fn));

    const Tensor conj_left = m.expand(0, p1, via(a, false, conj)).expand(1, op1, via(a, true, conj));
    report.compare("condition (2)", "Theorem 2.8 (2)", {name}, "g.(" + name + "_(1)) ⊗ g.(" + name + "_(2)) ⊗ " + name + "_(3)",
                   conj_left, tau_first.expand(1, op1, tau_op));

    const Tensor t1 = m.expand(0, p1, via(a, false, delta));
    const Tensor t2 = m.expand(0, p1, via(a, false, [&](const Element& r) { return g * r; }))
                          .expand(1, op1, via(a, true, [&](const Element& r) { return r * ginv; }))
                          .expand(2, p1, via(a, false, delta));
    const Tensor t3 = m.expand(0, p1, via(a, false, [&](const Element& r) { return g * r; }))
                          .expand(1, op1, via(a, true, [&](const Element& r) {
                            return ginv * d.delta.apply(tau_inv.apply(conj(r)).as_element());
                          }));
    report.compare("condition (3)", "Theorem 2.8 (3)", {name}, "mu(delta(" + name + "))", t1 + t2 + t3,
                   h.mu.apply(d.delta.apply(Word{l})));
  }
  return report;
}

Tensor ore_mu_z(const OreExtension& ext, const Element& g) {
  const PresentationPtr& r = ext.algebra;
  const Element gr = lift_element(g, r);
  const auto base_inv = inverse_of(g);
  if (!base_inv) throw InputError("element " + g.to_string() + " has no inverse");
  const std::optional<Element> ginv = lift_element(*base_inv, r);
  const Field f = r->field();
  const Scalar one = Scalar::one(f);
  const Terms unit{{Word{}, one}};
  const Terms z{{Word{ext.z}, one}};
  const TensorSpace s3 = alternating_space(r, 3);
  return Tensor::pure(s3, {z, unit, unit}, one) + Tensor::pure(s3, {gr.terms(), ginv->terms(), z}, one) -
         Tensor::pure(s3, {gr.terms(), (*ginv * Element(r, z)).terms(), unit}, one);
}

HopfGaloisStructure extend_mu_ore_unchecked(const OreExtension& ext, const HopfGaloisStructure& h, const Element& g,
                                            const Tensor& mu_z) {
  (void)g;
  const PresentationPtr& r = ext.algebra;
  std::map<Letter, Tensor> images;
  for (std::size_t i = 0; i < h.alg->alphabet().generator_count(); ++i) {
    const Letter l = make_letter(i, false);
    images.emplace(l, lift_tensor(h.mu.image(l), r));
  }
  images.emplace(ext.z, mu_z);
  return HopfGaloisStructure(GeneratorMap(r, alternating_space(r, 3), std::move(images), "mu"));
}

HopfGaloisStructure extend_mu_ore(const OreData& d, const OreExtension& ext, const HopfGaloisStructure& h,
                                  const Element& g) {
  throw_first_failure(check_thm28(d, h, g), "Ore criterion");
  return extend_mu_ore_unchecked(ext, h, g, ore_mu_z(ext, g));
}

Report check_poisson_ore_data(const PoissonOreData& d) {
  const PoissonStructure& p = d.base;
  const PresentationPtr& b = p.algebra();
  if (d.alpha.algebra() != b || d.delta.algebra() != b) throw InputError("alpha and delta must be defined on the base");
  if (d.alpha.tau() || d.delta.tau()) throw InputError("Poisson Ore data takes untwisted derivations");
  Report report;
  report.append(d.alpha.check_relations("Def 4.1 Eq (4.1)"));
  report.append(d.delta.check_relations("Def 4.1 Eq (4.1)"));
  const auto letters = b->alphabet().letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      const Element x = Element::word(b, Word{letters[i]}), y = Element::word(b, Word{letters[j]});
      const std::vector<std::string> names{b->alphabet().letter_name(letters[i]), b->alphabet().letter_name(letters[j])};
      const std::string label = "{" + names[0] + ", " + names[1] + "}";
      const Element br = p.bracket(x, y);
      const Element ax = d.alpha.apply(x), ay = d.alpha.apply(y);
      const Element dx = d.delta.apply(x), dy = d.delta.apply(y);
      report.compare("alpha is a Poisson derivation", "Def 4.1 Eq (4.2)", names, "alpha(" + label + ")", d.alpha.apply(br),
                     p.bracket(ax, y) + p.bracket(x, ay));
      report.compare("delta twisted Lie rule", "Remark 4.2 Eq (4.3)", names, "delta(" + label + ")", d.delta.apply(br),
                     p.bracket(dx, y) + p.bracket(x, dy) + ax * dy - dx * ay);
    }
  }
  return report;
}

PoissonOreExtension build_poisson_ore(const PoissonOreData& d) {
  throw_first_failure(check_poisson_ore_data(d), "invalid Poisson Ore data");
  const PresentationPtr& b = d.base.algebra();
  if (b->side_relations()) throw InputError("Poisson Ore extensions of presentations with side relations are not supported");
  PresentationOptions o = b->options();
  o.name = b->name() + "[" + d.variable + "]";
  o.generators.push_back(fresh_generator(b, d.variable));
  o.cap = d.cap;
  const Letter x = make_letter(b->alphabet().generator_count(), false);
  if (!o.commutative) {
    for (Letter l : b->alphabet().letters())
      o.rules.push_back({Word{x, l}, Terms{{Word{l, x}, Scalar::one(b->field())}}, d.variable + "*" + b->alphabet().letter_name(l)});
  }
  const PresentationPtr r = Presentation::create(o);
  PoissonStructure::Table table;
  for (const auto& [pair, v] : d.base.table()) table.emplace(pair, lift_element(v, r));
  const Element xr = Element::word(r, Word{x});
  for (std::size_t i = 0; i < b->alphabet().generator_count(); ++i) {
    const Letter l = make_letter(i, false);
    const Element value = lift_element(d.alpha.apply(Word{l}), r) * xr + lift_element(d.delta.apply(Word{l}), r);
    if (!value.is_zero()) table.emplace(std::make_pair(x, l), value);
  }
  return PoissonOreExtension{PoissonStructure(r, std::move(table), d.base.name()), x};
}

Tensor poisson_ore_mu_x(const PoissonOreExtension& ext, const Element& g) {
  const PresentationPtr& r = ext.poisson.algebra();
  const Element gr = lift_element(g, r);
  const auto base_inv = inverse_of(g);
  if (!base_inv) throw InputError("element " + g.to_string() + " has no inverse");
  const std::optional<Element> ginv = lift_element(*base_inv, r);
  const Scalar one = Scalar::one(r->field());
  const Terms unit{{Word{}, one}};
  const Terms x{{Word{ext.x}, one}};
  const TensorSpace s3 = alternating_space(r, 3);
  return Tensor::pure(s3, {x, unit, unit}, one) -
         Tensor::pure(s3, {gr.terms(), (*ginv * Element(r, x)).terms(), unit}, one) +
         Tensor::pure(s3, {gr.terms(), ginv->terms(), x}, one);
}

Thm44Result check_thm44(const PoissonOreData& d, const PoissonHopfGaloisStructure& ph, const Element& g) {
  const PoissonStructure& p = ph.poisson;
  const PresentationPtr& b = p.algebra();
  if (d.base.algebra() != b || ph.hg.alg != b) throw InputError("Poisson Ore data and structure on different algebras");
  const GrouplikeResult gl = is_grouplike(ph.hg, g);
  if (!gl.grouplike) throw InputError("element " + g.to_string() + " is not group-like: " + gl.reason);
  const Element ginv = *gl.inverse;
  const PoissonOreExtension ext = build_poisson_ore(d);
  const PresentationPtr& r = ext.poisson.algebra();
  const Element gr = lift_element(g, r), ginv_r = lift_element(ginv, r);
  const Element x = Element::word(r, Word{ext.x});
  const auto alpha = [&](const Element& e) { return d.alpha.apply(e); };
  const auto delta = [&](const Element& e) { return d.delta.apply(e); };
  const TensorSpace p1 = single(b, false), op1 = single(b, true);
  const TensorSpace p1r = single(r, false), op1r = single(r, true);

  Thm44Result res;
  Report& report = res.report;
  for (Letter l : b->alphabet().letters()) {
    const std::string name = b->alphabet().letter_name(l);
    const Element e = Element::word(b, Word{l});
    const Tensor m = ph.hg.mu.apply(Word{l});
    report.compare("alpha from the group-like", "Theorem 4.4 Eq (4.6)", {name}, "alpha(" + name + ")", alpha(e),
                   ginv * p.bracket(g, e));
    report.compare("mu of alpha", "Theorem 4.4 Eq (4.7)", {name}, "mu(alpha(" + name + "))", ph.hg.mu.apply(alpha(e)),
                   m.expand(0, p1, via(b, false, alpha)));
    report.compare("alpha on the last factor", "Theorem 4.4 Eq (4.8)", {name}, name + "_(1) ⊗ " + name + "_(2) ⊗ alpha(" + name + "_(3))",
                   m.expand(2, p1, via(b, false, alpha)),
                   m.expand(1, op1, via(b, true, [&](const Element& y) { return g * p.bracket(ginv, y); })));
    const Tensor mr = lift_tensor(m, r);
    const Tensor t1 = lift_tensor(m.expand(0, p1, via(b, false, delta)), r);
    const Tensor t2 = mr.expand(0, p1r, via(r, false, [&](const Element& y) { return gr * y; }))
                          .expand(1, op1r, via(r, true, [&](const Element& y) { return ext.poisson.bracket(ginv_r * x, y); }));
    const Tensor t3 = lift_tensor(m.expand(0, p1, via(b, false, [&](const Element& y) { return g * y; }))
                                      .expand(1, op1, via(b, true, [&](const Element& y) { return ginv * y; }))
                                      .expand(2, p1, via(b, false, delta)),
                                  r);
    report.compare("mu of delta", "Theorem 4.4 Eq (4.10)", {name}, "mu(delta(" + name + "))",
                   lift_tensor(ph.hg.mu.apply(delta(e)), r), t1 + t2 + t3);
  }
  const auto letters = b->alphabet().letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      const Element u = Element::word(b, Word{letters[i]}), v = Element::word(b, Word{letters[j]});
      const std::vector<std::string> names{b->alphabet().letter_name(letters[i]), b->alphabet().letter_name(letters[j])};
      report.compare("alpha against the inverse bracket", "Theorem 4.4 Eq (4.9)", names,
                     "{g^-1, " + names[1] + "} alpha(" + names[0] + ")", p.bracket(ginv, v) * alpha(u),
                     p.bracket(ginv, u) * alpha(v));
    }
  }
  if (!report.passed()) return res;

  std::map<Letter, Tensor> images;
  for (std::size_t i = 0; i < b->alphabet().generator_count(); ++i) {
    const Letter l = make_letter(i, false);
    images.emplace(l, lift_tensor(ph.hg.mu.image(l), r));
  }
  images.emplace(ext.x, poisson_ore_mu_x(ext, g));
  PoissonHopfGaloisStructure extended{ext.poisson, HopfGaloisStructure(GeneratorMap(r, alternating_space(r, 3), std::move(images), "mu"))};
  report.append(check_hopf_galois(extended.hg));
  report.append(check_poisson_hg(extended));
  res.extension = std::move(extended);
  return res;
}

}  // namespace hgalg
