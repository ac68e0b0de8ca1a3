// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/envelope.hpp"

#include <array>
#include <deque>
#include <stdexcept>

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

std::size_t degree(const Terms& t) {
  std::size_t d = 0;
  for (const auto& [w, c] : t) d = std::max(d, w.size());
  return d;
}

std::string format_triple(const Presentation& a, const WordTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " ⊗ " : "") + a.alphabet().format(t[i]);
  return s;
}

}  // namespace

Envelope Envelope::build(const PoissonStructure& p, std::size_t cap) {
  const PresentationPtr& a = p.algebra();
  const auto basis = a->basis();
  if (!basis) throw InputError("enveloping algebra needs a finite basis; '" + a->name() + "' has none at its cap");
  if (basis->empty() || !basis->front().empty()) throw InputError("enveloping algebra of the zero algebra");
  const std::size_t n = basis->size();
  const Field f = a->field();
  const Scalar one = Scalar::one(f);
  std::map<Word, std::size_t, DegLex> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace((*basis)[i], i);
  const auto alpha_of = [&](std::size_t i) { return make_letter(i, false); };
  const auto beta_of = [&](std::size_t i) { return make_letter(n + i, false); };
  const auto lookup = [&](const Word& w) {
    auto it = index.find(w);
    if (it == index.end()) throw std::logic_error("normal form " + a->alphabet().format(w) + " is not a basis word");
    return it->second;
  };
  const auto alpha_terms = [&](const Terms& t) {
    Terms out;
    for (const auto& [w, c] : t) {
      const std::size_t i = lookup(w);
      add_term(out, i == 0 ? Word{} : Word{alpha_of(i)}, c);
    }
    return out;
  };
  const auto beta_terms = [&](const Terms& t) {
    Terms out;
    for (const auto& [w, c] : t) {
      const std::size_t i = lookup(w);
      if (i != 0) add_term(out, Word{beta_of(i)}, c);
    }
    return out;
  };

  PresentationOptions o;
  o.name = "U(" + a->name() + ")";
  o.field = f;
  o.forbidden_characteristics = a->options().forbidden_characteristics;
  o.cap = cap;
  for (std::size_t i = 0; i < n; ++i) o.generators.push_back({"alpha(" + a->alphabet().format((*basis)[i]) + ")", false});
  for (std::size_t i = 0; i < n; ++i) o.generators.push_back({"beta(" + a->alphabet().format((*basis)[i]) + ")", false});
  const auto name = [&](Letter l) { return o.generators[generator_of(l)].name; };
  o.rules.push_back({Word{alpha_of(0)}, Terms{{Word{}, one}}, "alpha(1) -> 1"});
  o.rules.push_back({Word{beta_of(0)}, Terms{}, "beta(1) -> 0"});
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const Word& bi = (*basis)[i];
      const Word& bj = (*basis)[j];
      const Terms product = a->normal_form(concat(bi, bj));
      const Terms bracket = p.bracket(bi, bj).terms();
      o.rules.push_back({Word{alpha_of(i), alpha_of(j)}, alpha_terms(product), name(alpha_of(i)) + "*" + name(alpha_of(j))});
      Terms ba = alpha_terms(bracket);
      add_term(ba, Word{alpha_of(j), beta_of(i)}, one);
      o.rules.push_back({Word{beta_of(i), alpha_of(j)}, ba, name(beta_of(i)) + "*" + name(alpha_of(j))});
      if (i > j) {
        Terms bb = beta_terms(bracket);
        add_term(bb, Word{beta_of(j), beta_of(i)}, one);
        o.rules.push_back({Word{beta_of(i), beta_of(j)}, bb, name(beta_of(i)) + "*" + name(beta_of(j))});
      }
    }
  }
  const PresentationPtr pre = Presentation::create(o);

  // Two-sided ideal of the product law, saturated by letter multiplication
  // while the degree stays within the cap.
  LinearReducer side(f);
  std::deque<Terms> pending;
  const auto add = [&](const Terms& t) {
    const Terms v = pre->normal_form(t);
    if (side.insert(v)) pending.push_back(v);
  };
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Terms r = beta_terms(a->normal_form(concat((*basis)[i], (*basis)[j])));
      for (auto& [w, c] : r) c = -c;
      add_term(r, Word{alpha_of(i), beta_of(j)}, one);
      add_term(r, Word{alpha_of(j), beta_of(i)}, one);
      if (degree(r) <= cap) add(r);
    }
  }
  std::vector<Letter> letters;
  for (std::size_t i = 1; i < n; ++i) letters.push_back(alpha_of(i));
  for (std::size_t i = 1; i < n; ++i) letters.push_back(beta_of(i));
  while (!pending.empty()) {
    const Terms v = std::move(pending.front());
    pending.pop_front();
    if (degree(v) + 1 > cap) continue;
    for (Letter l : letters) {
      Terms left, right;
      for (const auto& [w, c] : v) {
        add_term(left, concat(Word{l}, w), c);
        add_term(right, concat(w, Word{l}), c);
      }
      add(left);
      add(right);
    }
  }
  if (side.rank() > 0) o.side_relations = std::move(side);
  const PresentationPtr u = Presentation::create(o);
  ConfluenceReport conf = u->check_local_confluence();
  if (!conf.confluent()) {
    const CriticalPair& cp = conf.unresolved.front();
    throw InputError("enveloping algebra of '" + a->name() + "' is not confluent at cap " + std::to_string(cap) + ": " +
                     cp.description + " on " + u->alphabet().format(cp.overlap) + " gives " + u->alphabet().format(cp.left) +
                     " and " + u->alphabet().format(cp.right));
  }
  return Envelope(p, u, *basis, std::move(conf));
}

std::size_t Envelope::side_relation_rank() const {
  return u_->side_relations() ? u_->side_relations()->rank() : 0;
}

std::size_t Envelope::index_of(const Word& w) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == w) return i;
  throw InputError("word " + source_.algebra()->alphabet().format(w) + " is not a basis word of " + source_.algebra()->name());
}

Element Envelope::alpha(const Word& w) const {
  const std::size_t i = index_of(w);
  return i == 0 ? Element::one(u_) : Element::word(u_, Word{alpha_letter(i)});
}

Element Envelope::beta(const Word& w) const { return Element::word(u_, Word{beta_letter(index_of(w))}); }

Element Envelope::alpha(const Element& e) const {
  if (e.presentation() != source_.algebra()) throw InputError("alpha of an element outside the source algebra");
  Element r = Element::zero(u_);
  for (const auto& [w, c] : e.terms()) r += alpha(w).scaled(c);
  return r;
}

Element Envelope::beta(const Element& e) const {
  if (e.presentation() != source_.algebra()) throw InputError("beta of an element outside the source algebra");
  Element r = Element::zero(u_);
  for (const auto& [w, c] : e.terms()) r += beta(w).scaled(c);
  return r;
}

Report check_envelope_relations(const Envelope& u) {
  Report report;
  const PoissonStructure& p = u.source();
  const PresentationPtr& a = p.algebra();
  const PresentationPtr& ua = u.algebra();
  const auto op = [](const Element& e) { return Tensor::from_element(e, true); };
  report.compare("beta(1) vanishes", "Remark 5.2 beta(1)=0", {"1"}, "beta(1)", u.beta(Word{}), Element::zero(ua));
  for (const Word& wa : u.basis()) {
    for (const Word& wb : u.basis()) {
      const Element ea = Element::word(a, wa), eb = Element::word(a, wb);
      const std::vector<std::string> names{a->alphabet().format(wa), a->alphabet().format(wb)};
      const std::string pair = "(" + names[0] + ", " + names[1] + ")";
      const Element al = u.alpha(ea), bl = u.alpha(eb);
      const Element ba = u.beta(ea), bb = u.beta(eb);
      const Element ab = ea * eb;
      const Element br = p.bracket(ea, eb);
      report.compare("alpha is multiplicative", "Def 5.1 algebra homomorphism", names, pair, u.alpha(ab), al * bl);
      report.compare("beta is a Lie map", "Def 5.1 Lie homomorphism", names, pair, u.beta(br), ba * bb - bb * ba);
      report.compare("alpha of a bracket", "Def 5.1 Eq (5.1)", names, pair, u.alpha(br), ba * bl - bl * ba);
      report.compare("beta of a product", "Def 5.1 Eq (5.1)", names, pair, u.beta(ab), al * bb + bl * ba);
      report.compare("alpha of a bracket", "Remark 5.4 Eq (5.1')", names, pair, u.alpha(br), al * bb - bb * al);
      report.compare("beta of a product", "Remark 5.4 Eq (5.1')", names, pair, u.beta(ab), ba * bl + bb * al);
      report.compare("alpha of a bracket", "Lemma 5.3 Eq (5.3)", names, pair, u.alpha(br), al * bb - bb * al);
      report.compare("beta of a product", "Lemma 5.3 Eq (5.3)", names, pair, u.beta(ab), ba * bl + bb * al);
      report.compare("beta of a product in the opposite algebra", "Remark 5.4 Eq (5.4)", names, pair, op(u.beta(ab)),
                     op(al) * op(bb) + op(bl) * op(ba));
      report.compare("beta of a product in the opposite algebra", "Remark 5.4 Eq (5.4)", names, pair, op(u.beta(ab)),
                     op(ba) * op(bl) + op(bb) * op(al));
      report.compare("alpha of a bracket in the opposite algebra", "Remark 5.4 Eq (5.5)", names, pair, op(u.alpha(br)),
                     op(bl) * op(ba) - op(ba) * op(bl));
      report.compare("alpha of a bracket in the opposite algebra", "Remark 5.4 Eq (5.5)", names, pair, op(u.alpha(br)),
                     op(bb) * op(al) - op(al) * op(bb));
    }
  }
  return report;
}

TensorSpace triple_space(const Envelope& u) { return alternating_space(u.algebra(), 3); }

namespace {

Tensor apply_slots(const Envelope& u, const Tensor& t, const std::vector<std::array<bool, 3>>& beta_slots) {
  const TensorSpace s = triple_space(u);
  if (t.space() != alternating_space(u.source().algebra(), 3)) throw InputError("expected a tensor on A ⊗ A^op ⊗ A");
  Tensor out(s, t.field());
  for (const auto& [k, c] : t.terms()) {
    for (const auto& slots : beta_slots) {
      std::vector<Terms> factors;
      for (std::size_t i = 0; i < 3; ++i) factors.push_back((slots[i] ? u.beta(k[i]) : u.alpha(k[i])).terms());
      out += Tensor::pure(s, factors, c);
    }
  }
  return out;
}

}  // namespace

Tensor alpha3(const Envelope& u, const Tensor& t) { return apply_slots(u, t, {{false, false, false}}); }

Tensor xi(const Envelope& u, const Tensor& t) {
  return apply_slots(u, t, {{false, false, true}, {false, true, false}, {true, false, false}});
}

std::vector<WordTuple> word_triples(const std::vector<Word>& words) {
  std::vector<WordTuple> out;
  for (const Word& x : words)
    for (const Word& y : words)
      for (const Word& z : words) out.push_back(WordTuple{x, y, z});
  return out;
}

Report check_lemma55(const Envelope& u, const std::vector<WordTuple>& sample) {
  Report report;
  const PoissonStructure& p = u.source();
  const PresentationPtr& a = p.algebra();
  const TensorSpace s3 = alternating_space(a, 3);
  const Scalar one = Scalar::one(a->field());
  const auto pure = [&](const WordTuple& w) {
    if (w.size() != 3) throw InputError("sample entries must be triples");
    return Tensor::pure(s3, {Terms{{w[0], one}}, Terms{{w[1], one}}, Terms{{w[2], one}}}, one);
  };
  std::vector<Tensor> tensors, xis, alphas;
  for (const WordTuple& w : sample) {
    tensors.push_back(pure(w));
    xis.push_back(xi(u, tensors.back()));
    alphas.push_back(alpha3(u, tensors.back()));
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const std::vector<std::string> names{format_triple(*a, sample[i]), format_triple(*a, sample[j])};
      const std::string pair = "(" + names[0] + ", " + names[1] + ")";
      const Tensor& xs = xis[i];
      const Tensor& xt = xis[j];
      const Tensor& as = alphas[i];
      const Tensor& at = alphas[j];
      const Tensor prod = tensors[i] * tensors[j];
      const Tensor br = triple_bracket(p, tensors[i], tensors[j]);
      report.compare("alpha3 is multiplicative", "Lemma 5.5 (1)", names, pair, alpha3(u, prod), as * at);
      report.compare("xi is a Lie map", "Lemma 5.5 Eq (5.6)", names, pair, xi(u, br), xs * xt - xt * xs);
      report.compare("alpha3 of a bracket", "Lemma 5.7 step 2", names, pair, alpha3(u, br), xs * at - at * xs);
      report.compare("xi of a product", "Lemma 5.7 step 2", names, pair, xi(u, prod), as * xt + at * xs);
    }
  }
  return report;
}

EnvelopeMap envelope_map(const Envelope& u, const TensorSpace& target, const std::function<Tensor(const Word&)>& alpha_image,
                         const std::function<Tensor(const Word&)>& beta_image, const std::string& name,
                         const std::string& anchor) {
  std::map<Letter, Tensor> images;
  for (std::size_t i = 0; i < u.size(); ++i) {
    images.emplace(u.alpha_letter(i), alpha_image(u.basis()[i]));
    images.emplace(u.beta_letter(i), beta_image(u.basis()[i]));
  }
  GeneratorMap m(u.algebra(), target, std::move(images), name);
  Report relations = check_map_respects_relations(m, anchor);
  if (const auto& side = u.algebra()->side_relations()) {
    ReportEntry entry{"side relations preserved", anchor, true, {}, std::nullopt,
                      std::to_string(side->rank()) + " side relations"};
    for (const auto& [lead, row] : side->rows()) {
      const Tensor img = m.apply(row);
      if (!img.is_zero()) {
        entry.passed = false;
        entry.generators = {u.algebra()->alphabet().format(lead)};
        entry.witness = Witness{u.algebra()->format(row), img.to_string()};
        break;
      }
    }
    relations.add(std::move(entry));
  }
  return EnvelopeMap{std::move(m), std::move(relations)};
}

GeneratorMap induced_map(const GeneratorMap& phi, const Envelope& ua, const Envelope& ub) {
  const PresentationPtr& a = ua.source().algebra();
  const PresentationPtr& b = ub.source().algebra();
  if (phi.source() != a || phi.target() != TensorSpace{Factor{b, false}})
    throw InputError("induced map needs phi from the first source algebra to the second");
  const TensorSpace target{Factor{ub.algebra(), false}};
  EnvelopeMap em = envelope_map(
      ua, target, [&](const Word& w) { return Tensor::from_element(ub.alpha(phi.apply(w).as_element())); },
      [&](const Word& w) { return Tensor::from_element(ub.beta(phi.apply(w).as_element())); }, "U(" + phi.name() + ")",
      "Lemma 5.8 Eq (5.15)");
  if (const ReportEntry* e = em.relations.first_failure())
    throw InputError("U(" + phi.name() + ") does not respect relation " + (e->generators.empty() ? e->check : e->generators[0]) +
                     "; the map is not a Poisson homomorphism");
  for (const Word& x : ua.basis()) {
    for (const Word& y : ua.basis()) {
      const Element ex = Element::word(a, x), ey = Element::word(a, y);
      const Element fx = phi.apply(x).as_element(), fy = phi.apply(y).as_element();
      if (phi.apply(ex * ey).as_element() != fx * fy ||
          phi.apply(ua.source().bracket(ex, ey)).as_element() != ub.source().bracket(fx, fy))
        throw InputError("map is not a Poisson homomorphism on (" + a->alphabet().format(x) + ", " + a->alphabet().format(y) + ")");
    }
  }
  return std::move(em.map);
}

Report check_thm59(const PoissonHopfGaloisStructure& ph, const Envelope& u) {
  const PresentationPtr& a = u.source().algebra();
  if (ph.poisson.algebra() != a || ph.hg.alg != a) throw InputError("envelope built over a different algebra");
  Report report;
  const TensorSpace target = triple_space(u);
  EnvelopeMap um = envelope_map(
      u, target, [&](const Word& w) { return alpha3(u, ph.hg.mu.apply(w)); },
      [&](const Word& w) { return xi(u, ph.hg.mu.apply(w)); }, "U(mu)", "Theorem 5.9 Eq (5.16)");
  report.append(um.relations);

  bool all_hold = true;
  bool limited = false;
  for (const Word& w : u.basis()) {
    const std::string name = a->alphabet().format(w);
    const std::string input = "beta(" + name + ") + alpha(" + name + "_(1)) beta(" + name + "_(2)) alpha(" + name + "_(3))";
    try {
      Element value = u.beta(w);
      const Tensor mw = ph.hg.mu.apply(w);
      for (const auto& [k, c] : mw.terms()) value += (u.alpha(k[0]) * u.beta(k[1]) * u.alpha(k[2])).scaled(c);
      if (value.is_zero()) {
        report.pass("condition (5.17)", "Theorem 5.9 Eq (5.17)", {name}, "condition (5.17) holds");
      } else {
        all_hold = false;
        report.fail("condition (5.17)", "Theorem 5.9 Eq (5.17)", {name}, input, value.to_string(), "condition (5.17) fails");
      }
    } catch (const CapExceeded& e) {
      all_hold = false;
      limited = true;
      report.fail("condition (5.17)", "Theorem 5.9 Eq (5.17)", {name}, input, "", std::string("cap-limited: ") + e.what());
    }
  }
  const std::string verdict = limited ? "undecided at the cap" : all_hold ? "U(A) is Hopf-Galois" : "U(A) is not Hopf-Galois";
  if (all_hold)
    report.pass("Hopf-Galois verdict", "Theorem 5.9", {}, verdict);
  else
    report.fail("Hopf-Galois verdict", "Theorem 5.9", {}, "U(" + a->name() + ")", "", verdict);
  return report;
}

}  // namespace hgalg
