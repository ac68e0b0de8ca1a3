// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/element.hpp"

#include "hgalg/errors.hpp"

namespace hgalg {

Terms multiply_terms(const Presentation& p, const Terms& a, const Terms& b) {
  Terms raw;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) add_term(raw, concat(u, v), c * d);
  return p.normal_form(raw);
}

Element::Element(PresentationPtr p, const Terms& t) : p_(std::move(p)) {
  if (!p_) throw InputError("element without presentation");
  terms_ = p_->normal_form(t);
}

Element Element::scalar(PresentationPtr p, const Scalar& c) {
  Terms t;
  add_term(t, Word{}, c);
  return Element(std::move(p), std::move(t), Normalized{});
}

Element Element::one(PresentationPtr p) {
  const Field f = p->field();
  return scalar(std::move(p), Scalar::one(f));
}

Element Element::word(PresentationPtr p, const Word& w) {
  const Field f = p->field();
  return Element(std::move(p), Terms{{w, Scalar::one(f)}});
}

Element Element::parse(PresentationPtr p, const std::vector<std::string>& tokens) {
  const Word w = p->alphabet().parse(tokens);
  return word(std::move(p), w);
}

void Element::check_same(const Element& o) const {
  if (p_ != o.p_) throw InputError("elements of different presentations '" + p_->name() + "' and '" + o.p_->name() + "'");
}

Element Element::operator-() const { return scaled(-Scalar::one(field())); }

Element& Element::operator+=(const Element& o) {
  check_same(o);
  add_terms(terms_, o.terms_, Scalar::one(field()));
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same(o);
  add_terms(terms_, o.terms_, -Scalar::one(field()));
  return *this;
}

Element Element::operator*(const Element& o) const {
  check_same(o);
  return Element(p_, multiply_terms(*p_, terms_, o.terms_), Normalized{});
}

Element Element::scaled(const Scalar& c) const {
  Terms t;
  add_terms(t, terms_, c);
  return Element(p_, std::move(t), Normalized{});
}

std::optional<Element> inverse_of(const Element& e) {
  const PresentationPtr& p = e.presentation();
  const Field f = e.field();
  if (e.is_zero()) return std::nullopt;
  if (e.terms().size() == 1) {
    const auto& [w, c] = *e.terms().begin();
    Word inv;
    bool monomial_inverse = true;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto l = p->alphabet().inverse(*it);
      if (!l) {
        monomial_inverse = false;
        break;
      }
      inv.push_back(*l);
    }
    if (monomial_inverse) return Element(p, Terms{{inv, c.inverse()}});
  }
  if (!p->basis()) return std::nullopt;
  const auto& basis = *p->basis();
  std::vector<Terms> columns;
  columns.reserve(basis.size());
  for (const Word& b : basis) columns.push_back(multiply_terms(*p, e.terms(), Terms{{b, Scalar::one(f)}}));
  auto x = solve_linear(f, columns, Terms{{Word{}, Scalar::one(f)}});
  if (!x) return std::nullopt;
  Terms y;
  for (std::size_t i = 0; i < basis.size(); ++i) add_term(y, basis[i], (*x)[i]);
  Element candidate(p, y);
  if (!(candidate * e == Element::one(p))) return std::nullopt;
  return candidate;
}

bool operator==(const Element& a, const Element& b) { return a.p_ == b.p_ && a.terms_ == b.terms_; }

}  // namespace hgalg
