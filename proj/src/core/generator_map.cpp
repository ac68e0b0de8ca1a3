// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/generator_map.hpp"

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

std::string map_label(const std::string& name) { return name.empty() ? "map" : name; }

// Inverse of a single-term tensor, factor by factor.
std::optional<Tensor> monomial_inverse(const Tensor& t) {
  if (t.terms().size() != 1) return std::nullopt;
  const auto& [key, c] = *t.terms().begin();
  Tensor out = Tensor::scalar(TensorSpace{}, c.inverse());
  for (std::size_t i = 0; i < t.rank(); ++i) {
    const Factor& f = t.space()[i];
    auto inv = inverse_of(Element::word(f.alg, key[i]));
    if (!inv) return std::nullopt;
    out = out.outer(Tensor::from_element(*inv, f.op));
  }
  return out;
}

}  // namespace

GeneratorMap::GeneratorMap(PresentationPtr source, TensorSpace target, std::map<Letter, Tensor> images, std::string name)
    : source_(std::move(source)),
      target_(std::move(target)),
      supplied_(std::move(images)),
      name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& [l, img] : supplied_) {
    if (!source_->alphabet().has_letter(l)) throw InputError("image given for unknown letter in " + map_label(name_));
    if (img.space() != target_ || !(img.field() == source_->field()))
      throw InputError("image of " + source_->alphabet().letter_name(l) + " under " + map_label(name_) +
                       " lies in the wrong tensor space");
  }
  derive_inverses();
}

GeneratorMap GeneratorMap::identity(const PresentationPtr& p) {
  std::map<Letter, Tensor> images;
  for (Letter l : p->alphabet().letters()) images.emplace(l, Tensor::from_element(Element::word(p, Word{l})));
  return GeneratorMap(p, TensorSpace{Factor{p, false}}, std::move(images), "id");
}

void GeneratorMap::derive_inverses() {
  images_ = supplied_;
  const Alphabet& alpha = source_->alphabet();
  const Tensor unit = Tensor::unit(target_, source_->field());
  for (std::size_t g = 0; g < alpha.generator_count(); ++g) {
    if (!alpha.generators()[g].invertible) continue;
    const Letter a = make_letter(g, false);
    const Letter b = make_letter(g, true);
    auto ia = images_.find(a);
    if (ia == images_.end()) continue;
    if (!images_.count(b)) {
      std::optional<Tensor> inv = monomial_inverse(ia->second);
      if (!inv && target_.size() == 1) {
        if (auto e = inverse_of(ia->second.as_element())) inv = Tensor::from_element(*e, target_[0].op);
      }
      if (!inv)
        throw InputError("cannot derive the image of " + alpha.letter_name(b) + " under " + map_label(name_) +
                         "; image of " + alpha.letter_name(a) + " is not invertible by inspection");
      images_.emplace(b, inv->retagged(target_));
    }
    const Tensor& x = images_.at(a);
    const Tensor& y = images_.at(b);
    if (x * y != unit || y * x != unit)
      throw InputError("images of " + alpha.letter_name(a) + " and " + alpha.letter_name(b) + " under " +
                       map_label(name_) + " are not mutually inverse");
  }
}

const Tensor& GeneratorMap::image(Letter l) const {
  auto it = images_.find(l);
  if (it == images_.end())
    throw InputError("no image for generator " + source_->alphabet().letter_name(l) + " under " + map_label(name_));
  return it->second;
}

Tensor GeneratorMap::apply(const Word& w) const {
  if (w.empty()) return Tensor::unit(target_, field());
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->values.find(w);
    if (it != cache_->values.end()) return it->second;
  }
  const Word prefix(w.begin(), w.end() - 1);
  Tensor r = apply(prefix) * image(w.back());
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(w, r);
  return r;
}

Tensor GeneratorMap::apply(const Terms& t) const {
  Tensor r(target_, field());
  for (const auto& [w, c] : t) r += apply(w).scaled(c);
  return r;
}

Tensor GeneratorMap::apply(const Element& e) const {
  if (e.presentation() != source_) throw InputError("element outside the source of " + map_label(name_));
  return apply(e.terms());
}

GeneratorMap GeneratorMap::with_image(Letter l, const Tensor& img) const {
  std::map<Letter, Tensor> s = supplied_;
  s.erase(l);
  s.emplace(l, img);
  return GeneratorMap(source_, target_, std::move(s), name_);
}

Report check_map_respects_relations(const GeneratorMap& f, const std::string& anchor) {
  Report report;
  const Presentation& p = *f.source();
  for (const Rule& r : p.rules()) {
    const Tensor lhs = f.apply(r.lhs);
    const Tensor rhs = f.apply(r.rhs);
    report.compare("relation preserved", anchor, {r.label}, r.label, lhs, rhs);
  }
  for (const auto& v : p.vanishing()) {
    const Tensor img = f.apply(v.element);
    report.compare("relation preserved", anchor, {v.label}, v.label + " = 0", img, Tensor(f.target(), f.field()));
  }
  return report;
}

TwistedDerivation::TwistedDerivation(PresentationPtr alg, std::optional<GeneratorMap> tau, std::map<Letter, Element> values,
                                     std::string name)
    : alg_(std::move(alg)), tau_(std::move(tau)), values_(std::move(values)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  if (tau_ && (tau_->source() != alg_ || tau_->target() != TensorSpace{Factor{alg_, false}}))
    throw InputError("twist of " + map_label(name_) + " must be an endomorphism");
  const Alphabet& alpha = alg_->alphabet();
  for (const auto& [l, v] : values_)
    if (v.presentation() != alg_) throw InputError("value of " + map_label(name_) + " on " + alpha.letter_name(l) + " lies elsewhere");
  for (std::size_t g = 0; g < alpha.generator_count(); ++g) {
    const Letter a = make_letter(g, false);
    if (!values_.count(a)) values_.emplace(a, Element::zero(alg_));
    if (!alpha.generators()[g].invertible) continue;
    const Letter b = make_letter(g, true);
    if (values_.count(b)) continue;
    values_.emplace(b, -(tau_of(b) * values_.at(a) * Element::word(alg_, Word{b})));
  }
}

Element TwistedDerivation::tau_of(Letter l) const {
  if (!tau_) return Element::word(alg_, Word{l});
  return tau_->apply(Word{l}).as_element();
}

const Element& TwistedDerivation::value(Letter l) const {
  auto it = values_.find(l);
  if (it == values_.end()) throw InputError("no value for " + alg_->alphabet().letter_name(l) + " under " + map_label(name_));
  return it->second;
}

Element TwistedDerivation::apply(const Word& w) const {
  if (w.empty()) return Element::zero(alg_);
  if (w.size() == 1) return value(w[0]);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->values.find(w);
    if (it != cache_->values.end()) return it->second;
  }
  const Word rest(w.begin() + 1, w.end());
  Element r = tau_of(w[0]) * apply(rest) + value(w[0]) * Element(alg_, Terms{{rest, Scalar::one(alg_->field())}});
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(w, r);
  return r;
}

Element TwistedDerivation::apply(const Terms& t) const {
  Element r = Element::zero(alg_);
  for (const auto& [w, c] : t) r += apply(w).scaled(c);
  return r;
}

Report TwistedDerivation::check_relations(const std::string& anchor) const {
  Report report;
  for (const Rule& r : alg_->rules())
    report.compare("derivation respects relation", anchor, {r.label}, r.label, apply(r.lhs), apply(r.rhs));
  for (const auto& v : alg_->vanishing())
    report.compare("derivation respects relation", anchor, {v.label}, v.label + " = 0", apply(v.element), Element::zero(alg_));
  return report;
}

}  // namespace hgalg
