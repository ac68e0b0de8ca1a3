// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/tensor.hpp"

#include "hgalg/errors.hpp"

namespace hgalg {

TensorSpace alternating_space(const PresentationPtr& alg, std::size_t rank) {
  TensorSpace s;
  for (std::size_t i = 0; i < rank; ++i) s.push_back(Factor{alg, i % 2 == 1});
  return s;
}

TensorSpace plain_space(const PresentationPtr& alg, std::size_t rank) { return TensorSpace(rank, Factor{alg, false}); }

void accumulate_product(TensorTerms& target, const std::vector<Terms>& factors, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& f : factors)
    if (f.empty()) return;
  WordTuple key(factors.size());
  std::vector<Terms::const_iterator> it(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) it[i] = factors[i].begin();
  while (true) {
    Scalar coeff = c;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      key[i] = it[i]->first;
      coeff *= it[i]->second;
    }
    if (!coeff.is_zero()) {
      auto [pos, inserted] = target.try_emplace(key, coeff);
      if (!inserted) {
        pos->second += coeff;
        if (pos->second.is_zero()) target.erase(pos);
      }
    }
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++it[i] != factors[i].end()) break;
      it[i] = factors[i].begin();
      if (i == 0) return;
    }
    if (factors.empty()) return;
  }
}

Tensor::Tensor(TensorSpace space, Field f) : space_(std::move(space)), field_(f) {
  for (const auto& fac : space_) {
    if (!fac.alg) throw InputError("tensor factor without algebra");
    if (!(fac.alg->field() == f)) throw InputError("tensor factors over different fields");
  }
}

Tensor Tensor::unit(TensorSpace space, Field f) { return scalar(std::move(space), Scalar::one(f)); }

Tensor Tensor::scalar(TensorSpace space, const Scalar& c) {
  Tensor t(std::move(space), c.field());
  t.add_normal(WordTuple(t.rank()), c);
  return t;
}

Tensor Tensor::pure(TensorSpace space, const std::vector<Terms>& factors, const Scalar& c) {
  Tensor t(std::move(space), c.field());
  if (factors.size() != t.rank()) throw InputError("tensor arity mismatch");
  std::vector<Terms> normal;
  for (std::size_t i = 0; i < factors.size(); ++i) normal.push_back(t.space_[i].alg->normal_form(factors[i]));
  accumulate_product(t.terms_, normal, c);
  return t;
}

Tensor Tensor::from_element(const Element& e, bool op) {
  Tensor t(TensorSpace{Factor{e.presentation(), op}}, e.field());
  for (const auto& [w, c] : e.terms()) t.add_normal(WordTuple{w}, c);
  return t;
}

void Tensor::add_normal(const WordTuple& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Tensor::check_compatible(const Tensor& o) const {
  if (!(field_ == o.field_) || space_ != o.space_) throw InputError("tensor signature mismatch");
}

Tensor& Tensor::operator+=(const Tensor& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_normal(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_normal(k, -c);
  return *this;
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor t(space_, field_);
  if (c.is_zero()) return t;
  for (const auto& [k, d] : terms_) t.terms_.emplace(k, d * c);
  return t;
}

Tensor Tensor::operator*(const Tensor& o) const {
  check_compatible(o);
  Tensor t(space_, field_);
  std::vector<Terms> factors(rank());
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      for (std::size_t i = 0; i < rank(); ++i) {
        const Word w = space_[i].op ? concat(kb[i], ka[i]) : concat(ka[i], kb[i]);
        factors[i] = space_[i].alg->normal_form(w);
      }
      accumulate_product(t.terms_, factors, ca * cb);
    }
  }
  return t;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.field_ == b.field_ && a.space_ == b.space_ && a.terms_ == b.terms_;
}

Tensor Tensor::outer(const Tensor& o) const {
  if (!(field_ == o.field_)) throw InputError("tensor factors over different fields");
  TensorSpace s = space_;
  s.insert(s.end(), o.space_.begin(), o.space_.end());
  Tensor t(std::move(s), field_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      WordTuple k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      t.add_normal(k, ca * cb);
    }
  }
  return t;
}

Tensor Tensor::contract(std::size_t i, bool op) const {
  if (i + 1 >= rank()) throw InputError("contract index out of range");
  if (space_[i].alg != space_[i + 1].alg) throw InputError("contracting factors of different algebras");
  TensorSpace s;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (j == i + 1) continue;
    s.push_back(j == i ? Factor{space_[i].alg, op} : space_[j]);
  }
  Tensor t(std::move(s), field_);
  std::vector<Terms> factors(t.rank());
  for (const auto& [k, c] : terms_) {
    for (std::size_t j = 0, out = 0; j < rank(); ++j) {
      if (j == i + 1) continue;
      factors[out++] = j == i ? space_[i].alg->normal_form(concat(k[i], k[i + 1])) : Terms{{k[j], Scalar::one(field_)}};
    }
    accumulate_product(t.terms_, factors, c);
  }
  return t;
}

Tensor Tensor::expand(std::size_t i, const TensorSpace& replacement, const std::function<Tensor(const Word&)>& f) const {
  if (i >= rank()) throw InputError("expand index out of range");
  TensorSpace s(space_.begin(), space_.begin() + i);
  s.insert(s.end(), replacement.begin(), replacement.end());
  s.insert(s.end(), space_.begin() + i + 1, space_.end());
  Tensor t(std::move(s), field_);
  for (const auto& [k, c] : terms_) {
    const Tensor img = f(k[i]);
    if (img.space_ != replacement) throw InputError("expansion image on the wrong tensor space");
    for (const auto& [ki, ci] : img.terms_) {
      WordTuple key(k.begin(), k.begin() + i);
      key.insert(key.end(), ki.begin(), ki.end());
      key.insert(key.end(), k.begin() + i + 1, k.end());
      t.add_normal(key, c * ci);
    }
  }
  return t;
}

Tensor Tensor::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != rank()) throw InputError("permutation arity mismatch");
  TensorSpace s;
  for (std::size_t j : order) s.push_back(space_.at(j));
  Tensor t(std::move(s), field_);
  for (const auto& [k, c] : terms_) {
    WordTuple key;
    for (std::size_t j : order) key.push_back(k[j]);
    t.add_normal(key, c);
  }
  return t;
}

Tensor Tensor::retagged(const TensorSpace& space) const {
  if (space.size() != rank()) throw InputError("retag arity mismatch");
  for (std::size_t i = 0; i < rank(); ++i)
    if (space[i].alg != space_[i].alg) throw InputError("retag changes a factor algebra");
  Tensor t(space, field_);
  t.terms_ = terms_;
  return t;
}

Element Tensor::as_element() const {
  if (rank() != 1) throw InputError("tensor of rank " + std::to_string(rank()) + " is not an element");
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k[0], c);
  return Element(space_[0].alg, t);
}

Scalar Tensor::as_scalar() const {
  if (rank() != 0) throw InputError("tensor of rank " + std::to_string(rank()) + " is not a scalar");
  if (terms_.empty()) return Scalar::zero(field_);
  return terms_.begin()->second;
}

std::string Tensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string coeff = c.to_string();
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k.empty()) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += coeff + "*";
    std::string body;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) body += " ⊗ ";
      body += space_[i].alg->format(k[i]);
    }
    out += "(" + body + ")";
  }
  return out;
}

}  // namespace hgalg
