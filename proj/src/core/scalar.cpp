// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/scalar.hpp"

#include <cctype>

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const mpz_class& z, std::uint32_t p) {
  mpz_class m = z % p;
  if (m < 0) m += p;
  return m.get_ui();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31)) throw InputError("field characteristic must be a prime < 2^31, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
  } else {
    r_ = residue(mpz_class(v), f.characteristic());
  }
}

Scalar::Scalar(Field f, const mpq_class& v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
    q_.canonicalize();
    return;
  }
  const std::uint32_t p = f.characteristic();
  const std::uint64_t num = residue(v.get_num(), p);
  const std::uint64_t den = residue(v.get_den(), p);
  if (den == 0) throw InputError("denominator vanishes in " + f.name());
  r_ = num * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  std::string trimmed;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty()) throw InputError("empty coefficient");
  for (char c : trimmed)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw InputError("coefficient '" + s + "' is not an exact rational p/q");
  if (trimmed.front() == '+') trimmed.erase(0, 1);
  mpq_class q;
  try {
    const auto slash = trimmed.find('/');
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(trimmed, 10));
    } else {
      mpz_class num(trimmed.substr(0, slash), 10);
      mpz_class den(trimmed.substr(slash + 1), 10);
      if (den == 0) throw InputError("coefficient '" + s + "' has zero denominator");
      q = mpq_class(num, den);
    }
  } catch (const std::invalid_argument&) {
    throw InputError("coefficient '" + s + "' is not an exact rational p/q");
  }
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw InputError("mixed coefficient fields " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.q_ = -q_;
  } else {
    r.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ = (r_ + o.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = r_ * o.r_ % field_.characteristic();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero scalar");
  Scalar r = *this;
  if (field_.is_rational()) {
    r.q_ = 1 / q_;
  } else {
    const std::uint32_t p = field_.characteristic();
    r.r_ = pow_mod(r_, p - 2, p);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace hgalg
