// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hgalg {

/// Malformed or inconsistent input: unknown symbols, broken algebra laws on
/// user data, forbidden characteristics, schema violations.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A normal-form computation needed a word longer than the configured degree
/// cap. Never caught internally: truncation must not be silent.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& operation, std::size_t length, std::size_t cap)
      : std::runtime_error("degree cap exceeded in " + operation + ": word length " +
                           std::to_string(length) + " > cap " + std::to_string(cap)),
        length_(length),
        cap_(cap) {}

  std::size_t length() const { return length_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t length_;
  std::size_t cap_;
};

}  // namespace hgalg
