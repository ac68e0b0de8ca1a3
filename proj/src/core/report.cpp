// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/report.hpp"

#include <algorithm>

namespace hgalg {

void Report::append(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool Report::compare(std::string check, std::string anchor, std::vector<std::string> generators, std::string input,
                     const Tensor& lhs, const Tensor& rhs) {
  ReportEntry e{std::move(check), std::move(anchor), true, std::move(generators), std::nullopt, {}};
  const Tensor diff = lhs - rhs;
  if (!diff.is_zero()) {
    e.passed = false;
    e.witness = Witness{std::move(input), diff.to_string()};
  }
  const bool ok = e.passed;
  entries_.push_back(std::move(e));
  return ok;
}

bool Report::compare(std::string check, std::string anchor, std::vector<std::string> generators, std::string input,
                     const Element& lhs, const Element& rhs) {
  return compare(std::move(check), std::move(anchor), std::move(generators), std::move(input), Tensor::from_element(lhs),
                 Tensor::from_element(rhs));
}

void Report::pass(std::string check, std::string anchor, std::vector<std::string> generators, std::string detail) {
  entries_.push_back(ReportEntry{std::move(check), std::move(anchor), true, std::move(generators), std::nullopt, std::move(detail)});
}

void Report::fail(std::string check, std::string anchor, std::vector<std::string> generators, std::string input,
                  std::string difference, std::string detail) {
  entries_.push_back(ReportEntry{std::move(check), std::move(anchor), false, std::move(generators),
                                 Witness{std::move(input), std::move(difference)}, std::move(detail)});
}

bool Report::passed() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return !e.passed; }));
}

const ReportEntry* Report::first_failure() const {
  for (const auto& e : entries_)
    if (!e.passed) return &e;
  return nullptr;
}

}  // namespace hgalg
