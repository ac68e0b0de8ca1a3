// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgalg/tensor.hpp"

namespace hgalg {

struct Witness {
  std::string input;
  std::string difference;
};

struct ReportEntry {
  std::string check;
  std::string anchor;
  bool passed = true;
  std::vector<std::string> generators;
  std::optional<Witness> witness;
  /// Free-form verdict or explanation, empty for plain equality checks.
  std::string detail;
};

/// Ordered list of check outcomes. Passes iff every entry passes.
class Report {
 public:
  void add(ReportEntry e) { entries_.push_back(std::move(e)); }
  void append(const Report& other);

  /// Records lhs == rhs, attaching lhs - rhs as witness on failure.
  bool compare(std::string check, std::string anchor, std::vector<std::string> generators, std::string input,
               const Tensor& lhs, const Tensor& rhs);
  bool compare(std::string check, std::string anchor, std::vector<std::string> generators, std::string input,
               const Element& lhs, const Element& rhs);
  void pass(std::string check, std::string anchor, std::vector<std::string> generators, std::string detail = {});
  void fail(std::string check, std::string anchor, std::vector<std::string> generators, std::string input,
            std::string difference, std::string detail = {});

  const std::vector<ReportEntry>& entries() const { return entries_; }
  bool passed() const;
  std::size_t failures() const;
  /// First failing entry, if any.
  const ReportEntry* first_failure() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace hgalg
