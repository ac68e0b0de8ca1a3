// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hgalg/report.hpp"

namespace hgalg {

/// A parsed job document. Syntax, top-level keys and the command list are
/// validated on parse; the structure blocks are validated when run.
struct Job {
  nlohmann::json doc;
  std::string name;
  std::vector<std::string> commands;
  std::optional<std::size_t> cap;  // overrides every cap in the document
};

/// Throws InputError with a line:column for syntax errors and a field path for
/// schema violations.
Job parse_job(std::string_view text);
Job load_job_file(const std::string& path);

struct CommandOutcome {
  std::string command;
  Report report;
  /// Constructed objects and verdicts, in construction order.
  std::vector<std::pair<std::string, std::string>> results;
};

struct JobOutcome {
  std::string job;
  std::string field;
  std::vector<CommandOutcome> commands;
  bool passed() const;
};

/// Runs every command in order. InputError and CapExceeded propagate.
JobOutcome run_job(const Job& job);

std::string render_json(const JobOutcome& outcome);
std::string render_text(const JobOutcome& outcome);

const std::vector<std::string>& known_commands();

struct Builtin {
  std::string name;
  std::string anchor;
  std::string json;
};
const std::vector<Builtin>& builtins();
const Builtin* find_builtin(std::string_view name);

}  // namespace hgalg
