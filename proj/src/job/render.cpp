// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "hgalg/job.hpp"

namespace hgalg {

namespace {

std::size_t count_entries(const JobOutcome& o, bool passed) {
  std::size_t n = 0;
  for (const auto& c : o.commands)
    for (const auto& e : c.report.entries()) n += e.passed == passed ? 1 : 0;
  return n;
}

}  // namespace

std::string render_json(const JobOutcome& outcome) {
  using ojson = nlohmann::ordered_json;
  ojson doc = ojson::array();
  for (const CommandOutcome& c : outcome.commands) {
    for (const ReportEntry& e : c.report.entries()) {
      ojson j;
      j["command"] = c.command;
      j["check"] = e.check;
      j["anchor"] = e.anchor;
      j["status"] = e.passed ? "pass" : "fail";
      j["generators"] = e.generators;
      if (e.witness) j["witness"] = {{"input", e.witness->input}, {"difference", e.witness->difference}};
      if (!e.detail.empty()) j["detail"] = e.detail;
      doc.push_back(std::move(j));
    }
  }
  ojson results = ojson::array();
  ojson commands = ojson::array();
  for (const CommandOutcome& c : outcome.commands) {
    commands.push_back({{"command", c.command}, {"status", c.report.passed() ? "pass" : "fail"},
                        {"checks", c.report.entries().size()}, {"failed", c.report.failures()}});
    for (const auto& [k, v] : c.results) results.push_back({{"command", c.command}, {"name", k}, {"value", v}});
  }
  ojson summary;
  summary["job"] = outcome.job;
  summary["field"] = outcome.field;
  summary["checks"] = count_entries(outcome, true) + count_entries(outcome, false);
  summary["passed"] = count_entries(outcome, true);
  summary["failed"] = count_entries(outcome, false);
  summary["status"] = outcome.passed() ? "pass" : "fail";
  summary["commands"] = std::move(commands);
  summary["results"] = std::move(results);
  doc.push_back({{"summary", std::move(summary)}});
  return doc.dump(2) + "\n";
}

std::string render_text(const JobOutcome& outcome) {
  std::ostringstream out;
  out << "job " << outcome.job << " over " << outcome.field << "\n";
  for (const CommandOutcome& c : outcome.commands) {
    out << "\n== " << c.command << "\n";
    for (const ReportEntry& e : c.report.entries()) {
      out << (e.passed ? "PASS  " : "FAIL  ") << e.check;
      if (!e.generators.empty()) {
        out << " [";
        for (std::size_t i = 0; i < e.generators.size(); ++i) out << (i ? ", " : "") << e.generators[i];
        out << "]";
      }
      out << "  (" << e.anchor << ")\n";
      if (!e.detail.empty()) out << "      " << e.detail << "\n";
      if (e.witness) {
        out << "      input: " << e.witness->input << "\n";
        out << "      difference: " << e.witness->difference << "\n";
      }
    }
    if (!c.results.empty()) {
      out << "-- results\n";
      for (const auto& [k, v] : c.results) out << "   " << k << " = " << v << "\n";
    }
    out << "-- " << c.command << ": " << c.report.entries().size() << " checks, " << c.report.failures() << " failed\n";
  }
  const std::size_t passed = count_entries(outcome, true), failed = count_entries(outcome, false);
  out << "\nsummary: " << passed + failed << " checks, " << passed << " passed, " << failed << " failed: "
      << (outcome.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace hgalg
