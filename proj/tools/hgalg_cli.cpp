// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

// Batch front end. Exit codes: 0 all checks pass, 1 some check failed,
// 2 input, usage or cap errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgalg/hgalg.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

int error(const std::string& what) {
  std::cerr << "hgalg: " << what << "\n";
  return kExitError;
}

// "convert" takes the conversion direction as the next word.
std::vector<std::string> join_commands(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] == "convert" && i + 1 < words.size()) {
      out.push_back("convert " + words[i + 1]);
      ++i;
    } else {
      out.push_back(words[i]);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois and Poisson structure checker"};
  app.set_version_flag("--version", std::string(hgalg_version()));
  std::string input, builtin, report_path, format = "json";
  std::size_t cap = 0;
  bool list = false;
  std::vector<std::string> words;
  app.add_option("--input", input, "job file (JSON)");
  app.add_option("--builtin", builtin, "bundled job name");
  app.add_option("--report", report_path, "write the report here instead of stdout");
  app.add_option("--cap", cap, "degree cap for every normal form in the job")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--list-builtins", list, "print bundled jobs and exit");
  app.add_option("commands", words, "commands to run instead of the job's own list");
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (list) {
    for (std::size_t i = 0; i < hgalg_builtin_count(); ++i)
      std::cout << hgalg_builtin_name(i) << "\t" << hgalg_builtin_anchor(i) << "\n";
    return kExitPass;
  }
  if (input.empty() == builtin.empty()) return error("give exactly one of --input and --builtin");
  if (cap == 0) {
    if (const char* env = std::getenv("HGALG_CAP")) {
      try {
        cap = std::stoul(env);
      } catch (const std::exception&) {
        return error(std::string("HGALG_CAP is not a number: ") + env);
      }
    }
  }

  hgalg_job* job = nullptr;
  hgalg_status st = input.empty() ? hgalg_job_from_builtin(builtin.c_str(), &job) : hgalg_job_from_file(input.c_str(), &job);
  if (st != HGALG_OK) return error(hgalg_last_error());
  if (cap > 0) hgalg_job_set_cap(job, cap);
  if (!words.empty()) {
    const std::vector<std::string> commands = join_commands(words);
    std::vector<const char*> ptrs;
    for (const auto& c : commands) ptrs.push_back(c.c_str());
    if (hgalg_job_set_commands(job, ptrs.data(), ptrs.size()) != HGALG_OK) {
      const std::string what = hgalg_last_error();
      hgalg_job_free(job);
      return error(what);
    }
  }

  hgalg_report* report = nullptr;
  st = hgalg_job_run(job, &report);
  hgalg_job_free(job);
  if (st != HGALG_OK && st != HGALG_CHECK_FAILED) {
    std::string what = hgalg_last_error();
    if (st == HGALG_CAP_EXCEEDED) what += " (raise --cap)";
    return error(what);
  }
  const std::string text = format == "json" ? hgalg_report_json(report) : hgalg_report_text(report);
  hgalg_report_free(report);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) return error("cannot write report to '" + report_path + "'");
    out << text;
  }
  return st == HGALG_OK ? kExitPass : kExitFail;
}
