// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/hgalg.h"

#include <algorithm>
#include <new>
#include <string>

#include "hgalg/errors.hpp"
#include "hgalg/job.hpp"

struct hgalg_job {
  hgalg::Job job;
};

struct hgalg_report {
  std::string json;
  std::string text;
  bool passed = false;
};

namespace {

thread_local std::string last_error;

template <typename F>
hgalg_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const hgalg::InputError& e) {
    last_error = e.what();
    return HGALG_INPUT_ERROR;
  } catch (const hgalg::CapExceeded& e) {
    last_error = e.what();
    return HGALG_CAP_EXCEEDED;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HGALG_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return HGALG_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return HGALG_INTERNAL;
  }
}

hgalg_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return HGALG_INPUT_ERROR;
}

hgalg_status make_job(hgalg::Job job, hgalg_job** out) {
  *out = new hgalg_job{std::move(job)};
  return HGALG_OK;
}

}  // namespace

extern "C" {

hgalg_status hgalg_job_from_json(const char* text, hgalg_job** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!text) return null_argument("text");
  return guarded([&] { return make_job(hgalg::parse_job(text), out); });
}

hgalg_status hgalg_job_from_file(const char* path, hgalg_job** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!path) return null_argument("path");
  return guarded([&] { return make_job(hgalg::load_job_file(path), out); });
}

hgalg_status hgalg_job_from_builtin(const char* name, hgalg_job** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!name) return null_argument("name");
  return guarded([&] {
    const hgalg::Builtin* b = hgalg::find_builtin(name);
    if (!b) throw hgalg::InputError(std::string("unknown builtin '") + name + "'");
    return make_job(hgalg::parse_job(b->json), out);
  });
}

hgalg_status hgalg_job_set_cap(hgalg_job* job, size_t cap) {
  if (!job) return null_argument("job");
  if (cap == 0)
    job->job.cap.reset();
  else
    job->job.cap = cap;
  last_error.clear();
  return HGALG_OK;
}

hgalg_status hgalg_job_set_commands(hgalg_job* job, const char* const* commands, size_t count) {
  if (!job) return null_argument("job");
  if (!commands && count > 0) return null_argument("commands");
  return guarded([&] {
    if (count == 0) throw hgalg::InputError("empty command list");
    std::vector<std::string> list;
    for (size_t i = 0; i < count; ++i) {
      if (!commands[i]) throw hgalg::InputError("null command name");
      const auto& known = hgalg::known_commands();
      if (std::find(known.begin(), known.end(), commands[i]) == known.end())
        throw hgalg::InputError(std::string("unknown command '") + commands[i] + "'");
      list.emplace_back(commands[i]);
    }
    job->job.commands = std::move(list);
    return HGALG_OK;
  });
}

void hgalg_job_free(hgalg_job* job) { delete job; }

hgalg_status hgalg_job_run(const hgalg_job* job, hgalg_report** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!job) return null_argument("job");
  return guarded([&] {
    const hgalg::JobOutcome outcome = hgalg::run_job(job->job);
    *out = new hgalg_report{hgalg::render_json(outcome), hgalg::render_text(outcome), outcome.passed()};
    return outcome.passed() ? HGALG_OK : HGALG_CHECK_FAILED;
  });
}

const char* hgalg_report_json(const hgalg_report* report) { return report ? report->json.c_str() : nullptr; }
const char* hgalg_report_text(const hgalg_report* report) { return report ? report->text.c_str() : nullptr; }
int hgalg_report_passed(const hgalg_report* report) { return report && report->passed ? 1 : 0; }
void hgalg_report_free(hgalg_report* report) { delete report; }

const char* hgalg_last_error(void) { return last_error.c_str(); }

size_t hgalg_builtin_count(void) { return hgalg::builtins().size(); }

const char* hgalg_builtin_name(size_t index) {
  return index < hgalg::builtins().size() ? hgalg::builtins()[index].name.c_str() : nullptr;
}

const char* hgalg_builtin_anchor(size_t index) {
  return index < hgalg::builtins().size() ? hgalg::builtins()[index].anchor.c_str() : nullptr;
}

const char* hgalg_version(void) { return "1.0.0"; }

}  // extern "C"
