/* Copyright 2026 The hgalg Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libhgalg. All handles are opaque. Strings returned by the
 * library are owned by it: report strings live as long as the report,
 * builtin metadata and the version live forever, and hgalg_last_error is
 * valid until the next call on the same thread.
 */

#ifndef HGALG_HGALG_H
#define HGALG_HGALG_H

#include <stddef.h>

#if defined(HGALG_BUILDING)
#define HGALG_API __attribute__((visibility("default")))
#else
#define HGALG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hgalg_job hgalg_job;
typedef struct hgalg_report hgalg_report;

typedef enum hgalg_status {
  HGALG_OK = 0,
  HGALG_CHECK_FAILED = 1,  /* report produced, some check failed */
  HGALG_INPUT_ERROR = 2,   /* malformed job, unknown symbol, broken law on user data */
  HGALG_CAP_EXCEEDED = 3,  /* a normal form needed a word longer than the cap */
  HGALG_INTERNAL = 4
} hgalg_status;

HGALG_API hgalg_status hgalg_job_from_json(const char* text, hgalg_job** out);
HGALG_API hgalg_status hgalg_job_from_file(const char* path, hgalg_job** out);
HGALG_API hgalg_status hgalg_job_from_builtin(const char* name, hgalg_job** out);
/* Overrides every degree cap in the job; 0 restores the job's own caps. */
HGALG_API hgalg_status hgalg_job_set_cap(hgalg_job* job, size_t cap);
/* Replaces the job's command list. Names are those of the job schema, e.g.
 * "check-hopf-galois" or "convert hopf-to-galois". */
HGALG_API hgalg_status hgalg_job_set_commands(hgalg_job* job, const char* const* commands, size_t count);
HGALG_API void hgalg_job_free(hgalg_job* job);

/* On HGALG_OK or HGALG_CHECK_FAILED *out holds a report; otherwise it is NULL. */
HGALG_API hgalg_status hgalg_job_run(const hgalg_job* job, hgalg_report** out);

HGALG_API const char* hgalg_report_json(const hgalg_report* report);
HGALG_API const char* hgalg_report_text(const hgalg_report* report);
HGALG_API int hgalg_report_passed(const hgalg_report* report);
HGALG_API void hgalg_report_free(hgalg_report* report);

HGALG_API const char* hgalg_last_error(void);

HGALG_API size_t hgalg_builtin_count(void);
/* NULL when index is out of range. */
HGALG_API const char* hgalg_builtin_name(size_t index);
HGALG_API const char* hgalg_builtin_anchor(size_t index);

HGALG_API const char* hgalg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HGALG_HGALG_H */
