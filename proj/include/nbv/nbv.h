#ifndef NBV_H
#define NBV_H

/* C interface to the exact Bethe-vector verification library. All inputs
 * and outputs are JSON strings; rationals travel as "p/q" strings. Handles
 * are opaque and must be released with the matching _free call. Functions
 * return NBV_OK on success; on any other status nbv_last_error() carries a
 * message for the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#define NBV_API __declspec(dllexport)
#else
#define NBV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nbv_status {
  NBV_OK = 0,
  NBV_ERR_INVALID_CONFIG = 1,
  NBV_ERR_BUDGET = 2,
  NBV_ERR_POLE = 3,
  NBV_ERR_RESAMPLE = 4,
  NBV_ERR_INTERNAL = 5
} nbv_status;

typedef struct nbv_report nbv_report;

NBV_API const char* nbv_version(void);

/* Thread-local message for the most recent failing call; never NULL. */
NBV_API const char* nbv_last_error(void);

/* Runs one named identity check described by a JSON object (fields: check,
 * n, m, xi, lambda, x, trials, seed, budget, inject_sign_flip). */
NBV_API nbv_status nbv_run_check_json(const char* spec_json, nbv_report** out);

/* Runs a sweep config: {seed, trials, fail_fast, budget, checks:[...]}. */
NBV_API nbv_status nbv_run_sweep_json(const char* config_json, nbv_report** out);

/* Serialized report; owned by the report handle. Identical config + seed
 * produce byte-identical text. */
NBV_API const char* nbv_report_json(const nbv_report* report);

/* 1 when every trial of every check passed, else 0. */
NBV_API int nbv_report_passed(const nbv_report* report);

NBV_API void nbv_report_free(nbv_report* report);

/* Expands one Bethe vector in the normal-ordered basis and returns
 * {"terms": {"<monomial>": "<p/q>", ...}}. Problem JSON fields: n, xi,
 * x, lambda, t (array of arrays of rationals), and optional
 * formula: "direct" (default) | "splitting" | "uprop" | "mainth" with
 * optional m. The returned string is released with nbv_string_free. */
NBV_API nbv_status nbv_bethe_eval_json(const char* problem_json, char** out_json);

NBV_API void nbv_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NBV_H */
