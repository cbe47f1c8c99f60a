/* SPDX-License-Identifier: Apache-2.0 */
/* C interface to the gcd chain library. All strings returned through char**
 * out-parameters are heap allocated and released with gc_string_free. */
#ifndef GCDCHAIN_H
#define GCDCHAIN_H

#include <stdint.h>

#if defined(_WIN32)
#define GC_API __declspec(dllexport)
#else
#define GC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes. */
typedef enum gc_status {
  GC_OK = 0,
  GC_ERR_USAGE = 1,
  GC_ERR_PARSE = 2,
  GC_ERR_PRECONDITION = 3,
  GC_ERR_VERIFY = 4,
  GC_ERR_INTERNAL = 5
} gc_status;

typedef struct gc_problem gc_problem;
typedef struct gc_chain gc_chain;

GC_API const char* gc_version(void);

/* Message for the last failing call on this thread; "" when none. */
GC_API const char* gc_last_error(void);

/* field_override may be NULL; otherwise "rationals" or a prime. */
GC_API gc_status gc_problem_parse(const char* json, const char* field_override, gc_problem** out);
GC_API gc_status gc_problem_load(const char* path, const char* field_override, gc_problem** out);
GC_API gc_status gc_problem_to_json(const gc_problem* problem, char** out);
GC_API void gc_problem_free(gc_problem* problem);

/* trace_out may be NULL; when given it receives the iteration log. */
GC_API gc_status gc_compute(const gc_problem* problem, gc_chain** out, char** trace_out);

GC_API gc_status gc_chain_parse(const char* json, gc_chain** out);
GC_API gc_status gc_chain_load(const char* path, gc_chain** out);
GC_API gc_status gc_chain_to_json(const gc_chain* chain, char** out);
GC_API int gc_chain_length(const gc_chain* chain);
GC_API void gc_chain_free(gc_chain* chain);

/* GC_OK when every check passes, GC_ERR_VERIFY otherwise. report_out may be
 * NULL; when given it receives one line per check. */
GC_API gc_status gc_verify(const gc_problem* problem, const gc_chain* chain, char** report_out);

/* Planted-instance campaign. primes is a comma separated list or NULL for
 * the defaults 5,7,101. summary_out is deterministic in the arguments;
 * timing_out carries wall-clock statistics. Either may be NULL. */
GC_API gc_status gc_selftest(uint64_t seed, int count, int max_deg_y, int max_e, int max_deg_p,
                             const char* primes, char** summary_out, char** timing_out);

GC_API void gc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GCDCHAIN_H */
