/* Copyright (C) 2026 The adiabat authors
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef ADIABAT_ADIABAT_H
#define ADIABAT_ADIABAT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ADIABAT_BUILDING_LIBRARY)
#    define ADIABAT_API __declspec(dllexport)
#  else
#    define ADIABAT_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && __GNUC__ >= 4
#  define ADIABAT_API __attribute__((visibility("default")))
#else
#  define ADIABAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adb_status {
  ADB_OK = 0,
  ADB_ERR_INVALID_ARGUMENT = 1,
  ADB_ERR_CAPACITY = 2,
  ADB_ERR_DEGENERATE = 3,
  ADB_ERR_NUMERICAL = 4,
  ADB_ERR_PARSE = 5,
  ADB_ERR_IO = 6,
  ADB_ERR_NOT_APPLICABLE = 7,
  ADB_ERR_INTERNAL = 99
} adb_status;

typedef struct adb_instance adb_instance;
typedef struct adb_config adb_config;

/* Library version, e.g. "0.1.0". Static storage. */
ADIABAT_API const char* adb_version(void);

/* Message of the last failed call on this thread; "" when none. Valid until
 * the next call on the same thread. */
ADIABAT_API const char* adb_last_error(void);
/* Symbolic name of a status ("invalid_argument", ...). Static storage. */
ADIABAT_API const char* adb_status_name(adb_status status);
/* {"error": {"code": ..., "message": ...}} for the last error on this
 * thread. Caller frees with adb_string_free. */
ADIABAT_API char* adb_last_error_json(void);

/* Frees strings returned through char** outputs. NULL is ignored. */
ADIABAT_API void adb_string_free(char* text);

/* Instances. "toy1", "toy2" or "random:n=..,k=..,p=..,seed=..". */
ADIABAT_API adb_status adb_instance_from_fixture(const char* name, adb_instance** out);
ADIABAT_API adb_status adb_instance_from_file(const char* path, adb_instance** out);
ADIABAT_API adb_status adb_instance_from_json(const char* text, adb_instance** out);
ADIABAT_API adb_status adb_instance_to_json(const adb_instance* instance, char** out);
ADIABAT_API adb_status adb_instance_set_alpha(adb_instance* instance, const char* alpha);
ADIABAT_API adb_status adb_instance_dimension(const adb_instance* instance, size_t* out);
ADIABAT_API void adb_instance_free(adb_instance* instance);

/* Minimum of E1(s) - E0(s) for the instance at its current alpha. */
ADIABAT_API adb_status adb_instance_min_gap(const adb_instance* instance, double* s_star, double* delta_min);

/* Run configuration. Defaults: grid 1001, refine 1e-10, levels 6, out "out",
 * every check, the instance's own alpha. */
ADIABAT_API adb_status adb_config_new(adb_config** out);
ADIABAT_API void adb_config_free(adb_config* config);
ADIABAT_API adb_status adb_config_set_source(adb_config* config, const char* source);
/* Comma-separated list; each entry a decimal, integer or "p/q". */
ADIABAT_API adb_status adb_config_set_alpha_list(adb_config* config, const char* list);
ADIABAT_API adb_status adb_config_set_grid(adb_config* config, int points);
ADIABAT_API adb_status adb_config_set_refine(adb_config* config, double tol);
ADIABAT_API adb_status adb_config_set_levels(adb_config* config, int levels);
ADIABAT_API adb_status adb_config_set_output_dir(adb_config* config, const char* path);
/* Comma-separated subset of: oracle, spectral, identities, lemma1, bounds,
 * overlaps, prop1, corollary1, theorem2, corollary2, definitions. */
ADIABAT_API adb_status adb_config_set_checks(adb_config* config, const char* list);
ADIABAT_API adb_status adb_config_set_window(adb_config* config, int half_points);

/* Commands. Outputs are JSON documents freed with adb_string_free. */
ADIABAT_API adb_status adb_cmd_scan(const adb_instance* instance, const adb_config* config, char** summary);
/* *passed is 1 iff every asserted check passed. */
ADIABAT_API adb_status adb_cmd_verify(const adb_instance* instance, const adb_config* config, char** summary,
                                      int* passed);
/* Instance document of a builtin fixture. */
ADIABAT_API adb_status adb_cmd_fixture(const char* name, char** document);

#ifdef __cplusplus
}
#endif

#endif /* ADIABAT_ADIABAT_H */
