/* C API for the meridian-surface geometry library.
 *
 * All entry points are thread-compatible: distinct handles may be used from
 * distinct threads; a single handle must not be mutated concurrently (handles
 * are immutable after creation, so read-only use is safe). Error messages for
 * the last failing call on the current thread are available via
 * meridian_last_error().
 */
#ifndef MERIDIAN_C_API_H
#define MERIDIAN_C_API_H

#include <stddef.h>

#if defined(_WIN32)
#define MERIDIAN_API __declspec(dllexport)
#else
#define MERIDIAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MERIDIAN_OK = 0,
  MERIDIAN_ERR_VERIFY_FAILED = 1, /* one or more verify groups failed */
  MERIDIAN_ERR_CONFIG = 2,        /* config parse/validation error */
  MERIDIAN_ERR_EVAL = 3,          /* evaluation failed (message names the point) */
  MERIDIAN_ERR_NOT_MERIDIAN = 4,  /* operation requires a meridian surface */
  MERIDIAN_ERR_BUFFER = 5,        /* output buffer too small */
  MERIDIAN_ERR_INVALID_ARG = 6    /* null pointer or bad argument */
} meridian_status;

/* Opaque immutable surface handle. */
typedef struct meridian_surface meridian_surface;

/* Full per-point invariant report. */
typedef struct {
  double u, v;
  double E, F, G;
  double K, K_N, H_norm;
  double umb_dev, iso_dev, hH2_minus_3K;
  double sp_residual;
  double gauss_res, ricci_res, codazzi_res;
} meridian_point_report;

MERIDIAN_API const char* meridian_version(void);

/* Message for the last failing call on this thread; never NULL. */
MERIDIAN_API const char* meridian_last_error(void);

/* Builds a surface from the "surface"/"policy" sections of a config JSON
 * document. The handle must be released with meridian_surface_destroy. */
MERIDIAN_API meridian_status meridian_surface_create(const char* config_json,
                                                     meridian_surface** out);
MERIDIAN_API void meridian_surface_destroy(meridian_surface* surface);

MERIDIAN_API meridian_status meridian_eval_point(const meridian_surface* surface, double u,
                                                 double v, meridian_point_report* out);

/* Grid analysis driven by a full config document. format is "csv" or "json";
 * the report is written to out_path. Deterministic bytes for fixed inputs. */
MERIDIAN_API meridian_status meridian_analyze(const char* config_json, const char* out_path,
                                              const char* format);

/* Classification document (JSON text) for a meridian config. On
 * MERIDIAN_ERR_BUFFER, *needed carries the required capacity. */
MERIDIAN_API meridian_status meridian_classify(const char* config_json, char* buf,
                                               size_t capacity, size_t* needed);

/* Runs the built-in verification suite, printing one PASS/FAIL line per group
 * to stdout. filter (may be NULL) selects groups by substring. */
MERIDIAN_API meridian_status meridian_verify(const char* filter);

#ifdef __cplusplus
}
#endif

#endif
