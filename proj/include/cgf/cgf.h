#ifndef CGF_CGF_H
#define CGF_CGF_H

/* C interface to the cut-generating function library.
 * Functions are opaque handles; rationals are "p/q" strings; structured results are JSON strings.
 * Strings returned through char** must be released with cgf_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CGF_API __declspec(dllexport)
#else
#define CGF_API __attribute__((visibility("default")))
#endif

typedef struct cgf_function cgf_function;

typedef enum cgf_status {
  CGF_OK = 0,
  CGF_ERR_NULL = 1,             /* a required pointer was null */
  CGF_ERR_INVALID_ARGUMENT = 2, /* bad input data or parameters */
  CGF_ERR_UNSUPPORTED = 3,      /* input outside the supported cases */
  CGF_ERR_UNSOURCED = 4,        /* compendium entry without data */
  CGF_ERR_IO = 5,               /* file could not be read */
  CGF_ERR_INTERNAL = 6
} cgf_status;

CGF_API const char* cgf_version(void);
CGF_API const char* cgf_status_name(cgf_status s);
/* Message of the last failing call on this thread. */
CGF_API const char* cgf_last_error(void);
CGF_API void cgf_string_free(char* s);
CGF_API void cgf_strings_free(char** s, size_t n);

/* Construction. */
CGF_API cgf_status cgf_function_from_json(const char* json, cgf_function** out);
CGF_API cgf_status cgf_function_from_file(const char* path, cgf_function** out);
/* params_json: object of name -> "p/q", or null for defaults. */
CGF_API cgf_status cgf_compendium(const char* name, const char* params_json, cgf_function** out);
CGF_API cgf_status cgf_compendium_list(char** out_json);
CGF_API cgf_status cgf_random(int xgrid, int ygrid, const char* continuous_proba, int symmetry, uint64_t seed,
                              cgf_function** out);
CGF_API void cgf_function_free(cgf_function* fn);

/* Inspection. */
CGF_API int cgf_function_is_discrete(const cgf_function* fn);
CGF_API cgf_status cgf_function_to_json(const cgf_function* fn, char** out_json);
/* side: 0 value, 1 right limit, -1 left limit. */
CGF_API cgf_status cgf_eval(const cgf_function* fn, const char* x, int side, char** out_value);
/* {"value","right","left","slope"?,"intercept"?} */
CGF_API cgf_status cgf_describe_point(const cgf_function* fn, const char* x, char** out_json);
/* Summary: breakpoints, limits, slopes, continuity. */
CGF_API cgf_status cgf_summary(const cgf_function* fn, char** out_json);

/* Tests. f may be null. */
CGF_API cgf_status cgf_minimality(const cgf_function* fn, const char* f, int fail_fast, int* is_minimal,
                                  char** out_json);
CGF_API cgf_status cgf_extremality(const cgf_function* fn, const char* f, int* is_extreme, char** out_json);
CGF_API cgf_status cgf_covered(const cgf_function* fn, char** out_json);
CGF_API cgf_status cgf_additive_faces(const cgf_function* fn, char** out_json);
CGF_API cgf_status cgf_merit(const cgf_function* fn, char** out_value);

/* Transformations. oversampling and order: 0 means absent. */
CGF_API cgf_status cgf_restrict(const cgf_function* fn, const char* f, long oversampling, long order,
                                cgf_function** out);
CGF_API cgf_status cgf_interpolate(const cgf_function* fn, cgf_function** out);
/* kind: "automorphism" or "multiplicative_homomorphism". */
CGF_API cgf_status cgf_transform(const cgf_function* fn, const char* kind, long lambda, cgf_function** out);

/* Plotting. kind: function, 2d_cones, 2d_additive_faces, covered_steps, perturbation. */
CGF_API cgf_status cgf_plot(const cgf_function* fn, const char* kind, int size, char*** out_frames, size_t* n_frames);

#ifdef __cplusplus
}
#endif

#endif
