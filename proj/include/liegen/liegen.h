/*
 * C interface to the liegen library: nilpotent generating pairs of simple
 * Lie algebras, closure and classification, ping-pong bounds, free dense
 * and thin subgroup certificates.
 *
 * Conventions
 *   - Every function returns a liegen_status. On failure, a message for the
 *     calling thread is available from liegen_last_error().
 *   - Objects are opaque handles released with the matching *_free call.
 *   - Rationals cross the boundary as strings: "p", "p/q" or decimals such as
 *     "7.25" on input; canonical "p" / "p/q" on output.
 *   - Strings returned through char** are heap-allocated and must be
 *     released with liegen_string_free().
 *   - b-vector specs: "doubling" (b_i = sum_{j<=i} 2^{n-j}, n the matrix
 *     size), "doubling-rank" (same with the rank n-1), or a comma separated
 *     list such as "8,12,14".
 */
#ifndef LIEGEN_H
#define LIEGEN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LIEGEN_BUILDING_LIBRARY)
#    define LIEGEN_API __declspec(dllexport)
#  else
#    define LIEGEN_API __declspec(dllimport)
#  endif
#else
#  define LIEGEN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum liegen_status {
  LIEGEN_OK = 0,
  LIEGEN_ERR_INVALID_ARGUMENT = 1,
  LIEGEN_ERR_DIMENSION = 2,
  LIEGEN_ERR_PARSE = 3,
  LIEGEN_ERR_DOMAIN = 4,
  LIEGEN_ERR_INTERNAL = 5
} liegen_status;

typedef enum liegen_conclusion {
  LIEGEN_FREE_DENSE_CERTIFIED = 0,
  LIEGEN_DENSE_ONLY = 1,
  LIEGEN_INSUFFICIENT = 2
} liegen_conclusion;

typedef struct liegen_matrix liegen_matrix;
typedef struct liegen_closure liegen_closure;
typedef struct liegen_certificate liegen_certificate;
typedef struct liegen_scan liegen_scan;
typedef struct liegen_thin_pair liegen_thin_pair;

LIEGEN_API const char* liegen_version(void);
LIEGEN_API const char* liegen_status_string(liegen_status status);
/* Message of the last failed call on this thread, "" if none. */
LIEGEN_API const char* liegen_last_error(void);
LIEGEN_API void liegen_string_free(char* s);

/* ---- matrices ---------------------------------------------------------- */

LIEGEN_API liegen_status liegen_matrix_from_json(const char* json, liegen_matrix** out);
LIEGEN_API liegen_status liegen_matrix_to_json(const liegen_matrix* m, char** out);
LIEGEN_API liegen_status liegen_matrix_size(const liegen_matrix* m, size_t* n);
/* 1-based entry (i, j) as a canonical rational string. */
LIEGEN_API liegen_status liegen_matrix_entry(const liegen_matrix* m, size_t i, size_t j, char** out);
LIEGEN_API liegen_status liegen_matrix_equal(const liegen_matrix* a, const liegen_matrix* b, int* equal);
LIEGEN_API liegen_status liegen_matrix_bracket(const liegen_matrix* a, const liegen_matrix* b,
                                               liegen_matrix** out);
LIEGEN_API void liegen_matrix_free(liegen_matrix* m);

/* ---- generators -------------------------------------------------------- */

/* family: "corner", "double_corner", "lower" (needs b_spec) or "g2" (n is
 * ignored and may be 0). */
LIEGEN_API liegen_status liegen_generator_pair(const char* family, size_t n, const char* b_spec,
                                               liegen_matrix** first, liegen_matrix** second);
/* JSON document {"family", "n", "b", "first", "second"} for the same inputs. */
LIEGEN_API liegen_status liegen_generator_pair_json(const char* family, size_t n,
                                                    const char* b_spec, char** out);

/* ---- closure ----------------------------------------------------------- */

LIEGEN_API liegen_status liegen_closure_compute(const liegen_matrix* const* seed, size_t count,
                                                liegen_closure** out);
/* Closure of the named family's generator pair. */
LIEGEN_API liegen_status liegen_closure_of_family(const char* family, size_t n, const char* b_spec,
                                                  liegen_closure** out);
LIEGEN_API liegen_status liegen_closure_dim(const liegen_closure* c, size_t* dim);
/* 1 when the (n, dim) lookup yields a simple type A, B, C or G2. */
LIEGEN_API liegen_status liegen_closure_recognized(const liegen_closure* c, int* recognized);
/* Type name such as "C3" or "unrecognized". */
LIEGEN_API liegen_status liegen_closure_type_name(const liegen_closure* c, char** out);
LIEGEN_API liegen_status liegen_closure_to_json(const liegen_closure* c, char** out);
LIEGEN_API void liegen_closure_free(liegen_closure* c);

/* ---- bounds and exponentials ------------------------------------------- */

/* Ping-pong bounds report. corner / double_corner: t bound and s0 = 2;
 * lower / g2: t bound and r bound. width may be NULL for the default 2^-40. */
LIEGEN_API liegen_status liegen_bounds_json(const char* family, size_t n, const char* b_spec,
                                            const char* width, char** out);

/* kind: "upper" a(t), "corner" b(s), "lower" c(r) (needs b_spec), or
 * "nilpotent" exp(t M) (needs matrix). */
LIEGEN_API liegen_status liegen_exp(const char* kind, size_t n, const char* parameter,
                                    const char* b_spec, const liegen_matrix* matrix,
                                    liegen_matrix** out);

/* ---- certificates ------------------------------------------------------ */

typedef struct liegen_certify_params {
  const char* family;  /* corner | double_corner | lower | g2 */
  size_t n;            /* ignored for g2; for lower 0 means len(b)+1 */
  const char* t;
  const char* s;       /* corner / double_corner */
  const char* r;       /* lower / g2 */
  const char* b_spec;  /* lower */
  const char* width;   /* NULL for default */
} liegen_certify_params;

LIEGEN_API liegen_status liegen_certify(const liegen_certify_params* params,
                                        liegen_certificate** out);
LIEGEN_API liegen_status liegen_certificate_conclusion(const liegen_certificate* c,
                                                       liegen_conclusion* out);
LIEGEN_API liegen_status liegen_certificate_to_json(const liegen_certificate* c, char** out);
LIEGEN_API void liegen_certificate_free(liegen_certificate* c);

/* ---- freeness scans ---------------------------------------------------- */

typedef struct liegen_scan_params {
  size_t n;
  const char* t;
  const char* s;       /* scan {a(t), b(s)} when set */
  const char* r;       /* scan {a(t), c(r)} when set; needs b_spec */
  const char* b_spec;
  size_t max_syllables;
  long max_exp;
  unsigned long long seed; /* recorded in the report */
} liegen_scan_params;

LIEGEN_API liegen_status liegen_scan_run(const liegen_scan_params* params, liegen_scan** out);
LIEGEN_API liegen_status liegen_scan_words_checked(const liegen_scan* s, size_t* count);
LIEGEN_API liegen_status liegen_scan_collision_count(const liegen_scan* s, size_t* count);
/* Collision k in canonical order, e.g. "A^1 B^-1 A^1". */
LIEGEN_API liegen_status liegen_scan_collision(const liegen_scan* s, size_t k, char** out);
LIEGEN_API liegen_status liegen_scan_to_json(const liegen_scan* s, char** out);
LIEGEN_API void liegen_scan_free(liegen_scan* s);

/* ---- ping-pong spot checks --------------------------------------------- */

typedef struct liegen_spotcheck_params {
  const char* generator; /* "upper" a(t), "corner" b(s), "lower" c(r) */
  size_t n;
  const char* parameter;
  const char* b_spec;    /* lower */
  long m_min;
  long m_max;
  size_t samples;
  unsigned long long seed;
  const char* width;     /* NULL for default */
} liegen_spotcheck_params;

/* Writes the report JSON; *violations receives the violation count.
 * Parameters at or below the certified threshold give LIEGEN_ERR_DOMAIN. */
LIEGEN_API liegen_status liegen_spotcheck_json(const liegen_spotcheck_params* params,
                                               size_t* violations, char** out);

/* ---- thin subgroups ---------------------------------------------------- */

/* (a((n-1)! q), b(s)) in SL(n, Z) or Sp(n, Z), n > 2. */
LIEGEN_API liegen_status liegen_thin(size_t n, long q, long s, const char* width, liegen_thin_pair** out);
/* (a(6 q), c(r)) with b = (8, 12, 14) in SL(4, Z). */
LIEGEN_API liegen_status liegen_thin_lower(long q, long r, const char* width, liegen_thin_pair** out);
LIEGEN_API liegen_status liegen_thin_certified(const liegen_thin_pair* t, int* certified);
LIEGEN_API liegen_status liegen_thin_first(const liegen_thin_pair* t, liegen_matrix** out);
LIEGEN_API liegen_status liegen_thin_second(const liegen_thin_pair* t, liegen_matrix** out);
LIEGEN_API liegen_status liegen_thin_to_json(const liegen_thin_pair* t, char** out);
LIEGEN_API void liegen_thin_free(liegen_thin_pair* t);

#ifdef __cplusplus
}
#endif

#endif
