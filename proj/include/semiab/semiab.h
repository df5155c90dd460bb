#ifndef SEMIAB_SEMIAB_H
#define SEMIAB_SEMIAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SEMIAB_BUILDING)
#    define SEMIAB_API __declspec(dllexport)
#  else
#    define SEMIAB_API __declspec(dllimport)
#  endif
#else
#  define SEMIAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semiab_status {
  SEMIAB_OK = 0,
  SEMIAB_ERR_MALFORMED_TABLE = 1,
  SEMIAB_ERR_NOT_ASSOCIATIVE = 2,
  SEMIAB_ERR_NO_IDENTITY = 3,
  SEMIAB_ERR_NO_INVERSE = 4,
  SEMIAB_ERR_NOT_LATIN_SQUARE = 5,
  SEMIAB_ERR_UNSUPPORTED_PARAMETER = 6,
  SEMIAB_ERR_NOT_NORMAL = 7,
  SEMIAB_ERR_NOT_SUBGROUP = 8,
  SEMIAB_ERR_NOT_HOMOMORPHISM = 9,
  SEMIAB_ERR_AMBIENT_MISMATCH = 10,
  SEMIAB_ERR_BOUND_EXCEEDED = 11,
  SEMIAB_ERR_FACTOR_MISMATCH = 12,
  SEMIAB_ERR_SIGNATURE_MISMATCH = 13,
  SEMIAB_ERR_NOT_IN_CROSS_EFFECT = 14,
  SEMIAB_ERR_NOT_IN_TG = 15,
  SEMIAB_ERR_TOO_FEW_FACTORS = 16,
  SEMIAB_ERR_INVALID_ACTION = 17,
  SEMIAB_ERR_SECTION_NOT_SPLITTING = 18,
  SEMIAB_ERR_NOT_NORMAL_SUBOBJECT = 19,
  SEMIAB_ERR_PARSE = 20,
  SEMIAB_ERR_INVALID_ARGUMENT = 21,
  SEMIAB_ERR_INTERNAL = 22
} semiab_status;

/* Opaque, immutable finite group. Safe to share between threads. */
typedef struct semiab_group semiab_group;

typedef struct semiab_options {
  size_t max_order;     /* sweeps and enumerations; default 24 */
  size_t max_syllables; /* word-length bound; 0 (default) picks per command */
  size_t jobs;          /* worker threads; default 1 */
  uint64_t seed;        /* sampled properties; default 1 */
  size_t samples;       /* sampled properties; default 200 */
} semiab_options;

SEMIAB_API void semiab_options_init(semiab_options* opts);

SEMIAB_API const char* semiab_version(void);
SEMIAB_API const char* semiab_status_name(semiab_status status);
/* Message of the last failure on the calling thread; never NULL. */
SEMIAB_API const char* semiab_last_error(void);
/* Releases strings returned through char** out-parameters. */
SEMIAB_API void semiab_string_free(char* s);

/* -- groups ---------------------------------------------------------------- */

/* Names such as "Z6", "D4", "S3", "Q8", "Z2xZ3", "Z2^3". */
SEMIAB_API semiab_status semiab_group_named(const char* name, semiab_group** out);
/* {"order":n,"cayley":[[...]],"name":...} with 0-based entries, or
   {"degree":d,"generators":[[[1,2]],[[1,2,3]]]} with 1-based cycles. */
SEMIAB_API semiab_status semiab_group_from_json(const char* json, semiab_group** out);
SEMIAB_API semiab_status semiab_group_order(const semiab_group* g, size_t* out);
/* Canonical Cayley JSON; parsing it back yields an identical string. */
SEMIAB_API semiab_status semiab_group_to_json(const semiab_group* g, char** out);
SEMIAB_API semiab_status semiab_group_is_isomorphic(const semiab_group* a,
                                                    const semiab_group* b,
                                                    int* out);
SEMIAB_API void semiab_group_free(semiab_group* g);

/* -- reports ---------------------------------------------------------------
   Each call writes a JSON report to *out. Reports carry a "violations"
   count; a nonzero count is not an error status. */

SEMIAB_API semiab_status semiab_report_group(const semiab_group* g, char** out);
SEMIAB_API semiab_status semiab_actions_enumerate(const semiab_group* g,
                                                  const semiab_group* a,
                                                  const semiab_options* opts,
                                                  char** out);
SEMIAB_API semiab_status semiab_actions_roundtrip(const semiab_group* g,
                                                  const semiab_group* a,
                                                  const semiab_options* opts,
                                                  char** out);
/* phi_json: a 2-D array indexed [g][a], or NULL for every action of G on A. */
SEMIAB_API semiab_status semiab_semidirect_build(const semiab_group* g,
                                                 const semiab_group* a,
                                                 const char* phi_json,
                                                 const semiab_options* opts,
                                                 char** out);
SEMIAB_API semiab_status semiab_semidirect_maps(const semiab_options* opts, char** out);
/* parts_json: array of parts, each "all" or an array of generator indices. */
SEMIAB_API semiab_status semiab_commutator(const semiab_group* ambient,
                                           const char* parts_json,
                                           const semiab_options* opts,
                                           char** out);
/* phi_json: one table, NULL for every action of G on A, or
   the bare text all-tables (not JSON) for every table with unit row and
   column. */
SEMIAB_API semiab_status semiab_talgebra_check(const semiab_group* g,
                                               const semiab_group* a,
                                               const char* phi_json,
                                               const semiab_options* opts,
                                               char** out);
SEMIAB_API semiab_status semiab_propercrit_sweep(const semiab_options* opts, char** out);
SEMIAB_API semiab_status semiab_property_p(const semiab_group* g,
                                           const semiab_options* opts, char** out);
SEMIAB_API semiab_status semiab_pairs_demo(char** out);
SEMIAB_API semiab_status semiab_pairs_sweep(const semiab_options* opts, char** out);
/* Normal form and membership data of a word of A+G. */
SEMIAB_API semiab_status semiab_word_normalize(const semiab_group* a,
                                               const semiab_group* g,
                                               const char* text, char** out);

/* format: "json" (pretty-printed) or "markdown". */
SEMIAB_API semiab_status semiab_report_render(const char* report_json,
                                              const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SEMIAB_SEMIAB_H */
