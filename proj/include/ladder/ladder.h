#ifndef LADDER_LADDER_H
#define LADDER_LADDER_H

#include <stdint.h>

#if defined(_WIN32)
#define LAD_API __declspec(dllexport)
#else
#define LAD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lad_datum lad_datum;

typedef enum {
  LAD_OK = 0,
  LAD_E_DOMAIN = 1,   /* mathematically invalid input; see lad_last_error_clause */
  LAD_E_PARSE = 2,    /* malformed JSON or literal */
  LAD_E_ARG = 3,      /* null pointer or bad enum value */
  LAD_E_INTERNAL = 4  /* broken invariant inside the engine */
} lad_status;

typedef enum {
  LAD_FMT_JSON = 0,
  LAD_FMT_TEXT = 1,
  LAD_FMT_DOT = 2,
  LAD_FMT_ASCII = 3,
  LAD_FMT_TABLE = 4
} lad_format;

/* Message of the last failed call on this thread, or "" */
LAD_API const char* lad_last_error(void);
/* Clause name for LAD_E_DOMAIN failures (e.g. "global-sign"), or "" */
LAD_API const char* lad_last_error_clause(void);

/* Frees strings returned through char** out-parameters. */
LAD_API void lad_string_free(char* s);

/* Parses a datum; structural checks only. */
LAD_API lad_status lad_datum_from_json(const char* json, lad_datum** out);
LAD_API void lad_datum_free(lad_datum* d);
LAD_API lad_status lad_datum_clone(const lad_datum* d, lad_datum** out);
LAD_API lad_status lad_datum_to_json(const lad_datum* d, char** out);
/* LAD_FMT_TEXT only. */
LAD_API lad_status lad_datum_render(const lad_datum* d, lad_format fmt, char** out);
LAD_API int lad_datum_equal(const lad_datum* a, const lad_datum* b);
LAD_API int lad_datum_block_count(const lad_datum* d);
/* Label id of block i; owned by the datum. NULL when out of range. */
LAD_API const char* lad_datum_block_id(const lad_datum* d, int i);

/* Checks every ladder condition; writes the rank n on success. */
LAD_API lad_status lad_validate(const lad_datum* d, int64_t* rank);

/* The graph of one block (rho_id) or, with rho_id NULL, of every block.
   JSON, ASCII or DOT. */
LAD_API lad_status lad_graph_render(const lad_datum* d, const char* rho_id, lad_format fmt, char** out);

/* *out is NULL when the derivative vanishes. */
LAD_API lad_status lad_derivative(const lad_datum* d, const char* rho_id, const char* x, lad_datum** out);
LAD_API lad_status lad_is_supercuspidal(const lad_datum* d, int* out);

/* Cuspidal support of π(L); JSON or TEXT. */
LAD_API lad_status lad_support(const lad_datum* d, lad_format fmt, char** out);
/* The standard module I(L); JSON or TEXT (Langlands notation). */
LAD_API lad_status lad_standard_module(const lad_datum* d, lad_format fmt, char** out);
/* Jacquet expansion along rho_id; raw != 0 keeps one term per tuple. JSON or TEXT. */
LAD_API lad_status lad_jacquet(const lad_datum* d, const char* rho_id, int raw, lad_format fmt, char** out);
LAD_API lad_status lad_aubert(const lad_datum* d, lad_datum** out);

/* Determinantal formula. JSON or TEXT give the signed sum (projected != 0 applies
   the support projection); TABLE lists every σ with its sign and summands. */
LAD_API lad_status lad_det_formula(const lad_datum* d, int projected, lad_format fmt, char** out);
/* GL ladder {"segments": [["x","y"], ...]}; JSON or TEXT. */
LAD_API lad_status lad_gl_det_formula(const char* json, lad_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
