/*
 * C interface of the alcove library: exact-arithmetic alcove geometry, folded
 * galleries, and Bruhat moment graphs for the irreducible types A1, A2, A3,
 * B2, B3, C3, G2.
 *
 * All functions that produce output allocate a NUL-terminated string into
 * *out; release it with alc_string_free. Functions return ALC_OK on success;
 * on failure *out is untouched and alc_last_error(ctx) describes the problem.
 *
 * Conventions: affine words use the letters s0..sn ("s0 s1 s2", "s1s2", or
 * comma separated); spherical elements accept the same syntax plus the
 * aliases "e" and "w0"; fold indices are 1-based positions in the word.
 */
#ifndef ALCOVE_ALCOVE_H
#define ALCOVE_ALCOVE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct alc_context alc_context;

typedef enum alc_status {
  ALC_OK = 0,
  ALC_ERROR_BAD_TYPE = 1,     /* unknown root system label */
  ALC_ERROR_BAD_ARGUMENT = 2, /* precondition violation or bad index */
  ALC_ERROR_PARSE = 3,        /* malformed word, root, or JSON input */
  ALC_ERROR_UNSUPPORTED = 4,  /* e.g. rendering a rank-3 type */
  ALC_ERROR_RESOURCE = 5,     /* enumeration cap exceeded */
  ALC_ERROR_INTERNAL = 6
} alc_status;

const char* alc_version(void);
/* Comma-separated list of supported type labels. */
const char* alc_supported_types(void);
const char* alc_status_name(alc_status status);

alc_status alc_context_create(const char* type_label, alc_context** out_ctx);
void alc_context_destroy(alc_context* ctx);
/* Message of the most recent failure on this context; empty if none. */
const char* alc_last_error(const alc_context* ctx);
void alc_string_free(char* s);

/* Versioned JSON table of the root system (Cartan matrix, positive roots,
 * coroots, highest root). */
alc_status alc_roots_json(alc_context* ctx, char** out);

/* Moment graph of the spherical group. modified_direction selects the
 * modified flavor (NULL or "" for the plain Bruhat graph); a nonzero
 * undirected flag forgets directions. format is "json" or "dot". */
alc_status alc_moment_graph(alc_context* ctx, const char* modified_direction, int undirected,
                            const char* format, char** out);

/* Directed-path label sequences from the chamber vertex in modified(orientation),
 * grouped by length. */
alc_status alc_patterns_json(alc_context* ctx, const char* orientation, const char* chamber,
                             char** out);

/* Fold the gallery of `word` (from the fundamental alcove) at the 1-based
 * panel indices in `folds` (NULL or "" for none); reports walls, positivity,
 * pattern, end alcove, spherical direction, and the undirected-walk
 * prediction. */
alc_status alc_fold_json(alc_context* ctx, const char* orientation, const char* word,
                         const char* folds, char** out);

/* Run a verification sweep. theorem is one of "patterns", "minimality",
 * "crossings", "direction", "xset". orientation is a word, or NULL/"all" for
 * every direction. radius <= 0 selects the per-type default (8 for rank <= 2,
 * 5 for rank 3); for "minimality" the radius is the word-length cap.
 * *out_counterexamples receives the total number of counterexamples; the
 * call succeeds (ALC_OK) even when counterexamples exist. */
alc_status alc_verify_json(alc_context* ctx, const char* theorem, const char* orientation,
                           long long radius, char** out, long long* out_counterexamples);

/* Alcoves of the chamber (ell <= radius) for which every maximal directed-path
 * label sequence is realizable, plus the naive shrink level l_p. */
alc_status alc_xset_json(alc_context* ctx, const char* orientation, const char* chamber,
                         long long radius, char** out);

/* End alcoves of all positively folded galleries of the given type word. */
alc_status alc_shadow_json(alc_context* ctx, const char* orientation, const char* word,
                           char** out);

/* SVG picture of the rank-2 complex. galleries_json is NULL or a JSON array
 * of gallery objects ({"start":..., "word":[...], "folds":[...]});
 * shrunken is NULL or "WORD:LEVEL". */
alc_status alc_render_svg(alc_context* ctx, const char* orientation,
                          const char* galleries_json, long long radius, const char* shrunken,
                          char** out);

#ifdef __cplusplus
}
#endif

#endif /* ALCOVE_ALCOVE_H */
