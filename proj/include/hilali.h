/*
 * hilali: exact rational-homotopy computations for finite Sullivan models.
 *
 * C surface of the shared library. All computations are exact; results come
 * back as JSON or CSV strings (fractions encoded as {"num","den"} strings).
 * Every char* out-parameter is heap allocated and must be released with
 * hilali_string_free(). Handles are opaque and freed with their *_free()
 * function. Functions return HILALI_OK on success; on error they set
 * *err (when provided) to a message.
 */

#ifndef HILALI_H
#define HILALI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hilali_model hilali_model;
typedef struct hilali_fibration hilali_fibration;

typedef enum {
    HILALI_OK = 0,
    HILALI_ERROR_PARSE = 1,    /* malformed input text */
    HILALI_ERROR_INVALID = 2,  /* well-formed input violating a model rule */
    HILALI_ERROR_USAGE = 3,    /* bad argument (unknown key, null pointer) */
    HILALI_ERROR_INTERNAL = 4
} hilali_status;

const char* hilali_status_name(hilali_status s);
void hilali_string_free(char* s);

/* ----------------------------------------------------------- models */

/* Parse a model document (model/gen/d lines). d^2 = 0 and homogeneity are
 * checked; violations return HILALI_ERROR_INVALID, syntax problems
 * HILALI_ERROR_PARSE. */
hilali_status hilali_model_from_dsl(const char* text, hilali_model** out, char** err);

/* Catalog lookup, e.g. "sphere:7", "cpn:3", "star:2,3,5". */
hilali_status hilali_model_from_catalog(const char* key, hilali_model** out, char** err);

void hilali_model_free(hilali_model* m);

/* Emit the model document; `name` may be NULL. */
hilali_status hilali_model_print_dsl(const hilali_model* m, const char* name, char** out);

/* d^2 report plus ellipticity status. cap < 0 means the derived sound cap;
 * smaller caps may come back "undecided_at_cap". */
hilali_status hilali_model_validate_json(const hilali_model* m, long cap, char** out);

/* Full invariant set; HILALI_ERROR_INVALID when the model is not elliptic. */
hilali_status hilali_model_invariants_json(const hilali_model* m, char** out, char** err);

/* Degree scaling of a two-stage model by 3^i. */
hilali_status hilali_model_scale(const hilali_model* m, unsigned i, hilali_model** out,
                                 char** err);

/* JSON array of catalog model keys with metadata. */
hilali_status hilali_catalog_models_json(char** out);
hilali_status hilali_catalog_fibrations_json(char** out);

/* -------------------------------------------------------- fibrations */

hilali_status hilali_fibration_from_catalog(const char* key, hilali_fibration** out, char** err);

/* Relative model from base and fiber documents plus an optional
 * perturbation document ("d FIBERGEN = POLY" lines over the combined
 * generator list); NULL means the product fibration. */
hilali_status hilali_fibration_build(const char* base_dsl, const char* fiber_dsl,
                                     const char* perturbation, hilali_fibration** out,
                                     char** err);

void hilali_fibration_free(hilali_fibration* f);

/* Full inequality report. Catalog fibrations carry formality facts and
 * decompositions, so the conjecture lines are asserted and the halving
 * bound is evaluated; ad-hoc fibrations get them as diagnostics. */
hilali_status hilali_fibration_report_json(const hilali_fibration* f, char** out, char** err);

/* ------------------------------------------------------- asymptotics */

/* Explicit two-stage bound and its case analysis at (n, m, r). */
hilali_status hilali_two_stage_bound_json(long n, long m, long r, char** out, char** err);

/* Least N such that every (n,m,r) with 2n+m+r >= N has bound < eps.
 * eps is a fraction string like "1/4". */
hilali_status hilali_threshold_json(const char* eps, char** out, char** err);

/* Experiment runner. config is JSON:
 *   {"samples":100,"seed":7,
 *    "ranges":{"n_max":2,"m_max":2,"r_max":1,
 *              "even_degrees":[2,4],"odd_degrees":[3,5],
 *              "power_min":2,"power_max":3,"retry_budget":32,"pure":false}}
 * all fields optional. Returns the CSV (header always present). */
hilali_status hilali_experiment_csv(const char* config, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* HILALI_H */
