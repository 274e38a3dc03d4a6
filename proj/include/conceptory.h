#ifndef CONCEPTORY_H
#define CONCEPTORY_H

/*
 * C interface to the conceptory library: a finite relational calculator
 * (1-cells with explicit boundaries over a universe of at most 16
 * elements), a law-checking suite, an ontology front-end with bounded
 * model search, and a proof-script checker.
 *
 * All handles are opaque; strings returned through `char **` parameters
 * are owned by the caller and released with cy_string_free. Failing calls
 * return a status code and leave a message in cy_last_error (per thread).
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the command-line tool exits with the same values. */
typedef enum cy_status {
  CY_OK = 0,          /* pass / model found */
  CY_FAIL = 1,        /* check failed / no model up to the bound */
  CY_INPUT_ERROR = 2, /* syntax errors, unbound names, bad arguments */
  CY_INTERNAL = 3     /* invariant violation inside the library */
} cy_status;

const char* cy_version(void);

/* Message of the most recent failing call on this thread. */
const char* cy_last_error(void);

void cy_string_free(char* s);

/* ---- relational calculator ------------------------------------------ */

typedef struct cy_cell cy_cell;

/* Subsets are bitmasks over the universe 0..n-1 (bit i = element i). */
cy_status cy_cell_make(int universe, uint32_t dom_bits, uint32_t cod_bits,
                       const uint8_t* pair_a, const uint8_t* pair_b,
                       size_t pair_count, cy_cell** out);
cy_status cy_cell_identity(int universe, uint32_t bits, cy_cell** out);
cy_status cy_cell_top(int universe, cy_cell** out);
cy_status cy_cell_bottom(int universe, cy_cell** out);
void cy_cell_free(cy_cell* cell);

int cy_cell_universe(const cy_cell* cell);
uint32_t cy_cell_dom(const cy_cell* cell);
uint32_t cy_cell_cod(const cy_cell* cell);

/* Writes up to `cap` pairs into a_out/b_out; returns the total count. */
size_t cy_cell_pairs(const cy_cell* cell, uint8_t* a_out, uint8_t* b_out,
                     size_t cap);

/* compose(f, g): g applied first; boundaries must meet exactly. */
cy_status cy_cell_compose(const cy_cell* f, const cy_cell* g, cy_cell** out);
cy_status cy_cell_meet(const cy_cell* f, const cy_cell* g, cy_cell** out);
cy_status cy_cell_join(const cy_cell* f, const cy_cell* g, cy_cell** out);
cy_status cy_cell_complement(const cy_cell* f, cy_cell** out);
cy_status cy_cell_impl(const cy_cell* f, const cy_cell* g, cy_cell** out);
cy_status cy_cell_transpose(const cy_cell* f, cy_cell** out);
cy_status cy_cell_restrict(const cy_cell* f, uint32_t dom_bits,
                           uint32_t cod_bits, cy_cell** out);
cy_status cy_cell_extend(const cy_cell* f, uint32_t dom_bits,
                         uint32_t cod_bits, cy_cell** out);
cy_status cy_cell_restrict_dom(const cy_cell* f, uint32_t bits, cy_cell** out);
cy_status cy_cell_restrict_cod(const cy_cell* f, uint32_t bits, cy_cell** out);
cy_status cy_cell_extend_dom(const cy_cell* f, uint32_t bits, cy_cell** out);
cy_status cy_cell_extend_cod(const cy_cell* f, uint32_t bits, cy_cell** out);

/* Largest common domain restriction of two cells sharing a codomain. */
cy_status cy_cell_logical_pullback(const cy_cell* f, const cy_cell* g,
                                   cy_cell** out);
cy_status cy_cell_projection(int universe, uint32_t a_bits, uint32_t b_bits,
                             int right_side, cy_cell** out);
cy_status cy_cell_injection(int universe, uint32_t a_bits, uint32_t b_bits,
                            int right_side, cy_cell** out);

/* Pair-set inclusion (boundaries ignored); -1 on error, else 0/1. */
int cy_cell_leq(const cy_cell* f, const cy_cell* g);
int cy_cell_order_equiv(const cy_cell* f, const cy_cell* g);
int cy_cell_is_map(const cy_cell* f);

/* CY_FAIL when f is not a map (no right adjoint exists). */
cy_status cy_cell_right_adjoint(const cy_cell* f, cy_cell** out);

/* ---- law suite ------------------------------------------------------- */

/*
 * mode: "exhaustive" (universe 1..3) or "random" (1..8, seeded).
 * laws_csv: comma-separated law names, NULL or "" for the whole registry.
 * format: "text" or "json". The report is byte-stable for fixed inputs.
 * CY_OK = no violations in any gating law; report-only laws never fail
 * the run.
 */
cy_status cy_laws_run(int universe_size, const char* mode, long samples,
                      uint64_t seed, const char* laws_csv, const char* format,
                      char** out_report);

/* ---- ontologies ------------------------------------------------------ */

typedef struct cy_theory cy_theory;

/* Parses and compiles ontology source text into a theory. */
cy_status cy_theory_load(const char* source_text, cy_theory** out);
void cy_theory_free(cy_theory* t);

/* One judgment per line, in declaration order. */
cy_status cy_theory_listing(const cy_theory* t, char** out);

/* First model in canonical search order as JSON; CY_FAIL when there is
 * none up to the bound (which proves nothing beyond the bound). */
cy_status cy_theory_find_model(const cy_theory* t, int max_universe,
                               int nonempty, char** out_model_json);

/* Per-judgment truth table; CY_FAIL when any judgment fails. */
cy_status cy_theory_verify(const cy_theory* t, const char* model_json,
                           char** out_report);

/* ---- proof scripts --------------------------------------------------- */

/* Checks a proof script against the theory's judgments as hypotheses
 * (theory may be NULL: empty signature, no hypotheses). CY_FAIL names the
 * first failing step in the report. */
cy_status cy_prove(const char* script_text, const cy_theory* theory,
                   char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* CONCEPTORY_H */
