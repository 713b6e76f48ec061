/* dainfty: exact checker for derived A-infinity structures, their
 * coalgebraic avatars and representations.
 *
 * All functions return a status code:
 *   0  DAINFTY_OK                 operation succeeded / all relations pass
 *   1  DAINFTY_RELATION_FAILURE   checker ran, some relation fails
 *   2  DAINFTY_INPUT_ERROR        malformed input (JSON, schema, arguments)
 *   3  DAINFTY_TRUNCATION_ERROR   requested window exceeds declared bounds
 *
 * Output strings (reports, documents, error messages) are heap-allocated;
 * release them with dainfty_string_free.  Out-parameters may be NULL when
 * the caller does not need them.
 */
#ifndef DAINFTY_H
#define DAINFTY_H

#ifdef __cplusplus
extern "C" {
#endif

#define DAINFTY_OK 0
#define DAINFTY_RELATION_FAILURE 1
#define DAINFTY_INPUT_ERROR 2
#define DAINFTY_TRUNCATION_ERROR 3

typedef struct dainfty_family dainfty_family;
typedef struct dainfty_rep dainfty_rep;

const char* dainfty_version(void);
void dainfty_string_free(char* s);

/* ---- structure families ---- */
int dainfty_family_from_json(const char* json_text, dainfty_family** out,
                             char** error);
int dainfty_family_from_example(const char* example_id, int arity_bound,
                                dainfty_family** out, char** error);
int dainfty_family_to_json(const dainfty_family* fam, char** out_json);
/* sign-convention switch (involutive) */
int dainfty_family_convert(const dainfty_family* fam, dainfty_family** out,
                           char** error);
void dainfty_family_free(dainfty_family* fam);

/* ---- checkers; *report_json receives a versioned JSON report ---- */
int dainfty_check(const dainfty_family* fam, int u_max, int v_max,
                  char** report_json, char** error);
int dainfty_check_bidga(const dainfty_family* fam, char** report_json,
                        char** error);
/* runs the relation check and the coalgebraic twisted-family check and
 * reports whether they agree */
int dainfty_bar_check(const dainfty_family* fam, int u_max, int v_max,
                      char** report_json, char** error);

/* ---- representations ---- */
int dainfty_rep_from_json(const char* json_text, dainfty_rep** out,
                          char** error);
/* regular representation (module = algebra, actions = structure maps) */
int dainfty_rep_regular(const dainfty_family* fam, dainfty_rep** out,
                        char** error);
int dainfty_rep_to_json(const dainfty_rep* rep, char** out_json);
void dainfty_rep_free(dainfty_rep* rep);
int dainfty_check_rep(const dainfty_rep* rep, int u_max, int arity_max,
                      char** report_json, char** error);

/* ---- cooperad comultiplications ----
 * kind: "mu", "mut" or "alpha"; as_json selects JSON vs text rendering. */
int dainfty_cooperad(const char* kind, int u, int v, int as_json, char** out,
                     char** error);

/* human-readable summary of a JSON report produced by the checkers */
int dainfty_report_text(const char* report_json, char** out, char** error);

/* "structure" or "representation", from the document's schema field */
int dainfty_document_kind(const char* json_text, char** kind, char** error);

#ifdef __cplusplus
}
#endif

#endif /* DAINFTY_H */
