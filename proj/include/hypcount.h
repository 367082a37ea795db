/* C interface to the hyperelliptic curve counting library.
 *
 * All functions returning strings allocate them with malloc semantics; free
 * with hyp_free. On any status other than HYP_OK / HYP_NOT_ISOMORPHIC a
 * human-readable message is available from hyp_last_error() (thread local).
 */
#ifndef HYPCOUNT_H
#define HYPCOUNT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hyp_status {
    HYP_OK = 0,
    HYP_NOT_ISOMORPHIC = 1, /* a successful query with a negative answer */
    HYP_ERR_INPUT = 2,      /* malformed or out-of-domain input */
    HYP_ERR_BUDGET = 3,     /* brute-force work estimate exceeds the budget */
    HYP_ERR_INTERNAL = 4
} hyp_status;

/* Opaque handle for a finite field F_q, q an odd prime power. */
typedef struct hyp_field hyp_field;

/* spec: "q" in decimal or "p^e". */
hyp_status hyp_field_create(const char* spec, hyp_field** out);
void hyp_field_destroy(hyp_field* field);
long long hyp_field_order(const hyp_field* field);
long long hyp_field_characteristic(const hyp_field* field);
int hyp_field_degree(const hyp_field* field);

/* Exact class counts as decimal strings. */
hyp_status hyp_count_pointed(int g, const char* q_spec, char** out);
hyp_status hyp_count_rational(int g, const char* q_spec, char** out);

/* Hard-coded regression tables (pointed: g in 2..7, rational: g in 2..5). */
hyp_status hyp_fixture_pointed(int g, const char* q_spec, char** out);
hyp_status hyp_fixture_rational(int g, const char* q_spec, char** out);

/* count / (2 q^(2g-1)) as "numerator/denominator". */
hyp_status hyp_count_ratio(int g, const char* q_spec, int rational, char** out);

/* Runs verification tiers ("all" or a comma list of
 * zeta,quotient,epsilon,burnside,naive,tables). budget 0 means the default
 * (5e8 evaluations). Returns a JSON report; HYP_OK iff every tier passed.
 * deterministic != 0 omits timing fields. */
hyp_status hyp_verify(int g, const char* q_spec, const char* tiers,
                      unsigned long long budget, int workers, int deterministic,
                      char** out_json);

/* Decides k-isomorphism of y^2 = f1 and y^2 = f2 over the field. Polynomials
 * are dense coefficient lists, lowest degree first, separated by ',' over
 * prime fields and by ';' over extension fields (elements then use ','), or
 * symbolic like "x^5+3x^2-1" over prime fields. pointed != 0 compares as
 * pointed curves (both degrees must be odd). Writes a JSON witness report. */
hyp_status hyp_isomorphic(const hyp_field* field, const char* f1, const char* f2,
                          int pointed, char** out_json);

void hyp_free(char* s);
const char* hyp_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* HYPCOUNT_H */
