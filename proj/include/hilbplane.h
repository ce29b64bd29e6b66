#ifndef HILBPLANE_H
#define HILBPLANE_H

/* C interface to the hilbplane library: exact-arithmetic computations on
 * ideals of fat points in the plane, pencils of such ideals, the divisor
 * pairing on the Hilbert scheme of n points, and the k-very-ampleness
 * criterion.
 *
 * Every function reports failure through its return value and leaves a
 * message readable via hilb_last_error() on the calling thread. Strings
 * returned through char** are heap-allocated; release them with
 * hilb_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; they double as process exit codes in the bundled CLI. */
#define HILB_OK 0
#define HILB_ERR_DOMAIN 1 /* valid request, mathematically rejected */
#define HILB_ERR_USAGE 2  /* malformed request */

const char* hilb_version(void);

/* Message of the most recent failure on this thread; empty string after a
 * success. The pointer stays valid until the next library call on the same
 * thread. */
const char* hilb_last_error(void);

/* ---- truncated local ring contexts ---------------------------------- */

typedef struct hilb_ring hilb_ring;
typedef struct hilb_ideal hilb_ideal;

/* Context of order N >= 1: the local ring of the plane at a point with all
 * terms of total degree >= N cut off. NULL on error. */
hilb_ring* hilb_ring_new(int order);
void hilb_ring_free(hilb_ring* ring);
int hilb_ring_order(const hilb_ring* ring);
/* Dimension N(N+1)/2 of the context as a vector space; -1 on error. */
int hilb_ring_dim(const hilb_ring* ring);

/* ---- ideals ---------------------------------------------------------- */

/* Ideal spanned by the comma-separated generators (polynomials in u, v)
 * together with everything of degree >= order. On success *out receives a
 * new handle and *is_unit is 0 — except when the generators span the unit
 * ideal, where *out is NULL and *is_unit is 1 (a result, not an error). */
int hilb_ideal_from_generators(const hilb_ring* ring, const char* generators,
                               hilb_ideal** out, int* is_unit);

/* The square of the maximal ideal; requires order >= 3. NULL on error. */
hilb_ideal* hilb_ideal_theta(const hilb_ring* ring);

void hilb_ideal_free(hilb_ideal* ideal);

/* Colength (length of the quotient); -1 on error. */
int hilb_ideal_colength(const hilb_ideal* ideal);
/* Dimension of the socle of the quotient; -1 on error. */
int hilb_ideal_socle_dim(const hilb_ideal* ideal);
/* Minimal number of generators; requires order >= colength. -1 on error. */
int hilb_ideal_min_generators(const hilb_ideal* ideal);

/* Predicates return 1 (true), 0 (false) or -1 (error, e.g. mixed orders). */
int hilb_ideal_contains(const hilb_ideal* a, const hilb_ideal* b);
int hilb_ideal_equals(const hilb_ideal* a, const hilb_ideal* b);

hilb_ideal* hilb_ideal_intersect(const hilb_ideal* a, const hilb_ideal* b);
hilb_ideal* hilb_ideal_sum(const hilb_ideal* a, const hilb_ideal* b);

/* JSON description {"N", "colength", "rows", "socle_dim"}; the rows re-parse
 * through the generic interface below. NULL on error. */
char* hilb_ideal_to_json(const hilb_ideal* ideal);

/* ---- generic JSON interface ------------------------------------------ */

/* Every library operation is reachable by command name with a JSON request;
 * the bundled CLI is a thin shell over this call. On HILB_OK, *out_json
 * holds the JSON response. request_json may be NULL or empty for commands
 * without parameters. */
int hilb_eval(const char* command, const char* request_json, char** out_json);

/* Newline-separated list of the hilb_eval command names. */
char* hilb_commands(void);

void hilb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HILBPLANE_H */
