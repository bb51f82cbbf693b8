/* fusionkit C API: exact fusion-ring computations behind opaque handles.
 *
 * All functions return fk_status; on FK_OK, string outputs (*out) are
 * malloc'd JSON or DOT text owned by the caller and released with
 * fk_string_free. On any error, fk_last_error() returns a thread-local
 * message describing the failure.
 */
#ifndef FUSIONKIT_CAPI_H
#define FUSIONKIT_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FK_OK = 0,
  FK_ERR_ARG = 1,      /* null pointer or invalid parameter */
  FK_ERR_PARSE = 2,    /* malformed JSON or scalar string */
  FK_ERR_INVALID = 3,  /* input violates ring axioms / preconditions */
  FK_ERR_BOUND = 4,    /* configured size bound exceeded */
  FK_ERR_INTERNAL = 5
} fk_status;

typedef struct fk_ring fk_ring;

const char* fk_last_error(void);
void fk_string_free(char* s);
void fk_ring_free(fk_ring* r);

/* --- construction & serialization ------------------------------------- */

fk_status fk_ring_from_json(const char* json, fk_ring** out);
fk_status fk_ring_to_json(const fk_ring* r, char** out);
fk_status fk_ring_rank(const fk_ring* r, long* out);

fk_status fk_build_ising(fk_ring** out);
fk_status fk_build_cm(long m, fk_ring** out);
/* zeta is a reduced exponent string "p/q" (also accepts "1", "-1", "i", "-i") */
fk_status fk_build_nising(long n, const char* zeta, fk_ring** out);
fk_status fk_build_pointed(const long* cyclic_orders, int n_orders, fk_ring** out);
fk_status fk_deligne_product(const fk_ring* a, const fk_ring* b, fk_ring** out);

/* --- reports (JSON strings) -------------------------------------------- */

/* Validation report; *valid is 1 iff no issues. */
fk_status fk_ring_validate(const fk_ring* r, char** report_json, int* valid);

/* Subring lattice as a DOT graph (nodes: rank / FPdim / pointedness). */
fk_status fk_lattice_dot(const fk_ring* r, char** dot_out);

/* Named theorem suites: "fact-cm" (params {"M":..}), "nofact" ({"N":..}),
 * "braiding-count" ({"M":..}), "degeneracy" ({"N":.., "zeta":"p/q"}),
 * "gty" ({"ring": {...}}). *passed is 1 iff every verdict holds. */
fk_status fk_verify(const char* theorem, const char* params_json,
                    char** report_json, int* passed);

/* Braiding enumeration for the cyclic pointed ring of order m; zeta may be
 * NULL to enumerate all labels. include_forms adds each induced premetric. */
fk_status fk_enumerate_braidings(long m, const char* zeta, int include_forms,
                                 char** report_json);

/* Mueger-center analysis of the induced braiding with parameter xi. */
fk_status fk_induced_center(long n, const char* xi, char** report_json);

/* Table over all xi with the given twist label. */
fk_status fk_degeneracy_table(long n, const char* zeta, char** report_json);

/* Constructive decomposition; *decomposable is 1 on the Ok verdict. */
fk_status fk_decompose(const fk_ring* r, char** trace_json, int* decomposable);

/* Isomorphism search; *found is 1 when a witness exists. */
fk_status fk_isomorphic(const fk_ring* a, const fk_ring* b, char** report_json,
                        int* found);

/* Classification of a premetric group given as premetric JSON. */
fk_status fk_classify_premetric(const char* premetric_json, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FUSIONKIT_CAPI_H */
