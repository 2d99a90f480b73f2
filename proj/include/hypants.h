/* hypants C API: length spectra of infinite hyperbolic surfaces built from
 * geodesic pants decompositions with Fenchel-Nielsen coordinates.
 *
 * All objects are opaque handles created and released by this library.
 * Functions return HYPANTS_OK on success; on failure they return an error
 * code and leave a message retrievable with hypants_last_error() (thread
 * local). Output handles are only written on success.
 */
#ifndef HYPANTS_H
#define HYPANTS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hypants_status {
  HYPANTS_OK = 0,
  HYPANTS_ERR_PARSE = 1,
  HYPANTS_ERR_INVALID_ARGUMENT = 2,
  HYPANTS_ERR_DOMAIN = 3,
  HYPANTS_ERR_NUMERIC = 4,
  HYPANTS_ERR_IO = 5,
  HYPANTS_ERR_INTERNAL = 6
} hypants_status;

typedef struct hypants_surface hypants_surface;
typedef struct hypants_curves hypants_curves;
typedef struct hypants_lamination hypants_lamination;
typedef struct hypants_spectrum hypants_spectrum;

const char* hypants_last_error(void);

/* strings returned through char** are malloc'd; release them here */
void hypants_string_free(char* s);

/* --- surfaces ------------------------------------------------------------ */

/* Parse a surface document (JSON: pants, cuffs, optional base, optional
 * rule). */
hypants_status hypants_surface_parse(const char* text, hypants_surface** out);
hypants_status hypants_surface_serialize(const hypants_surface* s, char** out);
void hypants_surface_free(hypants_surface* s);

hypants_status hypants_surface_counts(const hypants_surface* s, int* pants, int* cuffs,
                                      int* interior_cuffs);

/* --- curves -------------------------------------------------------------- */

/* Parse a curve document: one word per line, `cuff <id>` or
 * `path <enter> <exit> <+/-k> | ...`. */
hypants_status hypants_curves_parse(const hypants_surface* s, const char* text,
                                    hypants_curves** out);
/* All taut words up to max_segments (winding cap 3), plus all cuffs. */
hypants_status hypants_curves_enumerate(const hypants_surface* s, int max_segments,
                                        hypants_curves** out);
hypants_status hypants_curves_count(const hypants_curves* c, int* out);
hypants_status hypants_curves_id(const hypants_curves* c, int index, char** out);
void hypants_curves_free(hypants_curves* c);

/* --- laminations ---------------------------------------------------------- */

/* Parse a lamination document: lines `<cuff-id> <weight>`. */
hypants_status hypants_lamination_parse(const hypants_surface* s, const char* text,
                                        hypants_lamination** out);
void hypants_lamination_free(hypants_lamination* m);

/* --- lengths and spectra -------------------------------------------------- */

hypants_status hypants_curve_length(const hypants_surface* s, const hypants_curves* c, int index,
                                    double* out);
hypants_status hypants_spectrum_compute(const hypants_surface* s, const hypants_curves* c,
                                        hypants_spectrum** out);
hypants_status hypants_spectrum_size(const hypants_spectrum* v, int* out);
hypants_status hypants_spectrum_entry(const hypants_spectrum* v, int index, double* base,
                                      double* value);
/* CSV with header curve_id,base_length,length,normalized_value and a JSON
 * sidecar carrying surface/family hashes. Either output may be NULL. */
hypants_status hypants_spectrum_csv(const hypants_spectrum* v, char** csv, char** meta_json);
void hypants_spectrum_free(hypants_spectrum* v);

hypants_status hypants_intersection(const hypants_surface* s, const hypants_lamination* m,
                                    const hypants_curves* c, int index, double* out);

hypants_status hypants_dls_distance(const hypants_spectrum* u, const hypants_spectrum* v,
                                    double* out);
hypants_status hypants_sup_distance(const hypants_spectrum* u, const hypants_spectrum* v,
                                    double* out);

/* --- deformation ----------------------------------------------------------- */

/* Earthquake: twist_n += t * w_n over the lamination support. */
hypants_status hypants_twist(const hypants_surface* s, const hypants_lamination* m, double t,
                             hypants_surface** out);

/* --- experiments ----------------------------------------------------------- */

/* name: earthquake-limit | metric-compare | bounded-norm | shiga.
 * params_json keys (all optional): seed, N, max_segments, growth, t_grid.
 * On success *csv holds the full report; *pass is 1 iff the verdict passed. */
hypants_status hypants_experiment_run(const char* name, const char* params_json, char** csv,
                                      int* pass);

#ifdef __cplusplus
}
#endif

#endif /* HYPANTS_H */
