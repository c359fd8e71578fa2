/* Licensed under the Apache License 2.0 (see LICENSE file). */

#ifndef STABLEVOL_STABLEVOL_H
#define STABLEVOL_STABLEVOL_H

#include <stddef.h>
#include <stdint.h>

#if defined(STABLEVOL_BUILDING)
#define SV_API __attribute__((visibility("default")))
#else
#define SV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum sv_status {
  SV_OK = 0,
  SV_ERROR = 1,       /* any other failure; see sv_last_error() */
  SV_PARSE = 2,       /* unreadable input or bad arguments */
  SV_DEGENERATE = 3,  /* degenerate point configuration */
  SV_AMBIGUOUS = 4,   /* pair selector matched zero or several pairs */
  SV_STAR_PAIR = 5    /* the selected class never dies */
} sv_status;

typedef enum sv_method {
  SV_METHOD_OPTIMAL = 0,
  SV_METHOD_STABLE_TREE = 1,
  SV_METHOD_STABLE_LP = 2,
  SV_METHOD_SUB = 3
} sv_method;

/* Pair selection: by position in the degree's diagram, or by a
   (birth, death) window. A negative death selects essential pairs. */
typedef struct sv_pair_selector {
  int by_index;
  size_t index;
  double birth;
  double death;
  double tolerance; /* window half width; 0 means 1e-3 */
} sv_pair_selector;

/* Opaque filtration handle: a complex with an order, optionally the point
   cloud it was built from. */
typedef struct sv_filtration sv_filtration;

/* Message of the last failure on the calling thread ("" if none). */
SV_API const char* sv_last_error(void);
SV_API void sv_string_free(char* s);
SV_API const char* sv_version(void);

/* Worker threads for parallel routines; 0 restores the default
   (STABLEVOL_THREADS or the core count). */
SV_API void sv_set_threads(unsigned threads);

SV_API sv_status sv_filtration_from_points(const char* text, int squared, sv_filtration** out);
SV_API sv_status sv_filtration_from_complex_json(const char* text, sv_filtration** out);
SV_API void sv_filtration_free(sv_filtration* f);
SV_API size_t sv_filtration_size(const sv_filtration* f);
SV_API int sv_filtration_dim(const sv_filtration* f);

/* Outputs are NUL-terminated strings released with sv_string_free. */
SV_API sv_status sv_complex_json(const sv_filtration* f, char** out);
SV_API sv_status sv_diagram_json(const sv_filtration* f, int degree, char** out);
SV_API sv_status sv_diagram_tsv(const sv_filtration* f, int degree, char** out);
SV_API sv_status sv_volume_json(const sv_filtration* f, int degree, const sv_pair_selector* sel,
                                sv_method method, double epsilon, char** out);
/* Rows "epsilon<TAB>size" for epsilon = first, first+step, ... <= last. */
SV_API sv_status sv_sweep_tsv(const sv_filtration* f, int degree, const sv_pair_selector* sel,
                              double first, double last, double step, char** out);
/* Reconstructed shortest cycle in the prefix up to level birth + parameter;
   a negative parameter uses the prefix just before the death simplex. */
SV_API sv_status sv_rsc_json(const sv_filtration* f, const sv_pair_selector* sel, double parameter,
                             int euclidean, char** out);

/* Statistical resampling on the point cloud text; the target pair is taken
   from the unperturbed diagram through the selector. */
SV_API sv_status sv_statistical_json(const char* points_text, int degree, const sv_pair_selector* sel,
                                     double half_width, uint64_t seed, size_t trials, char** out);

SV_API sv_status sv_generate_fixture(const char* name, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* STABLEVOL_STABLEVOL_H */
