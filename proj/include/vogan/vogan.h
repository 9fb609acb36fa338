/*
 * C interface to the Vogan superdiagram toolkit.
 *
 * Diagrams are opaque handles. Operations that produce structured results
 * write a NUL-terminated JSON string to *out; release it with
 * vogan_string_free. On failure the return value names the error class and
 * vogan_last_error() describes it (the message is per thread and stays
 * valid until the next call on that thread).
 *
 * Circlings are passed as arrays of vertex ids. A null pointer with count 0
 * is the empty circling.
 *
 * The enumeration cap used by orbit, related, equivalent, reduce and
 * classify is read from VOGAN_ORBIT_CAP on every call (default 2^22).
 */
#ifndef VOGAN_VOGAN_H
#define VOGAN_VOGAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(VOGAN_BUILDING_LIBRARY)
#define VOGAN_API __attribute__((visibility("default")))
#else
#define VOGAN_API
#endif

typedef struct vogan_diagram vogan_diagram;

typedef enum vogan_status {
  VOGAN_OK = 0,
  VOGAN_ERR_INVALID_PARAMS = 1,
  VOGAN_ERR_INVALID_DIAGRAM = 2,
  VOGAN_ERR_INVALID_CIRCLING = 3,
  VOGAN_ERR_UNKNOWN_VERTEX = 4,
  VOGAN_ERR_NOT_PRESSABLE = 5,
  VOGAN_ERR_NOT_ADMISSIBLE = 6,
  VOGAN_ERR_CAP_EXCEEDED = 7,
  VOGAN_ERR_DIMENSION_MISMATCH = 8,
  VOGAN_ERR_ZERO_NORM = 9,
  VOGAN_ERR_PARSE = 10,
  VOGAN_ERR_NULL_ARGUMENT = 11,
  VOGAN_ERR_INTERNAL = 12
} vogan_status;

/* Stable identifier such as "NotPressable". */
VOGAN_API const char* vogan_status_name(vogan_status status);
VOGAN_API const char* vogan_last_error(void);
VOGAN_API void vogan_string_free(char* s);

/* {"families":[...]} */
VOGAN_API vogan_status vogan_families(char** out);

/* Catalog diagram. alpha is only read for D21A and may be NULL ("2"). */
VOGAN_API vogan_status vogan_diagram_build(const char* family, int m, int n, const char* alpha,
                                           vogan_diagram** out);
/* Full diagram JSON. The handle is marked unverified. */
VOGAN_API vogan_status vogan_diagram_parse(const char* json, vogan_diagram** out);
/* Either {"family":..,"params":{..},"parity":"even"|"odd"} resolved through
 * the catalog, or a full diagram object (anything carrying "nodes"). */
VOGAN_API vogan_status vogan_diagram_from_ref(const char* json, vogan_diagram** out);
/* "even" or "odd". */
VOGAN_API vogan_status vogan_diagram_set_parity(vogan_diagram* d, const char* rule);
VOGAN_API void vogan_diagram_free(vogan_diagram* d);

VOGAN_API int vogan_diagram_size(const vogan_diagram* d);
VOGAN_API int vogan_diagram_verified(const vogan_diagram* d);

/* Canonical byte-stable JSON. */
VOGAN_API vogan_status vogan_diagram_json(const vogan_diagram* d, char** out);
/* format: "ascii", "dot" or "json". */
VOGAN_API vogan_status vogan_render(const vogan_diagram* d, const char* format, const int* circled,
                                    size_t count, char** out);

VOGAN_API vogan_status vogan_press(const vogan_diagram* d, const int* circled, size_t count,
                                   int vertex, char** out);
VOGAN_API vogan_status vogan_orbit(const vogan_diagram* d, const int* circled, size_t count,
                                   char** out);
VOGAN_API vogan_status vogan_related(const vogan_diagram* d, const int* c1, size_t n1,
                                     const int* c2, size_t n2, char** out);
VOGAN_API vogan_status vogan_equivalent(const vogan_diagram* d, const int* c1, size_t n1,
                                        const int* c2, size_t n2, char** out);
VOGAN_API vogan_status vogan_reduce(const vogan_diagram* d, const int* circled, size_t count,
                                    char** out);
VOGAN_API vogan_status vogan_admissible(const vogan_diagram* d, const int* circled, size_t count,
                                        char** out);
VOGAN_API vogan_status vogan_symmetries(const vogan_diagram* d, char** out);
VOGAN_API vogan_status vogan_classify(const vogan_diagram* d, char** out);
VOGAN_API vogan_status vogan_reflect(const vogan_diagram* d, const int* circled, size_t count,
                                     int vertex, char** out);

#ifdef __cplusplus
}
#endif

#endif
