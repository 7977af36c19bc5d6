/* C interface to the group-ring involution toolkit. Handles are opaque;
 * every fallible call returns a gri_status and leaves a message readable
 * through gri_last_error() on the calling thread. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * gri_string_free(). */
#ifndef GRI_GRI_H
#define GRI_GRI_H

#include <stddef.h>
#include <stdint.h>

#if defined(GRI_BUILDING)
#define GRI_API __attribute__((visibility("default")))
#else
#define GRI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gri_status {
  GRI_OK = 0,
  GRI_ERR_INVALID_ARGUMENT,
  GRI_ERR_INVALID_TABLE,
  GRI_ERR_SYNTAX,
  GRI_ERR_UNKNOWN_GENERATOR,
  GRI_ERR_COSET_LIMIT,
  GRI_ERR_NOT_SLC,
  GRI_ERR_INVALID_INVOLUTION,
  GRI_ERR_INVALID_ORIENTATION,
  GRI_ERR_INCOMPATIBLE,
  GRI_ERR_CHAR_TWO,
  GRI_ERR_BUDGET,
  GRI_ERR_MISMATCHED_CARRIER,
  GRI_ERR_NOT_FOUND,
  GRI_ERR_IO,
  GRI_ERR_INTERNAL
} gri_status;

typedef struct gri_group gri_group;
typedef struct gri_ring gri_ring;
typedef struct gri_config gri_config;

GRI_API const char* gri_last_error(void);
GRI_API const char* gri_status_name(gri_status status);
GRI_API void gri_string_free(char* s);

GRI_API gri_status gri_catalog_names_json(char** out);

/* selector: catalog name, path to a JSON table, or a presentation "<...>". */
GRI_API gri_status gri_group_open(const char* selector, size_t max_cosets, gri_group** out);
GRI_API gri_status gri_group_from_json(const char* json, gri_group** out);
GRI_API void gri_group_free(gri_group* g);
GRI_API int gri_group_order(const gri_group* g);
GRI_API gri_status gri_group_to_json(const gri_group* g, char** out);
GRI_API gri_status gri_group_analyze_json(const gri_group* g, char** out);
GRI_API gri_status gri_group_involutions_json(const gri_group* g, char** out);
GRI_API gri_status gri_group_involution_count(const gri_group* g, size_t* out);
GRI_API gri_status gri_group_pairs_json(const gri_group* g, char** out);
/* Compatible oriented-involution count under the documented interpretation. */
GRI_API gri_status gri_group_pair_count(const gri_group* g, long* out);

/* "Z4", "Z4xZ2", ... */
GRI_API gri_status gri_ring_parse(const char* spec, gri_ring** out);
GRI_API void gri_ring_free(gri_ring* r);

/* involution: index | "canonical" | "inversion" | "a->a^-1,b->ab".
 * orientation: index | "kernel=a^2,b". Incompatible pairs are accepted
 * here; gri_config_compatible reports them. */
GRI_API gri_status gri_config_new(const gri_group* g, const char* involution, const char* orientation,
                                  gri_config** out);
GRI_API void gri_config_free(gri_config* c);
/* witness_label may be NULL; it is set to NULL when the pair is compatible. */
GRI_API gri_status gri_config_compatible(const gri_config* c, int* compatible, char** witness_label);

/* Report JSON for one instance. oracle_budget 0 disables the full enumeration. */
GRI_API gri_status gri_verify_json(const gri_config* c, const gri_ring* r, uint64_t oracle_budget, char** out);

typedef void (*gri_report_fn)(const char* report_json, const char* csv_rows, void* user);

/* Surveys every catalog group of order <= max_order against the rings in
 * rings_csv ("Z3,Z4,Z4xZ2"). Reports are delivered in instance order. */
GRI_API gri_status gri_survey(int max_order, const char* rings_csv, uint64_t oracle_budget, unsigned jobs,
                              gri_report_fn on_report, void* user, char** summary_json);
GRI_API gri_status gri_csv_header(char** out);

#ifdef __cplusplus
}
#endif

#endif
