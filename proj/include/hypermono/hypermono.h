/*
 * C interface of the hypermono library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Strings returned through `char**` out-parameters
 * are heap copies owned by the caller and released with hm_free. Every
 * fallible call returns an hm_status; on failure hm_last_error() describes
 * the problem for the calling thread and out-parameters are left untouched.
 *
 * Big counts are exchanged as decimal strings.
 */
#ifndef HYPERMONO_H
#define HYPERMONO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HM_API __declspec(dllexport)
#else
#define HM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hm_status {
  HM_OK = 0,
  HM_INVALID_ARGUMENT = 1,
  HM_NOT_HYPERMAP = 2,
  HM_NOT_CIRCULAR = 3,
  HM_INFEASIBLE = 4,
  HM_INTERNAL = 5,
  HM_IO = 6,
} hm_status;

typedef enum hm_table_kind { HM_TABLE_HULTMAN = 0, HM_TABLE_REDUCED = 1 } hm_table_kind;
typedef enum hm_format { HM_FORMAT_TEXT = 0, HM_FORMAT_CSV = 1, HM_FORMAT_JSON = 2 } hm_format;
typedef enum hm_sequence_kind { HM_SEQ_U = 0, HM_SEQ_HULTMAN_FLAT = 1, HM_SEQ_REDUCED_FLAT = 2 } hm_sequence_kind;

typedef struct hm_perm hm_perm;
typedef struct hm_hypermap hm_hypermap;
typedef struct hm_enumerator hm_enumerator;
typedef struct hm_gluing hm_gluing;

typedef struct hm_hypermap_info {
  size_t m;
  size_t genus;
  size_t k; /* number of hyperedges */
  int is_monopole;
  int is_unicellular;
  int is_reduced;
} hm_hypermap_info;

typedef struct hm_scan_options {
  unsigned threads;  /* 0: one per hardware thread */
  size_t max_points; /* safety limit for exhaustive scans */
  int force;         /* nonzero: ignore max_points */
} hm_scan_options;

HM_API const char* hm_version(void);
HM_API const char* hm_status_name(hm_status status);
HM_API const char* hm_last_error(void);
HM_API void hm_free(void* ptr);

/* Exact counts, as decimal strings. */
HM_API hm_status hm_binomial(long n, long k, char** out);
HM_API hm_status hm_stirling_c(long n, long k, char** out);
HM_API hm_status hm_hultman(long n, long k, char** out);
HM_API hm_status hm_reduced(long n, long k, char** out);
HM_API hm_status hm_u(long g, char** out);
/* Coefficient lists as JSON arrays of decimal strings, index = degree. */
HM_API hm_status hm_genpoly_hultman(long n, char** out_json);
HM_API hm_status hm_genpoly_reduced(long n, char** out_json);
/* JSON: {"kind","columns":[k...],"rows":[{"n","cells":["count" or null,...]}]} */
HM_API hm_status hm_table(hm_table_kind kind, long max_n, hm_format format, char** out);
HM_API hm_status hm_oeis_bfile(hm_sequence_kind kind, long count, char** out);

/* Permutations. m = 0 in hm_perm_parse infers the size from the largest label. */
HM_API hm_status hm_perm_parse(const char* text, size_t m, unsigned base, hm_perm** out);
HM_API hm_status hm_perm_from_images(const uint32_t* images, size_t m, hm_perm** out);
HM_API void hm_perm_free(hm_perm* perm);
HM_API size_t hm_perm_size(const hm_perm* perm);
HM_API uint32_t hm_perm_image(const hm_perm* perm, uint32_t x);
HM_API size_t hm_perm_cycle_count(const hm_perm* perm);
HM_API hm_status hm_perm_format(const hm_perm* perm, unsigned base, char** out);

/* Hypermaps. A NULL sigma in hm_hypermap_from_face means (0 1 ... m-1). */
HM_API hm_status hm_hypermap_new(const hm_perm* sigma, const hm_perm* alpha, hm_hypermap** out);
HM_API hm_status hm_hypermap_from_face(const hm_perm* sigma, const hm_perm* face, hm_hypermap** out);
HM_API hm_status hm_hypermap_from_json(const char* json, unsigned base, hm_hypermap** out);
HM_API void hm_hypermap_free(hm_hypermap* map);
HM_API hm_status hm_hypermap_info_get(const hm_hypermap* map, hm_hypermap_info* out);
HM_API hm_status hm_hypermap_sigma(const hm_hypermap* map, hm_perm** out);
HM_API hm_status hm_hypermap_alpha(const hm_hypermap* map, hm_perm** out);
HM_API hm_status hm_hypermap_face(const hm_hypermap* map, hm_perm** out);
HM_API hm_status hm_hypermap_to_json(const hm_hypermap* map, unsigned base, char** out);
HM_API hm_status hm_hypermap_remove_bud(const hm_hypermap* map, uint32_t bud, hm_hypermap** out);
HM_API hm_status hm_hypermap_insert_bud(const hm_hypermap* map, uint32_t after, hm_hypermap** out);
HM_API hm_status hm_hypermap_reduce(const hm_hypermap* map, hm_hypermap** out);

/* Exhaustive scans with sigma = (0 1 ... m-1). */
HM_API void hm_scan_options_init(hm_scan_options* options);
/* {"m":..,"counts":{"k":"count",...},"total":"..."} */
HM_API hm_status hm_scan_count_by_cycles(size_t m, const hm_scan_options* options, char** out_json);
HM_API hm_status hm_scan_count_reduced(size_t m, const hm_scan_options* options, char** out_json);
HM_API hm_status hm_enumerate_reduced(size_t m, size_t k, const hm_scan_options* options, hm_enumerator** out);
HM_API hm_status hm_enumerate_genus(size_t g, const hm_scan_options* options, hm_enumerator** out);
/* Sets *out to NULL once the stream is exhausted. */
HM_API hm_status hm_enumerator_next(hm_enumerator* it, hm_hypermap** out);
HM_API void hm_enumerator_free(hm_enumerator* it);
HM_API hm_status hm_distribution_check(size_t m, const hm_scan_options* options, int* agree, char** out_json);
/* Report as text, or as {"passed":bool,"checks":[{"name","passed","detail"}]} for HM_FORMAT_JSON. */
HM_API hm_status hm_verify(size_t max_m, const hm_scan_options* options, hm_format format, int* passed, char** out);

/* Cycle graphs and polygon gluings of a circular face pi. */
HM_API hm_status hm_cycle_graph_json(const hm_perm* pi, unsigned base, char** out);
HM_API hm_status hm_cycle_graph_dot(const hm_perm* pi, unsigned base, char** out);
HM_API hm_status hm_cycle_graph_alpha(const hm_perm* pi, hm_perm** out);
HM_API hm_status hm_breakpoints(const hm_perm* pi, unsigned base, char** out_json);
HM_API hm_status hm_gluing_from_pi(const hm_perm* pi, hm_gluing** out);
HM_API hm_status hm_gluing_from_pairing(const uint32_t* pairing, size_t m, hm_gluing** out);
HM_API void hm_gluing_free(hm_gluing* gluing);
HM_API size_t hm_gluing_size(const hm_gluing* gluing);
HM_API size_t hm_gluing_vertex_count(const hm_gluing* gluing);
HM_API size_t hm_gluing_genus(const hm_gluing* gluing);
HM_API hm_status hm_gluing_pi(const hm_gluing* gluing, hm_perm** out);
HM_API hm_status hm_gluing_json(const hm_gluing* gluing, unsigned base, char** out);
HM_API hm_status hm_gluing_svg(const hm_gluing* gluing, unsigned base, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HYPERMONO_H */
