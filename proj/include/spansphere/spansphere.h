#ifndef SPANSPHERE_H
#define SPANSPHERE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SPS_BUILDING_LIBRARY)
#define SPS_API __attribute__((visibility("default")))
#else
#define SPS_API
#endif

typedef enum sps_status {
  SPS_OK = 0,
  SPS_INVALID_VERTEX,
  SPS_BAD_ARITY,
  SPS_PRECONDITION_FAILED,
  SPS_NOT_TIGHTLY_CONNECTED,
  SPS_PART_TOO_SMALL,
  SPS_EMPTY_COMPLEX,
  SPS_BAD_OVERLAP,
  SPS_MISSING_FACET,
  SPS_DIM_MISMATCH,
  SPS_WRONG_DIM,
  SPS_BAD_PARAMS,
  SPS_HALL_FAILURE,
  SPS_PARITY_FIX_IMPOSSIBLE,
  SPS_NO_PERFECT_MATCHING,
  SPS_SINGLETON_UNRESOLVABLE,
  SPS_REDUCED_DEGREE_FAILURE,
  SPS_MISSING_FAMILY_FACET,
  SPS_BUDGET_EXCEEDED,
  SPS_HYPOTHESIS_FAILED,
  SPS_PARSE_ERROR,
  SPS_IO_ERROR,
  SPS_INVALID_ARGUMENT,
  SPS_INTERNAL_ERROR
} sps_status;

typedef struct sps_hypergraph sps_hypergraph;
typedef struct sps_complex sps_complex;
typedef struct sps_blowup sps_blowup;
typedef struct sps_chain sps_chain;

/* Strings returned through char** are owned by the caller and released with sps_string_free. */
SPS_API const char* sps_version(void);
SPS_API const char* sps_status_name(sps_status status);
/* Message of the last failed call on this thread. */
SPS_API const char* sps_last_error(void);
SPS_API void sps_string_free(char* s);

/* Hypergraphs */
SPS_API sps_status sps_hypergraph_create(int k, uint32_t n, const uint32_t* flat_edges, size_t edge_count,
                                         sps_hypergraph** out);
SPS_API sps_status sps_hypergraph_parse(const char* text, sps_hypergraph** out);
SPS_API sps_status sps_hypergraph_load(const char* path, sps_hypergraph** out);
SPS_API sps_status sps_hypergraph_save(const sps_hypergraph* h, const char* path, const char* comment);
SPS_API sps_status sps_hypergraph_format(const sps_hypergraph* h, const char* comment, char** text);
SPS_API void sps_hypergraph_free(sps_hypergraph* h);
SPS_API sps_status sps_hypergraph_info(const sps_hypergraph* h, int* k, uint32_t* n, size_t* edge_count);
SPS_API sps_status sps_hypergraph_edge(const sps_hypergraph* h, size_t index, uint32_t* vertices);
SPS_API sps_status sps_hypergraph_min_codegree(const sps_hypergraph* h, uint64_t* out);
SPS_API sps_status sps_hypergraph_min_d_degree(const sps_hypergraph* h, int d, uint64_t* out);
SPS_API sps_status sps_hypergraph_tight_component_count(const sps_hypergraph* h, size_t* out);
/* n, edges, delta*, delta*_d for d = 1..k-1 and the tight component count as text. */
SPS_API sps_status sps_hypergraph_stats(const sps_hypergraph* h, char** report);

/* Lower-bound constructions */
SPS_API sps_status sps_lower_bound_codegree(int k, uint32_t n, sps_hypergraph** out, char** blocks);
SPS_API sps_status sps_lower_bound_tight_cycle(int k, uint32_t n, sps_hypergraph** out, char** blocks);
SPS_API sps_status sps_lower_bound_vertex_degree(uint32_t n, sps_hypergraph** out, char** blocks);

/* Complexes */
SPS_API sps_status sps_complex_parse(const char* text, sps_complex** out);
SPS_API sps_status sps_complex_load(const char* path, sps_complex** out);
SPS_API sps_status sps_complex_save(const sps_complex* c, const char* path, const char* comment);
SPS_API sps_status sps_complex_format(const sps_complex* c, const char* comment, char** text);
SPS_API void sps_complex_free(sps_complex* c);
SPS_API sps_status sps_complex_info(const sps_complex* c, int* dim, size_t* facet_count, size_t* vertex_count);
/* Certificate level name and details as text; *certified is 1 for a certifying level. */
SPS_API sps_status sps_complex_verify(const sps_complex* c, uint64_t shelling_budget, char** report, int* certified);
SPS_API sps_status sps_complex_is_spanning(const sps_complex* c, const sps_hypergraph* host, int* spanning);

/* Spheres: variant 'a' or 'b' for partite spheres; kind "thin" or "blowup" for path spheres. */
SPS_API sps_status sps_sphere_partite(int k, int ell, char variant, sps_complex** out, char** info);
SPS_API sps_status sps_sphere_path(const char* kind, int k, int ell, sps_complex** out, char** manifest);

/* Blow-ups and allocation */
SPS_API sps_status sps_blowup_create(const sps_hypergraph* base, const char* parts_text, sps_blowup** out);
SPS_API void sps_blowup_free(sps_blowup* b);
SPS_API sps_status sps_blowup_minimum_part_size(const sps_blowup* b, size_t* out);
SPS_API sps_status sps_allocate(const sps_blowup* b, const uint32_t* f1, const uint32_t* f2, int allow_overlap,
                                uint64_t shelling_budget, sps_complex** out, char** report);

/* Chains */
SPS_API sps_status sps_chain_generate(int k, uint32_t s, size_t links, size_t part_size, uint64_t seed,
                                      int singletons, sps_chain** out);
SPS_API sps_status sps_chain_parse(const char* text, sps_chain** out);
SPS_API sps_status sps_chain_load(const char* path, sps_chain** out);
SPS_API sps_status sps_chain_save(const sps_chain* c, const char* path);
SPS_API sps_status sps_chain_format(const sps_chain* c, char** text);
SPS_API void sps_chain_free(sps_chain* c);
/* host may be NULL: the union of the links is used. */
SPS_API sps_status sps_chain_verify(const sps_chain* c, const sps_hypergraph* host, char** report, int* passed);
SPS_API sps_status sps_chain_host(const sps_chain* c, uint64_t max_edges, sps_hypergraph** out);
SPS_API sps_status sps_chain_host_edge_count(const sps_chain* c, uint64_t* out);
SPS_API sps_status sps_chain_solve(const sps_chain* c, unsigned jobs, uint64_t shelling_budget, sps_complex** out,
                                   char** report, int* passed);

/* Extremal tools; epsilon is a rational such as "1/10". */
SPS_API sps_status sps_property_graph(const sps_hypergraph* h, const char* epsilon, int s, uint64_t budget,
                                      sps_hypergraph** out);
SPS_API sps_status sps_sample_property_rate(const sps_hypergraph* h, const char* epsilon, int s, uint64_t trials,
                                            uint64_t seed, char** report);
/* *parts_text receives one line per part, or NULL with *found = 0. */
SPS_API sps_status sps_find_partite_blowup(const sps_hypergraph* p, size_t b, uint64_t budget, char** parts_text,
                                           int* found);
SPS_API sps_status sps_pigeonhole_blowup(const sps_hypergraph* host, const char* parts_text,
                                         const sps_hypergraph* const* family, size_t family_count, size_t b,
                                         uint64_t budget, char** report, int* found);

#ifdef __cplusplus
}
#endif

#endif
