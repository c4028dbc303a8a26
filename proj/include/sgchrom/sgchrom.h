#ifndef SGCHROM_H
#define SGCHROM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SGCHROM_BUILDING)
#    define SGC_API __declspec(dllexport)
#  else
#    define SGC_API __declspec(dllimport)
#  endif
#else
#  define SGC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgc_status {
  SGC_OK = 0,
  SGC_ERR_LOOP_EDGE,
  SGC_ERR_DUPLICATE_EDGE,
  SGC_ERR_INDEX_OUT_OF_RANGE,
  SGC_ERR_BAD_SIGN,
  SGC_ERR_UNKNOWN_EDGE,
  SGC_ERR_EMPTY_GRAPH,
  SGC_ERR_BAD_CODE,
  SGC_ERR_UNKNOWN_FIXTURE,
  SGC_ERR_NEGATIVE_INDEX,
  SGC_ERR_BAD_RANGE,
  SGC_ERR_BAD_INDEX,
  SGC_ERR_NEGATIVE_PARAMETER,
  SGC_ERR_BUDGET_EXCEEDED,
  SGC_ERR_NON_INTEGRAL_COEFFICIENT,
  SGC_ERR_NOT_COMPLETE,
  SGC_ERR_PARSE,
  SGC_ERR_USAGE,
  SGC_ERR_NULL_ARGUMENT,
  SGC_ERR_INTERNAL
} sgc_status;

/* Opaque immutable signed graph. */
typedef struct sgc_graph sgc_graph;

typedef struct sgc_budget {
  int max_subset_edges;
  uint64_t max_oracle_evaluations;
  int max_orbit_edges;
  uint64_t max_search_nodes;
  unsigned threads; /* 0: SGCHROM_THREADS or the core count */
} sgc_budget;

typedef struct sgc_verify_options {
  sgc_budget budget;
  int stretch;
  uint64_t seed;
  int with_timing; /* adds elapsed_seconds to report JSON */
} sgc_verify_options;

SGC_API const char* sgc_version(void);
SGC_API const char* sgc_status_name(sgc_status status);
/* Message of the last failure on the calling thread. */
SGC_API const char* sgc_last_error(void);
/* Frees any string returned through a char** out-parameter. */
SGC_API void sgc_string_free(char* s);

SGC_API void sgc_budget_default(sgc_budget* budget);
SGC_API void sgc_verify_options_default(sgc_verify_options* options);

/* edges holds edge_count triples (u, v, sign) with sign +1 or -1. */
SGC_API sgc_status sgc_graph_create(int n, const int* edges, size_t edge_count, sgc_graph** out);
SGC_API sgc_status sgc_graph_parse(const char* text, sgc_graph** out);
SGC_API sgc_status sgc_graph_read_file(const char* path, sgc_graph** out);
SGC_API sgc_status sgc_graph_fixture(const char* name, sgc_graph** out);
SGC_API sgc_status sgc_graph_complete(int n, int sign, sgc_graph** out);
SGC_API sgc_status sgc_graph_threshold(const int* code, size_t length, sgc_graph** out);
SGC_API void sgc_graph_free(sgc_graph* g);

SGC_API int sgc_graph_vertex_count(const sgc_graph* g);
SGC_API size_t sgc_graph_edge_count(const sgc_graph* g);
SGC_API sgc_status sgc_graph_to_json(const sgc_graph* g, char** out);
SGC_API sgc_status sgc_graph_to_text(const sgc_graph* g, char** out);
/* Comma separated fixture names. */
SGC_API sgc_status sgc_fixture_names(char** out);

/* Pair JSON: {"format","graph","even","odd","even_text","odd_text"}. */
SGC_API sgc_status sgc_chromatic_pair_json(const sgc_graph* g, const sgc_budget* budget, char** out);
SGC_API sgc_status sgc_bivariate_pair_json(const sgc_graph* g, const sgc_budget* budget, char** out);
/* Brute-force count of proper colourings with a (lambda, mu)-colour set, in decimal. */
SGC_API sgc_status sgc_oracle_count(const sgc_graph* g, long lambda, long mu,
                                    const sgc_budget* budget, char** out);

SGC_API sgc_status sgc_closed_form_json(int family, long l, long m, long n, char** out);
SGC_API sgc_status sgc_identities_text(int max_param, char** out, int* all_passed);
SGC_API sgc_status sgc_threshold_json(const int* code, size_t length, char** out);

/* mode: "iso", "switch" or "switching". */
SGC_API sgc_status sgc_enumerate_json(const sgc_graph* underlying, const char* mode,
                                      const sgc_budget* budget, char** out);
SGC_API sgc_status sgc_are_isomorphic(const sgc_graph* a, const sgc_graph* b,
                                      const sgc_budget* budget, int* result);
/* Writes the witness or the refutation transcript as JSON to *out. */
SGC_API sgc_status sgc_are_switching_isomorphic(const sgc_graph* a, const sgc_graph* b,
                                                const sgc_budget* budget, int* result, char** out);

/* Reports: *out gets JSON, *summary (optional) a one-line text summary,
   *passed is 1 on status pass. */
SGC_API sgc_status sgc_search_cochromatic(const sgc_graph* underlying,
                                          const sgc_verify_options* options, char** out,
                                          char** summary, int* passed);
/* conjecture: "cochromatic-complete", "threshold" or "bivariate-complete". */
SGC_API sgc_status sgc_verify(const char* conjecture, int n_max, const sgc_verify_options* options,
                              char** out, char** summary, int* passed);
SGC_API sgc_status sgc_reproduce_tables(const sgc_verify_options* options, char** out,
                                        char** summary, int* passed);
/* Default and stretch scale for a conjecture name, or -1 if unknown. */
SGC_API int sgc_verify_default_scale(const char* conjecture, int stretch);

#ifdef __cplusplus
}
#endif

#endif
