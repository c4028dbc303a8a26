#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "sgchrom/sgchrom.h"

static int failures = 0;
static int checks = 0;

#define CHECK(cond)                                                   \
  do {                                                                \
    ++checks;                                                         \
    if (!(cond)) {                                                    \
      ++failures;                                                     \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
    }                                                                 \
  } while (0)

static int contains(const char* haystack, const char* needle) {
  return haystack != NULL && strstr(haystack, needle) != NULL;
}

static void test_graphs(void) {
  const int edges[] = {0, 1, 1, 1, 2, -1};
  sgc_graph* g = NULL;
  CHECK(sgc_graph_create(3, edges, 2, &g) == SGC_OK);
  CHECK(sgc_graph_vertex_count(g) == 3);
  CHECK(sgc_graph_edge_count(g) == 2);
  char* text = NULL;
  CHECK(sgc_graph_to_text(g, &text) == SGC_OK);
  CHECK(contains(text, "e 1 2 -"));
  sgc_graph* back = NULL;
  CHECK(sgc_graph_parse(text, &back) == SGC_OK);
  CHECK(sgc_graph_edge_count(back) == 2);
  sgc_string_free(text);
  sgc_graph_free(back);
  sgc_graph_free(g);

  const int loop[] = {1, 1, 1};
  g = NULL;
  CHECK(sgc_graph_create(3, loop, 1, &g) == SGC_ERR_LOOP_EDGE);
  CHECK(g == NULL);
  CHECK(strlen(sgc_last_error()) > 0);
  const int bad_sign[] = {0, 1, 2};
  CHECK(sgc_graph_create(3, bad_sign, 1, &g) == SGC_ERR_BAD_SIGN);
  CHECK(sgc_graph_create(3, edges, 2, NULL) == SGC_ERR_NULL_ARGUMENT);
  CHECK(sgc_graph_parse("n x\n", &g) == SGC_ERR_PARSE);
  CHECK(sgc_graph_fixture("nope", &g) == SGC_ERR_UNKNOWN_FIXTURE);
  CHECK(sgc_graph_read_file("/nonexistent.sg", &g) == SGC_ERR_PARSE);

  CHECK(sgc_graph_fixture("petersen", &g) == SGC_OK);
  CHECK(sgc_graph_edge_count(g) == 15);
  char* json = NULL;
  CHECK(sgc_graph_to_json(g, &json) == SGC_OK);
  CHECK(contains(json, "\"edges\""));
  sgc_string_free(json);
  sgc_graph_free(g);

  const int code[] = {1, 1};
  CHECK(sgc_graph_threshold(code, 2, &g) == SGC_OK);
  CHECK(sgc_graph_edge_count(g) == 3);
  sgc_graph_free(g);
  const int bad_code[] = {3};
  CHECK(sgc_graph_threshold(bad_code, 1, &g) == SGC_ERR_BAD_CODE);

  char* names = NULL;
  CHECK(sgc_fixture_names(&names) == SGC_OK);
  CHECK(contains(names, "G1"));
  CHECK(contains(names, "petersen"));
  sgc_string_free(names);
  sgc_graph_free(NULL);
}

static void test_polynomials(void) {
  sgc_budget budget;
  sgc_budget_default(&budget);
  CHECK(budget.max_subset_edges > 0);
  sgc_graph* g = NULL;
  CHECK(sgc_graph_fixture("G1", &g) == SGC_OK);
  char* out = NULL;
  CHECK(sgc_chromatic_pair_json(g, &budget, &out) == SGC_OK);
  CHECK(contains(out, "x^5 - 7*x^4 + 19*x^3 - 24*x^2 + 12*x"));
  CHECK(contains(out, "x^5 - 7*x^4 + 19*x^3 - 25*x^2 + 16*x - 4"));
  sgc_string_free(out);
  CHECK(sgc_bivariate_pair_json(g, NULL, &out) == SGC_OK);
  CHECK(contains(out, "\"even_text\""));
  sgc_string_free(out);
  CHECK(sgc_oracle_count(g, 3, 0, &budget, &out) == SGC_OK);
  CHECK(out != NULL && strcmp(out, "8") == 0);
  sgc_string_free(out);
  CHECK(sgc_oracle_count(g, 2, 3, &budget, &out) == SGC_ERR_BAD_RANGE);
  sgc_graph_free(g);

  CHECK(sgc_graph_fixture("petersen", &g) == SGC_OK);
  budget.max_subset_edges = 8;
  CHECK(sgc_chromatic_pair_json(g, &budget, &out) == SGC_ERR_BUDGET_EXCEEDED);
  sgc_graph_free(g);

  CHECK(sgc_closed_form_json(1, 1, 1, 1, &out) == SGC_OK);
  CHECK(contains(out, "x^3 - 3*x^2 + 2*x"));
  sgc_string_free(out);
  CHECK(sgc_closed_form_json(9, 1, 1, 1, &out) == SGC_ERR_BAD_INDEX);
  CHECK(sgc_closed_form_json(1, -1, 1, 1, &out) == SGC_ERR_NEGATIVE_PARAMETER);

  int all_passed = 0;
  CHECK(sgc_identities_text(2, &out, &all_passed) == SGC_OK);
  CHECK(all_passed == 1);
  CHECK(contains(out, "ix"));
  sgc_string_free(out);
  CHECK(sgc_identities_text(-1, &out, &all_passed) == SGC_ERR_BAD_RANGE);

  const int code[] = {1, -1, 0, -1, 1, 0, 1};
  CHECK(sgc_threshold_json(code, 7, &out) == SGC_OK);
  CHECK(contains(out, "\"univariate\""));
  sgc_string_free(out);
}

static void test_equivalence(void) {
  sgc_graph* a = NULL;
  sgc_graph* b = NULL;
  CHECK(sgc_graph_fixture("G1", &a) == SGC_OK);
  CHECK(sgc_graph_fixture("G2", &b) == SGC_OK);
  int result = -1;
  CHECK(sgc_are_isomorphic(a, b, NULL, &result) == SGC_OK);
  CHECK(result == 0);
  char* out = NULL;
  CHECK(sgc_are_switching_isomorphic(a, b, NULL, &result, &out) == SGC_OK);
  CHECK(result == 0);
  CHECK(contains(out, "transcript"));
  sgc_string_free(out);
  CHECK(sgc_are_switching_isomorphic(a, a, NULL, &result, NULL) == SGC_OK);
  CHECK(result == 1);
  sgc_graph_free(b);

  sgc_graph* k = NULL;
  CHECK(sgc_graph_complete(4, 1, &k) == SGC_OK);
  CHECK(sgc_enumerate_json(k, "switch", NULL, &out) == SGC_OK);
  CHECK(contains(out, "\"class_count\": 3"));
  sgc_string_free(out);
  CHECK(sgc_enumerate_json(k, "iso", NULL, &out) == SGC_OK);
  CHECK(contains(out, "\"class_count\": 11"));
  sgc_string_free(out);
  CHECK(sgc_enumerate_json(k, "bogus", NULL, &out) == SGC_ERR_USAGE);
  CHECK(sgc_graph_complete(3, 0, &b) == SGC_ERR_BAD_SIGN);
  sgc_graph_free(k);
  sgc_graph_free(a);
}

static void test_reports(void) {
  sgc_verify_options options;
  sgc_verify_options_default(&options);
  CHECK(options.stretch == 0);
  char* out = NULL;
  char* summary = NULL;
  int passed = 0;
  sgc_graph* gem = NULL;
  CHECK(sgc_graph_fixture("gem", &gem) == SGC_OK);
  CHECK(sgc_search_cochromatic(gem, &options, &out, &summary, &passed) == SGC_OK);
  CHECK(passed == 1);
  CHECK(contains(out, "\"cochromatic_group_count\": 1"));
  CHECK(summary != NULL);
  sgc_string_free(out);
  sgc_string_free(summary);
  sgc_graph_free(gem);

  CHECK(sgc_verify("threshold", 4, &options, &out, NULL, &passed) == SGC_OK);
  CHECK(passed == 1);
  CHECK(!contains(out, "elapsed_seconds"));
  sgc_string_free(out);
  options.with_timing = 1;
  CHECK(sgc_verify("cochromatic-complete", 4, &options, &out, NULL, &passed) == SGC_OK);
  CHECK(contains(out, "elapsed_seconds"));
  sgc_string_free(out);
  CHECK(sgc_verify("threshold", 20, &options, &out, NULL, &passed) == SGC_ERR_BAD_RANGE);
  CHECK(sgc_verify("unknown", 3, &options, &out, NULL, &passed) == SGC_ERR_USAGE);
  CHECK(sgc_verify_default_scale("threshold", 0) == 8);
  CHECK(sgc_verify_default_scale("threshold", 1) == 12);
  CHECK(sgc_verify_default_scale("unknown", 0) == -1);

  CHECK(strcmp(sgc_status_name(SGC_OK), "ok") == 0);
  CHECK(strlen(sgc_version()) > 0);
}

int main(void) {
  test_graphs();
  test_polynomials();
  test_equivalence();
  test_reports();
  printf("%d checks, %d failures\n", checks, failures);
  return failures == 0 ? 0 : 1;
}
