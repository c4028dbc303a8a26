#include "sgchrom/sgchrom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "sgchrom/chromatic.hpp"
#include "sgchrom/closed_form.hpp"
#include "sgchrom/equivalence.hpp"
#include "sgchrom/error.hpp"
#include "sgchrom/graph_io.hpp"
#include "sgchrom/json_format.hpp"
#include "sgchrom/verify.hpp"

struct sgc_graph {
  sgc::SignedGraph graph;
};

namespace {

thread_local std::string last_error;

static_assert(static_cast<int>(sgc::ErrorCode::UsageError) + 1 == SGC_ERR_USAGE,
              "status enum must track ErrorCode");

sgc_status to_status(sgc::ErrorCode code) {
  return static_cast<sgc_status>(static_cast<int>(code) + 1);
}

template <class Body>
sgc_status guard(Body body) {
  try {
    body();
    last_error.clear();
    return SGC_OK;
  } catch (const sgc::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return SGC_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sgc::Budget budget_of(const sgc_budget* b) {
  sgc::Budget out;
  if (!b) return out;
  out.max_subset_edges = b->max_subset_edges;
  out.max_oracle_evaluations = b->max_oracle_evaluations;
  out.max_orbit_edges = b->max_orbit_edges;
  out.max_search_nodes = b->max_search_nodes;
  out.threads = b->threads;
  return out;
}

sgc::VerifyOptions options_of(const sgc_verify_options* o) {
  sgc::VerifyOptions out;
  if (!o) return out;
  out.budget = budget_of(&o->budget);
  out.stretch = o->stretch != 0;
  out.seed = o->seed;
  return out;
}

sgc_graph* wrap(sgc::SignedGraph g) { return new sgc_graph{std::move(g)}; }

void emit_report(const sgc::VerificationReport& r, const sgc_verify_options* o, char** out,
                 char** summary, int* passed) {
  *out = dup_string(r.to_json(o && o->with_timing).dump(2) + "\n");
  if (summary) *summary = dup_string(r.summary());
  if (passed) *passed = r.passed() ? 1 : 0;
}

template <class Pair>
std::string pair_document(const sgc::SignedGraph& g, const Pair& pair) {
  sgc::Json j;
  j["format"] = sgc::kJsonFormatVersion;
  j["graph"] = sgc::to_json(g);
  j["even"] = sgc::to_json(pair.even);
  j["odd"] = sgc::to_json(pair.odd);
  j["even_text"] = sgc::to_string(pair.even);
  j["odd_text"] = sgc::to_string(pair.odd);
  return j.dump(2) + "\n";
}

}  // namespace

extern "C" {

const char* sgc_version(void) { return "1.0.0"; }

const char* sgc_status_name(sgc_status status) {
  switch (status) {
    case SGC_OK: return "ok";
    case SGC_ERR_NULL_ARGUMENT: return "NullArgument";
    case SGC_ERR_INTERNAL: return "Internal";
    default:
      if (status > SGC_OK && status <= SGC_ERR_USAGE)
        return sgc::error_code_name(static_cast<sgc::ErrorCode>(status - 1)).data();
      return "Unknown";
  }
}

const char* sgc_last_error(void) { return last_error.c_str(); }

void sgc_string_free(char* s) { std::free(s); }

void sgc_budget_default(sgc_budget* budget) {
  if (!budget) return;
  const sgc::Budget d;
  budget->max_subset_edges = d.max_subset_edges;
  budget->max_oracle_evaluations = d.max_oracle_evaluations;
  budget->max_orbit_edges = d.max_orbit_edges;
  budget->max_search_nodes = d.max_search_nodes;
  budget->threads = d.threads;
}

void sgc_verify_options_default(sgc_verify_options* options) {
  if (!options) return;
  sgc_budget_default(&options->budget);
  options->stretch = 0;
  options->seed = 1;
  options->with_timing = 0;
}

sgc_status sgc_graph_create(int n, const int* edges, size_t edge_count, sgc_graph** out) {
  if (!out || (edge_count > 0 && !edges)) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    if (n < 0) throw sgc::Error(sgc::ErrorCode::IndexOutOfRange, "negative vertex count");
    std::vector<sgc::RawEdge> raw;
    for (size_t i = 0; i < edge_count; ++i)
      raw.push_back({edges[3 * i], edges[3 * i + 1], edges[3 * i + 2]});
    *out = wrap(sgc::SignedGraph::build(n, std::span<const sgc::RawEdge>(raw)));
  });
}

sgc_status sgc_graph_parse(const char* text, sgc_graph** out) {
  if (!text || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] { *out = wrap(sgc::parse_graph_text(text)); });
}

sgc_status sgc_graph_read_file(const char* path, sgc_graph** out) {
  if (!path || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] { *out = wrap(sgc::read_graph_file(path)); });
}

sgc_status sgc_graph_fixture(const char* name, sgc_graph** out) {
  if (!name || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] { *out = wrap(sgc::fixture(name)); });
}

sgc_status sgc_graph_complete(int n, int sign, sgc_graph** out) {
  if (!out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    if (sign != 1 && sign != -1) throw sgc::Error(sgc::ErrorCode::BadSign, "sign must be +1 or -1");
    if (n < 0) throw sgc::Error(sgc::ErrorCode::IndexOutOfRange, "negative vertex count");
    *out = wrap(sgc::complete_graph(n, sign > 0 ? sgc::Sign::Positive : sgc::Sign::Negative));
  });
}

sgc_status sgc_graph_threshold(const int* code, size_t length, sgc_graph** out) {
  if (!out || (length > 0 && !code)) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    *out = wrap(sgc::threshold_graph(sgc::ThresholdCode(std::vector<int>(code, code + length))));
  });
}

void sgc_graph_free(sgc_graph* g) { delete g; }

int sgc_graph_vertex_count(const sgc_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t sgc_graph_edge_count(const sgc_graph* g) { return g ? g->graph.edge_count() : 0; }

sgc_status sgc_graph_to_json(const sgc_graph* g, char** out) {
  if (!g || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup_string(sgc::to_json(g->graph).dump()); });
}

sgc_status sgc_graph_to_text(const sgc_graph* g, char** out) {
  if (!g || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup_string(sgc::format_graph_text(g->graph)); });
}

sgc_status sgc_fixture_names(char** out) {
  if (!out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    std::string s;
    for (const auto& name : sgc::fixture_names()) s += (s.empty() ? "" : ",") + name;
    *out = dup_string(s);
  });
}

sgc_status sgc_chromatic_pair_json(const sgc_graph* g, const sgc_budget* budget, char** out) {
  if (!g || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    *out = dup_string(pair_document(g->graph, sgc::chromatic_pair(g->graph, budget_of(budget))));
  });
}

sgc_status sgc_bivariate_pair_json(const sgc_graph* g, const sgc_budget* budget, char** out) {
  if (!g || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    *out = dup_string(pair_document(g->graph, sgc::bivariate_pair(g->graph, budget_of(budget))));
  });
}

sgc_status sgc_oracle_count(const sgc_graph* g, long lambda, long mu, const sgc_budget* budget,
                            char** out) {
  if (!g || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto spec = sgc::make_colour_spec(lambda, mu);
    *out = dup_string(sgc::count_colourings_oracle(g->graph, spec, budget_of(budget)).get_str());
  });
}

sgc_status sgc_closed_form_json(int family, long l, long m, long n, char** out) {
  if (!out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto pair = sgc::join_pair(family, l, m, n);
    sgc::Json j;
    j["format"] = sgc::kJsonFormatVersion;
    j["family"] = family;
    j["l"] = l;
    j["m"] = m;
    j["n"] = n;
    j["graph"] = sgc::to_json(sgc::join_family_graph(family, l, m, n));
    j["even"] = sgc::to_json(pair.even);
    j["odd"] = sgc::to_json(pair.odd);
    j["even_text"] = sgc::to_string(pair.even);
    j["odd_text"] = sgc::to_string(pair.odd);
    *out = dup_string(j.dump(2) + "\n");
  });
}

sgc_status sgc_identities_text(int max_param, char** out, int* all_passed) {
  if (!out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto report = sgc::identity_suite(max_param);
    *out = dup_string(report.to_text());
    if (all_passed) *all_passed = report.all_passed() ? 1 : 0;
  });
}

sgc_status sgc_threshold_json(const int* code, size_t length, char** out) {
  if (!out || (length > 0 && !code)) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    const sgc::ThresholdCode tc(std::vector<int>(code, code + length));
    const auto pair = sgc::threshold_bivariate(tc);
    const auto uni = sgc::specialize_y(pair, 0);
    sgc::Json j;
    j["format"] = sgc::kJsonFormatVersion;
    j["code"] = tc.to_string();
    j["graph"] = sgc::to_json(sgc::threshold_graph(tc));
    j["even"] = sgc::to_json(pair.even);
    j["odd"] = sgc::to_json(pair.odd);
    j["even_text"] = sgc::to_string(pair.even);
    j["odd_text"] = sgc::to_string(pair.odd);
    j["univariate"] = sgc::to_json(uni);
    j["univariate_text"] = {{"even", sgc::to_string(uni.even)}, {"odd", sgc::to_string(uni.odd)}};
    *out = dup_string(j.dump(2) + "\n");
  });
}

sgc_status sgc_enumerate_json(const sgc_graph* underlying, const char* mode,
                              const sgc_budget* budget, char** out) {
  if (!underlying || !mode || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto b = budget_of(budget);
    const auto inv = sgc::enumerate_classes(underlying->graph, sgc::parse_mode(mode), b);
    sgc::Json j;
    j["format"] = sgc::kJsonFormatVersion;
    j["underlying"] = sgc::to_json(inv.underlying);
    j["mode"] = std::string(sgc::mode_name(inv.mode));
    j["class_count"] = inv.class_count();
    sgc::Json classes = sgc::Json::array();
    for (std::size_t c = 0; c < inv.class_count(); ++c) {
      sgc::Json k;
      k["mask"] = inv.masks[c];
      k["orbit_size"] = inv.orbit_sizes[c];
      k["graph"] = sgc::to_json(inv.representatives[c]);
      k["pair"] = sgc::to_json(sgc::chromatic_pair(inv.representatives[c], b));
      classes.push_back(k);
    }
    j["classes"] = classes;
    *out = dup_string(j.dump(2) + "\n");
  });
}

sgc_status sgc_are_isomorphic(const sgc_graph* a, const sgc_graph* b, const sgc_budget* budget,
                              int* result) {
  if (!a || !b || !result) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] { *result = sgc::are_isomorphic(a->graph, b->graph, budget_of(budget)) ? 1 : 0; });
}

sgc_status sgc_are_switching_isomorphic(const sgc_graph* a, const sgc_graph* b,
                                        const sgc_budget* budget, int* result, char** out) {
  if (!a || !b || !result) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto r = sgc::find_switching_isomorphism(a->graph, b->graph, budget_of(budget));
    *result = r.found ? 1 : 0;
    if (out) {
      sgc::Json j;
      j["switching_isomorphic"] = r.found;
      j["switching_set"] = r.switching_set;
      j["permutation"] = r.permutation;
      j["transcript"] = r.transcript;
      *out = dup_string(j.dump(2) + "\n");
    }
  });
}

sgc_status sgc_search_cochromatic(const sgc_graph* underlying, const sgc_verify_options* options,
                                  char** out, char** summary, int* passed) {
  if (!underlying || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    emit_report(sgc::search_cochromatic(underlying->graph, options_of(options)), options, out,
                summary, passed);
  });
}

sgc_status sgc_verify(const char* conjecture, int n_max, const sgc_verify_options* options,
                      char** out, char** summary, int* passed) {
  if (!conjecture || !out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] {
    const std::string c = conjecture;
    const auto o = options_of(options);
    sgc::VerificationReport r;
    if (c == "cochromatic-complete") r = sgc::verify_conj_cochromatic_complete(n_max, o);
    else if (c == "threshold") r = sgc::verify_conj_threshold(n_max, o);
    else if (c == "bivariate-complete") r = sgc::verify_conj_complete_bivariate(n_max, o);
    else throw sgc::Error(sgc::ErrorCode::UsageError, "unknown conjecture '" + c + "'");
    emit_report(r, options, out, summary, passed);
  });
}

sgc_status sgc_reproduce_tables(const sgc_verify_options* options, char** out, char** summary,
                                int* passed) {
  if (!out) return SGC_ERR_NULL_ARGUMENT;
  return guard([&] { emit_report(sgc::reproduce_tables(options_of(options)), options, out, summary, passed); });
}

int sgc_verify_default_scale(const char* conjecture, int stretch) {
  if (!conjecture) return -1;
  const std::string c = conjecture;
  if (c == "cochromatic-complete")
    return stretch ? sgc::kCochromaticCompleteStretch : sgc::kCochromaticCompleteDefault;
  if (c == "threshold") return stretch ? sgc::kThresholdStretch : sgc::kThresholdDefault;
  if (c == "bivariate-complete")
    return stretch ? sgc::kBivariateCompleteStretch : sgc::kBivariateCompleteDefault;
  return -1;
}

}  // extern "C"
