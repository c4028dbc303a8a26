#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgchrom/sgchrom.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  sgc_status status;
  std::string message;
};

void check(sgc_status s) {
  if (s != SGC_OK) throw CliError{s, sgc_last_error()};
}

struct StringOut {
  char* p = nullptr;
  ~StringOut() { sgc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphDeleter {
  void operator()(sgc_graph* g) const { sgc_graph_free(g); }
};
using Graph = std::unique_ptr<sgc_graph, GraphDeleter>;

// FILE, fixture:NAME, one of the fixture names, or complete:N / -complete:N.
Graph resolve_graph(const std::string& spec) {
  sgc_graph* g = nullptr;
  auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
  if (starts("complete:") || starts("-complete:")) {
    const bool negative = spec[0] == '-';
    const std::string count = spec.substr(spec.find(':') + 1);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(count, &used);
      if (used != count.size()) throw std::invalid_argument(count);
    } catch (const std::exception&) {
      throw CliError{SGC_ERR_USAGE, "bad vertex count in '" + spec + "'"};
    }
    check(sgc_graph_complete(n, negative ? -1 : 1, &g));
  } else if (starts("fixture:")) {
    check(sgc_graph_fixture(spec.substr(8).c_str(), &g));
  } else if (!std::ifstream(spec).good() && sgc_graph_fixture(spec.c_str(), &g) == SGC_OK) {
    // bare fixture name
  } else {
    check(sgc_graph_read_file(spec.c_str(), &g));
  }
  return Graph(g);
}

std::vector<int> parse_code(const std::string& text) {
  std::vector<int> code;
  if (text.empty() || text == "()") return code;
  std::string body = text;
  if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      code.push_back(v);
    } catch (const std::exception&) {
      throw CliError{SGC_ERR_PARSE, "bad threshold code entry '" + item + "'"};
    }
  }
  return code;
}

struct Settings {
  sgc_verify_options options{};
  std::string output = "json";
  bool timing = false;
};

void print_pair_text(const nlohmann::ordered_json& j) {
  std::cout << "even: " << j.at("even_text").get<std::string>() << "\n";
  std::cout << "odd:  " << j.at("odd_text").get<std::string>() << "\n";
}

int emit_report(const Settings& s, const StringOut& json, const StringOut& summary, int passed) {
  if (s.output == "json") {
    std::cout << json.str();
  } else {
    auto j = nlohmann::ordered_json::parse(json.str());
    std::cout << j.at("target").get<std::string>() << ": " << j.at("status").get<std::string>()
              << "\n";
    std::cout << j.at("details").dump(2) << "\n";
  }
  std::cerr << summary.str() << "\n";
  return passed ? kExitPass : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even/odd and bivariate chromatic polynomials of signed graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  sgc_verify_options_default(&s.options);
  sgc_budget& budget = s.options.budget;

  app.add_option("--subset-budget", budget.max_subset_edges, "largest |E| for the subset expansion")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-budget", budget.max_oracle_evaluations,
                 "largest |C|^n for the brute-force oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--orbit-budget", budget.max_orbit_edges, "largest |E| for orbit enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--search-budget", budget.max_search_nodes, "backtracking nodes per search")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", budget.threads, "worker threads (0 = automatic)");
  app.add_option("--output", s.output, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", s.options.seed, "seed for sampled checks");
  app.add_flag("--timing", s.timing, "include wall time in JSON reports");

  std::string graph_file;
  bool bivariate = false;
  auto* chrom = app.add_subcommand("chrom", "chromatic pair of a signed graph");
  chrom->add_option("graph", graph_file, "graph file, fixture:NAME or complete:N")->required();
  chrom->add_flag("--bivariate", bivariate, "bivariate pair instead");

  long lambda = 0, mu = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force count of proper colourings");
  oracle->add_option("graph", graph_file, "graph file, fixture:NAME or complete:N")->required();
  oracle->add_option("--lambda", lambda, "paired colours plus zero")->required();
  oracle->add_option("--mu", mu, "unpaired colours");

  int family = 1;
  long l = 0, m = 0, n = 0;
  auto* closed = app.add_subcommand("closed-form", "chromatic pair of a join family");
  closed->add_option("--family", family, "1..4")->required()->check(CLI::Range(1, 4));
  closed->add_option("-l", l)->required();
  closed->add_option("-m", m)->required();
  closed->add_option("-n", n)->required();

  int max_param = 4;
  auto* identities = app.add_subcommand("identities", "check the join identities");
  identities->add_option("--max", max_param, "largest parameter")->check(CLI::NonNegativeNumber);

  std::string code_text;
  auto* threshold = app.add_subcommand("threshold", "bivariate pair of a signed threshold graph");
  threshold->add_option("--code", code_text, "comma separated entries in {-1,0,1}")->required();

  std::string underlying, mode = "switch";
  auto* enumerate = app.add_subcommand("enumerate", "signature classes over an underlying graph");
  enumerate->add_option("--underlying", underlying, "petersen, gem, complete:N, fixture:NAME or FILE")
      ->required();
  enumerate->add_option("--mode", mode)->check(CLI::IsMember({"iso", "switch", "switching"}));

  auto* search = app.add_subcommand("search-cochromatic", "co-chromatic classes over a graph");
  search->add_option("--underlying", underlying, "petersen, gem, complete:N, fixture:NAME or FILE")
      ->required();

  std::string conjecture;
  std::optional<int> scale;
  bool stretch = false;
  auto* verify = app.add_subcommand("verify", "check a conjecture up to a bound");
  verify->add_option("--conjecture", conjecture)
      ->required()
      ->check(CLI::IsMember({"cochromatic-complete", "threshold", "bivariate-complete"}));
  verify->add_option("--max", scale, "largest n (defaults to the desk scale)");
  verify->add_flag("--stretch", stretch, "allow larger bounds, use the complete-graph fast path");

  auto* tables = app.add_subcommand("reproduce-tables", "recompute the reference tables and polynomials");

  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "list fixtures or print one");
  fixtures->add_option("--name", fixture_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  s.options.with_timing = s.timing ? 1 : 0;

  try {
    const bool json = s.output == "json";
    if (*chrom) {
      Graph g = resolve_graph(graph_file);
      StringOut out;
      check(bivariate ? sgc_bivariate_pair_json(g.get(), &budget, &out.p)
                      : sgc_chromatic_pair_json(g.get(), &budget, &out.p));
      if (json) std::cout << out.str();
      else print_pair_text(nlohmann::ordered_json::parse(out.str()));
    } else if (*oracle) {
      Graph g = resolve_graph(graph_file);
      StringOut out;
      check(sgc_oracle_count(g.get(), lambda, mu, &budget, &out.p));
      if (json) {
        nlohmann::ordered_json j;
        j["format"] = 1;
        j["lambda"] = lambda;
        j["mu"] = mu;
        j["count"] = out.str();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << out.str() << "\n";
      }
    } else if (*closed) {
      StringOut out;
      check(sgc_closed_form_json(family, l, m, n, &out.p));
      if (json) std::cout << out.str();
      else print_pair_text(nlohmann::ordered_json::parse(out.str()));
    } else if (*identities) {
      StringOut out;
      int ok = 0;
      check(sgc_identities_text(max_param, &out.p, &ok));
      std::cout << out.str();
      return ok ? kExitPass : kExitFailed;
    } else if (*threshold) {
      const auto code = parse_code(code_text);
      StringOut out;
      check(sgc_threshold_json(code.data(), code.size(), &out.p));
      if (json) {
        std::cout << out.str();
      } else {
        auto j = nlohmann::ordered_json::parse(out.str());
        print_pair_text(j);
        std::cout << "even at y=0: " << j["univariate_text"]["even"].get<std::string>() << "\n";
        std::cout << "odd at y=0:  " << j["univariate_text"]["odd"].get<std::string>() << "\n";
      }
    } else if (*enumerate) {
      Graph g = resolve_graph(underlying);
      StringOut out;
      check(sgc_enumerate_json(g.get(), mode.c_str(), &budget, &out.p));
      if (json) {
        std::cout << out.str();
      } else {
        auto j = nlohmann::ordered_json::parse(out.str());
        std::cout << j["class_count"] << " classes (" << j["mode"].get<std::string>() << ")\n";
        for (const auto& c : j["classes"])
          std::cout << "mask " << c["mask"] << "  orbit " << c["orbit_size"] << "\n";
      }
    } else if (*search) {
      Graph g = resolve_graph(underlying);
      StringOut out, summary;
      int passed = 0;
      check(sgc_search_cochromatic(g.get(), &s.options, &out.p, &summary.p, &passed));
      return emit_report(s, out, summary, passed);
    } else if (*verify) {
      s.options.stretch = stretch ? 1 : 0;
      const int bound = scale.value_or(sgc_verify_default_scale(conjecture.c_str(), 0));
      StringOut out, summary;
      int passed = 0;
      check(sgc_verify(conjecture.c_str(), bound, &s.options, &out.p, &summary.p, &passed));
      return emit_report(s, out, summary, passed);
    } else if (*tables) {
      StringOut out, summary;
      int passed = 0;
      check(sgc_reproduce_tables(&s.options, &out.p, &summary.p, &passed));
      return emit_report(s, out, summary, passed);
    } else if (*fixtures) {
      if (fixture_name.empty()) {
        StringOut names;
        check(sgc_fixture_names(&names.p));
        std::stringstream ss(names.str());
        std::string item;
        while (std::getline(ss, item, ',')) std::cout << item << "\n";
      } else {
        Graph g = resolve_graph("fixture:" + fixture_name);
        StringOut out;
        check(json ? sgc_graph_to_json(g.get(), &out.p) : sgc_graph_to_text(g.get(), &out.p));
        std::cout << out.str();
        if (json) std::cout << "\n";
      }
    }
  } catch (const CliError& e) {
    std::cerr << "error (" << sgc_status_name(e.status) << "): " << e.message << "\n";
    return kExitUsage;
  }
  return kExitPass;
}
