#include "sgchrom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "sgchrom/equivalence.hpp"
#include "sgchrom/error.hpp"

namespace sgc {
namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_ = Clock::now();
};

void check_scale(int n_max, int lo, int default_max, int stretch_max, bool stretch,
                 const std::string& what) {
  const int limit = stretch ? stretch_max : default_max;
  if (n_max < lo || n_max > limit)
    fail(ErrorCode::BadRange, what + ": max must be in " + std::to_string(lo) + ".." +
                                  std::to_string(limit) +
                                  (stretch ? "" : " (larger scales need stretch mode)"));
}

Json transcript_json(const SwitchingIsomorphismResult& r) {
  Json t = Json::array();
  for (const auto& line : r.transcript) t.push_back(line);
  return t;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<int> random_subset(int n, std::mt19937_64& rng) {
  std::vector<int> s;
  for (int v = 0; v < n; ++v)
    if (rng() & 1U) s.push_back(v);
  return s;
}

ChromaticPair complete_chromatic(const SignedGraph& g, bool fast, const Budget& budget) {
  if (fast) return specialize_y(complete_bivariate_pair(g), 0);
  return chromatic_pair(g, budget);
}

BiPoly complete_even_bivariate(const SignedGraph& g, bool fast, const Budget& budget) {
  if (fast) return complete_bivariate_pair(g).even;
  return bivariate_pair(g, budget).even;
}

template <class Body>
VerificationReport guarded(std::string target, long scale, Body body) {
  Timer timer;
  VerificationReport report;
  report.target = std::move(target);
  report.scale = scale;
  try {
    body(report);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    report.status = VerifyStatus::BudgetExceeded;
    report.details["budget_error"] = e.what();
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

}  // namespace

std::string_view status_name(VerifyStatus status) noexcept {
  switch (status) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Counterexample: return "counterexample";
    case VerifyStatus::BudgetExceeded: return "budget_exceeded";
    case VerifyStatus::Fail: return "fail";
  }
  return "unknown";
}

Json VerificationReport::to_json(bool with_timing) const {
  Json j;
  j["format"] = kJsonFormatVersion;
  j["target"] = target;
  j["scale"] = scale;
  j["status"] = std::string(status_name(status));
  j["details"] = details;
  if (with_timing) j["elapsed_seconds"] = elapsed_seconds;
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << target << " (scale " << scale << "): " << status_name(status);
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " in " << elapsed_seconds << " s";
  return os.str();
}

std::uint64_t unlabelled_graph_count(int n) {
  static constexpr std::uint64_t counts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
  if (n < 0 || n > 10) fail(ErrorCode::BadRange, "unlabelled graph counts are tabulated for n <= 10");
  return counts[n];
}

// ------------------------------------------------------------------ co-chromatic search

VerificationReport search_cochromatic(const SignedGraph& underlying, const VerifyOptions& options) {
  return guarded("search-cochromatic", static_cast<long>(underlying.edge_count()),
                 [&](VerificationReport& report) {
    const auto inv = enumerate_classes(underlying, EquivalenceMode::SwitchingIsomorphism,
                                       options.budget);
    std::map<std::string, std::vector<std::size_t>> by_pair;
    std::vector<ChromaticPair> pairs;
    for (std::size_t c = 0; c < inv.class_count(); ++c) {
      pairs.push_back(chromatic_pair(inv.representatives[c], options.budget));
      by_pair[canonical_key(pairs.back())].push_back(c);
    }
    Json groups = Json::array();
    bool certified = true;
    for (const auto& [key, members] : by_pair) {
      if (members.size() < 2) continue;
      Json g;
      g["pair"] = to_json(pairs[members.front()]);
      Json ms = Json::array();
      for (auto c : members) {
        Json m;
        m["mask"] = inv.masks[c];
        m["balanced"] = is_balanced(inv.representatives[c]);
        m["graph"] = to_json(inv.representatives[c]);
        ms.push_back(m);
      }
      g["members"] = ms;
      Json certs = Json::array();
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          auto r = find_switching_isomorphism(inv.representatives[members[a]],
                                              inv.representatives[members[b]], options.budget);
          if (r.found) certified = false;
          Json cert;
          cert["masks"] = Json::array({inv.masks[members[a]], inv.masks[members[b]]});
          cert["switching_isomorphic"] = r.found;
          cert["transcript"] = transcript_json(r);
          certs.push_back(cert);
        }
      g["certificates"] = certs;
      groups.push_back(g);
    }
    report.details["underlying"] = to_json(inv.underlying);
    report.details["class_count"] = inv.class_count();
    report.details["cochromatic_group_count"] = groups.size();
    report.details["groups"] = groups;
    if (!certified) {
      report.status = VerifyStatus::Fail;
      report.details["error"] = "two enumerated classes were found switching isomorphic";
    }
  });
}

// ------------------------------------------------------------------ complete graphs, chromatic pairs

VerificationReport verify_conj_cochromatic_complete(int n_max, const VerifyOptions& options) {
  check_scale(n_max, 1, kCochromaticCompleteDefault, kCochromaticCompleteStretch, options.stretch,
              "cochromatic-complete");
  return guarded("cochromatic-complete", n_max, [&](VerificationReport& report) {
    std::mt19937_64 rng(options.seed);
    Json per_n = Json::array();
    std::size_t total = 0;
    for (int n = 1; n <= n_max; ++n) {
      const auto inv = enumerate_classes(complete_graph(n, Sign::Positive),
                                         EquivalenceMode::SwitchingIsomorphism, options.budget);
      std::map<std::string, std::size_t> seen;
      std::size_t samples = 0;
      for (std::size_t c = 0; c < inv.class_count(); ++c) {
        const auto& g = inv.representatives[c];
        const auto pair = complete_chromatic(g, options.stretch, options.budget);
        // A random member of the class must give the same pair.
        const auto sub = random_subset(n, rng);
        const auto perm = random_permutation(n, rng);
        const auto member = relabel(switch_vertices(g, sub), perm);
        ++samples;
        if (!(complete_chromatic(member, options.stretch, options.budget) == pair)) {
          report.status = VerifyStatus::Fail;
          report.details["error"] = "a switched relabelled member changed the chromatic pair";
          report.details["graph"] = to_json(g);
          report.details["member"] = to_json(member);
          return;
        }
        auto [it, fresh] = seen.emplace(canonical_key(pair), c);
        if (!fresh) {
          const auto& other = inv.representatives[it->second];
          auto r = find_switching_isomorphism(other, g, options.budget);
          report.status = VerifyStatus::Counterexample;
          Json cx;
          cx["n"] = n;
          cx["graphs"] = Json::array({to_json(other), to_json(g)});
          cx["pair"] = to_json(pair);
          cx["switching_isomorphic"] = r.found;
          cx["transcript"] = transcript_json(r);
          report.details["counterexample"] = cx;
          return;
        }
      }
      Json row;
      row["n"] = n;
      row["classes"] = inv.class_count();
      row["distinct_pairs"] = seen.size();
      row["sampled_members"] = samples;
      per_n.push_back(row);
      total += inv.class_count();
    }
    report.details["fast_path"] = options.stretch;
    report.details["per_n"] = per_n;
    report.details["total_classes"] = total;
  });
}

// ------------------------------------------------------------------ threshold graphs

namespace {

struct ThresholdWalk {
  int n_max;
  std::vector<std::map<std::string, std::vector<int>>> seen;
  std::vector<int> code;
  bool collision = false;
  std::vector<int> first, second;
  int collision_length = -1;
  std::string collision_key;

  void visit(const BivariatePair& pair) {
    const int d = static_cast<int>(code.size());
    auto key = canonical_key(pair.even);
    auto [it, fresh] = seen[static_cast<std::size_t>(d)].emplace(key, code);
    if (!fresh && !collision) {
      collision = true;
      first = it->second;
      second = code;
      collision_length = d;
      collision_key = key;
    }
    if (collision || d == n_max) return;
    for (int entry : {-1, 0, 1}) {
      code.push_back(entry);
      visit(add_vertex_step(pair, entry));
      code.pop_back();
      if (collision) return;
    }
  }
};

}  // namespace

VerificationReport verify_conj_threshold(int n_max, const VerifyOptions& options) {
  check_scale(n_max, 0, kThresholdDefault, kThresholdStretch, options.stretch, "threshold");
  return guarded("threshold", n_max, [&](VerificationReport& report) {
    ThresholdWalk walk;
    walk.n_max = n_max;
    walk.seen.resize(static_cast<std::size_t>(n_max) + 1);
    walk.visit(BivariatePair{BiPoly::x(), BiPoly::x()});
    if (walk.collision) {
      report.status = VerifyStatus::Counterexample;
      Json cx;
      cx["length"] = walk.collision_length;
      cx["codes"] = Json::array({ThresholdCode(walk.first).to_string(),
                                 ThresholdCode(walk.second).to_string()});
      cx["graphs"] = Json::array({to_json(threshold_graph(ThresholdCode(walk.first))),
                                  to_json(threshold_graph(ThresholdCode(walk.second)))});
      cx["even"] = to_json(threshold_bivariate(ThresholdCode(walk.first)).even);
      report.details["counterexample"] = cx;
      return;
    }
    Json per_n = Json::array();
    for (int d = 0; d <= n_max; ++d) {
      Json row;
      row["n"] = d;
      row["codes"] = walk.seen[static_cast<std::size_t>(d)].size();
      row["distinct_even"] = walk.seen[static_cast<std::size_t>(d)].size();
      per_n.push_back(row);
    }
    report.details["per_n"] = per_n;
    report.details["codes_at_max"] = walk.seen.back().size();
  });
}

// ------------------------------------------------------------------ complete graphs, bivariate

VerificationReport verify_conj_complete_bivariate(int n_max, const VerifyOptions& options) {
  check_scale(n_max, 1, kBivariateCompleteDefault, kBivariateCompleteStretch, options.stretch,
              "bivariate-complete");
  return guarded("bivariate-complete", n_max, [&](VerificationReport& report) {
    std::mt19937_64 rng(options.seed);
    Json per_n = Json::array();
    for (int n = 1; n <= n_max; ++n) {
      const auto inv = enumerate_classes(complete_graph(n, Sign::Positive),
                                         EquivalenceMode::Isomorphism, options.budget);
      const auto expected = unlabelled_graph_count(n);
      if (inv.class_count() != expected) {
        report.status = VerifyStatus::Fail;
        report.details["error"] = "isomorphism class count of signed K_" + std::to_string(n) +
                                  " is " + std::to_string(inv.class_count()) + ", expected " +
                                  std::to_string(expected);
        return;
      }
      std::map<std::string, std::size_t> seen;
      for (std::size_t c = 0; c < inv.class_count(); ++c) {
        const auto& g = inv.representatives[c];
        const auto even = complete_even_bivariate(g, options.stretch, options.budget);
        const auto member = relabel(g, random_permutation(n, rng));
        if (!(complete_even_bivariate(member, options.stretch, options.budget) == even)) {
          report.status = VerifyStatus::Fail;
          report.details["error"] = "a relabelled member changed the even bivariate polynomial";
          report.details["graph"] = to_json(g);
          return;
        }
        auto [it, fresh] = seen.emplace(canonical_key(even), c);
        if (!fresh) {
          report.status = VerifyStatus::Counterexample;
          Json cx;
          cx["n"] = n;
          cx["graphs"] = Json::array({to_json(inv.representatives[it->second]), to_json(g)});
          cx["even"] = to_json(even);
          cx["isomorphic"] = are_isomorphic(inv.representatives[it->second], g, options.budget);
          report.details["counterexample"] = cx;
          return;
        }
      }
      Json row;
      row["n"] = n;
      row["classes"] = inv.class_count();
      row["expected_classes"] = expected;
      row["distinct_even"] = seen.size();
      per_n.push_back(row);
    }
    report.details["fast_path"] = options.stretch;
    report.details["per_n"] = per_n;
  });
}

// ------------------------------------------------------------------ reference values

namespace {

struct PairText {
  const char* label;
  const char* even;
  const char* odd;
};

const PairText kPetersenRows[] = {
    {"P1", "x(x-1)(x-2)(x^7-12x^6+67x^5-230x^4+529x^3-814x^2+775x-352)",
     "x(x-1)(x-2)(x^7-12x^6+67x^5-230x^4+529x^3-814x^2+775x-352)"},
    {"P2", "x(x-2)(x^8-13x^7+79x^6-297x^5+763x^4-1379x^3+1717x^2-1351x+516)",
     "(x-1)^2(x-2)^2(x^6-9x^5+38x^4-98x^3+163x^2-165x+82)"},
    {"P3", "x(x-2)(x^8-13x^7+79x^6-297x^5+765x^4-1397x^3+1781x^2-1462x+597)",
     "(x-1)(x^9-14x^8+91x^7-364x^6+995x^5-1938x^4+2703x^3-2621x^2+1619x-492)"},
    {"P4", "x(x-2)(x^8-13x^7+79x^6-297x^5+767x^4-1411x^3+1823x^2-1524x+635)",
     "(x-1)(x^9-14x^8+91x^7-364x^6+997x^5-1956x^4+2773x^3-2767x^2+1781x-568)"},
    {"P5", "x(x-2)(x^8-13x^7+79x^6-297x^5+765x^4-1401x^3+1803x^2-1509x+632)",
     "(x-1)(x-2)^2(x^2-4x+5)(x^5-6x^4+18x^3-34x^2+37x-28)"},
    {"P6", "x(x^9-15x^8+105x^7-455x^6+1365x^5-2981x^4+4785x^3-5460x^2+4005x-1425)",
     "(x-1)(x^9-14x^8+91x^7-364x^6+1001x^5-1992x^4+2913x^3-3057x^2+2103x-727)"},
};

const PairText kK3Rows[] = {
    {"K3(1)", "x(x-1)(x-2)", "x(x-1)(x-2)"},
    {"K3(2)", "x(x^2 - 3x + 3)", "(x-1)^3"},
};

const PairText kK4Rows[] = {
    {"K4(1)", "x(x-1)(x-2)(x-3)", "x(x-1)(x-2)(x-3)"},
    {"K4(2)", "x(x-2)(x^2-4x+5)", "(x-1)^2 (x-2)^2"},
    {"K4(3)", "x(x^3-6x^2+15x-13)", "(x-1)(x^3-5x^2+10x-7)"},
};

const PairText kK5Rows[] = {
    {"K5(1)", "x(x-1)(x-2)(x-3)(x-4)", "x(x-1)(x-2)(x-3)(x-4)"},
    {"K5(2)", "x(x-2)(x-3)(x^2-5x+7)", "(x-1)^2 (x-2) (x-3)^2"},
    {"K5(3)", "x(x-2)(x^3-8x^2+25x-29)", "(x-1)(x-2)(x^3-7x^2+18x-17)"},
    {"K5(4)", "x(x-2)(x-3)(x^2-5x+8)", "(x-1)(x-2)^3(x-3)"},
    {"K5(5)", "x(x-2)(x^3-8x^2+26x-31)", "(x-1)(x-2)(x^3-7x^2+19x-19)"},
    {"K5(6)", "x(x-2)(x-3)(x^2-5x+9)", "(x-1)(x-2)(x-3)(x^2-4x+5)"},
    {"K5(7)", "x(x^4-10x^3+45x^2-95x+75)", "(x-1)(x^4-9x^3+36x^2-69x+51)"},
};

ChromaticPair parse_pair(const PairText& t) {
  return {parse_unipoly(t.even), parse_unipoly(t.odd)};
}

class Reproduction {
 public:
  explicit Reproduction(const VerifyOptions& options) : options_(options) {}

  void table(const std::string& name, const SignedGraph& underlying, std::span<const PairText> rows) {
    Json section;
    section["name"] = name;
    const auto inv = enumerate_classes(underlying, EquivalenceMode::SwitchingIsomorphism,
                                       options_.budget);
    section["classes"] = inv.class_count();
    section["expected_classes"] = rows.size();
    std::multiset<std::string> computed, expected;
    std::map<std::string, std::uint64_t> mask_of;
    for (std::size_t c = 0; c < inv.class_count(); ++c) {
      auto key = canonical_key(chromatic_pair(inv.representatives[c], options_.budget));
      computed.insert(key);
      mask_of[key] = inv.masks[c];
    }
    Json matches = Json::array();
    for (const auto& row : rows) {
      auto key = canonical_key(parse_pair(row));
      expected.insert(key);
      Json m;
      m["row"] = row.label;
      auto it = mask_of.find(key);
      if (it == mask_of.end()) m["class_mask"] = nullptr;
      else m["class_mask"] = it->second;
      matches.push_back(m);
    }
    section["rows"] = matches;
    finish(section, computed == expected && inv.class_count() == rows.size());
  }

  void pair_equals(const std::string& name, const std::vector<SignedGraph>& graphs,
                   const ChromaticPair& expected) {
    Json section;
    section["name"] = name;
    section["expected"] = to_json(expected);
    bool ok = true;
    for (const auto& g : graphs) ok = ok && chromatic_pair(g, options_.budget) == expected;
    finish(section, ok);
  }

  void bipair_equals(const std::string& name, const std::vector<SignedGraph>& graphs,
                     const BivariatePair& expected) {
    Json section;
    section["name"] = name;
    section["expected"] = to_json(expected);
    bool ok = true;
    for (const auto& g : graphs) ok = ok && bivariate_pair(g, options_.budget) == expected;
    finish(section, ok);
  }

  void check(const std::string& name, bool ok, Json info = Json::object()) {
    info["name"] = name;
    finish(info, ok);
  }

  Json sections = Json::array();
  bool all_ok = true;

 private:
  void finish(Json& section, bool ok) {
    section["status"] = ok ? "pass" : "fail";
    all_ok = all_ok && ok;
    sections.push_back(section);
  }

  const VerifyOptions& options_;
};

}  // namespace

VerificationReport reproduce_tables(const VerifyOptions& options) {
  return guarded("reproduce-tables", 0, [&](VerificationReport& report) {
    Reproduction rep(options);
    rep.table("complete K3 classes", complete_graph(3, Sign::Positive), kK3Rows);
    rep.table("complete K4 classes", complete_graph(4, Sign::Positive), kK4Rows);
    rep.table("complete K5 classes", complete_graph(5, Sign::Positive), kK5Rows);
    rep.table("petersen classes", fixture("petersen"), kPetersenRows);

    const auto G1 = fixture("G1"), G2 = fixture("G2");
    const auto S1 = fixture("Sigma1"), S2 = fixture("Sigma2");
    const auto S3 = fixture("Sigma3"), S4 = fixture("Sigma4");

    rep.pair_equals("gem pair G1 G2", {G1, G2},
                    {parse_unipoly("x (x-2)^2 (x^2 - 3x +3)"), parse_unipoly("(x-1)^3 (x-2)^2")});
    rep.pair_equals("sigma1 sigma2 pair", {S1, S2},
                    {parse_unipoly("x (x-1) (x-2)^2 (x^2 - 3x +3)"),
                     parse_unipoly("(x-1)^4 (x-2)^2")});
    rep.bipair_equals("gem bivariate G1 G2", {G1, G2},
                      {parse_bipoly("(x-2)^2 (x^3-3x^2+xy +3x-2y)"),
                       parse_bipoly("(x-2)^2 (x^3-3x^2+xy +3x-2y-1)")});
    rep.bipair_equals("sigma1 sigma2 bivariate", {S1, S2},
                      {parse_bipoly("(x-1) (x-2)^2 (x^3-3x^2+xy +3x-2y)"),
                       parse_bipoly("(x-1) (x-2)^2 (x^3-3x^2+xy +3x-2y-1)")});

    {
      const auto odd = parse_bipoly(
          "x^5 - 7x^4 + 3x^3y + 20x^3 - 15x^2y - 29x^2 + xy^2 + 26xy + 21x -2y^2-15y-6");
      const auto e3 = parse_bipoly(
          "x^5 - 7x^4 + 3x^3y + 20x^3 - 15x^2y - 28x^2 + xy^2 + 26xy + 16x - 2y^2 - 15y");
      const auto e4 = parse_bipoly(
          "x^5 - 7x^4 + 3x^3y + 20x^3 - 15x^2y - 27x^2 + xy^2 + 26xy + 14x - 2y^2 - 14y");
      rep.bipair_equals("sigma3 bivariate", {S3}, {e3, odd});
      rep.bipair_equals("sigma4 bivariate", {S4}, {e4, odd});
      rep.pair_equals("sigma3 pair", {S3},
                      {parse_unipoly("x(x-2)^2(x^2-3x+4)"), parse_unipoly("(x-1)^2(x-2)(x^2-3x+3)")});
      rep.pair_equals("sigma4 pair", {S4},
                      {parse_unipoly("x(x-2)(x^3-5x^2+10x-7)"),
                       parse_unipoly("(x-1)^2(x-2)(x^2-3x+3)")});
    }

    {
      const ThresholdCode code({1, -1, 0, -1, 1, 0, 1});
      const BivariatePair expected{
          parse_bipoly("(x-1)(x-3)(x^6-15x^5+6x^4y+99x^4-71x^3 y -345x^3+4x^2 y^2+325x^2 y"
                       " +618x^2-36x y^2-650x y -440x+80y^2+424y)"),
          parse_bipoly("(x-1)(x-3)(x^6-15x^5+6x^4y+99x^4-71x^3 y -359x^3+4x^2 y^2+325x^2 y"
                       " +738x^2-36x y^2-666x y-792x+80y^2+488y+328)")};
      const ChromaticPair expected_uni{
          parse_unipoly("x(x-1)(x-2)(x-3)(x^4-13x^3+73x^2-199x+220)"),
          parse_unipoly("(x-1)^2(x-3)(x^5-14x^4+85x^3-274x^2+464x-328)")};
      const auto recursive = threshold_bivariate(code);
      Json info;
      info["code"] = code.to_string();
      info["expected"] = to_json(expected);
      rep.check("threshold example recursion", recursive == expected, info);
      rep.bipair_equals("threshold example expansion", {threshold_graph(code)}, expected);
      Json uni;
      uni["expected"] = to_json(expected_uni);
      rep.check("threshold example at y = 0", specialize_y(recursive, 0) == expected_uni, uni);
    }

    rep.bipair_equals("+K2 bivariate", {complete_graph(2, Sign::Positive)},
                      {parse_bipoly("x(x-1)"), parse_bipoly("x(x-1)")});
    rep.bipair_equals("-K2 bivariate", {complete_graph(2, Sign::Negative)},
                      {parse_bipoly("x^2-x+y"), parse_bipoly("x^2-x+y")});

    report.details["sections"] = rep.sections;
    if (!rep.all_ok) report.status = VerifyStatus::Fail;
  });
}

}  // namespace sgc
