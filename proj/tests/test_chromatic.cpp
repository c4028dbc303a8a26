#include <doctest.h>

#include <algorithm>
#include <random>

#include "goldens.hpp"
#include "sgchrom/chromatic.hpp"
#include "sgchrom/error.hpp"
#include "sgchrom/polynomial.hpp"
#include "support.hpp"

using namespace sgc;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::UsageError;
}

bool is_connected(const SignedGraph& g) { return component_stats(g).components == 1; }

}  // namespace

TEST_CASE("colour sets") {
  const auto s = make_colour_spec(5, 2);
  CHECK(s.includes_zero);
  auto paired = s.paired;
  std::sort(paired.begin(), paired.end());
  CHECK(paired == std::vector<long>{-1, 1});
  CHECK(s.unpaired == std::vector<long>{6, 7});
  CHECK(s.colours().size() == 5);
  const auto t = make_colour_spec(4, 0);
  CHECK_FALSE(t.includes_zero);
  CHECK(t.colours().size() == 4);
  CHECK(make_colour_spec(0, 0).colours().empty());
  CHECK(make_colour_spec(3, 3).paired.empty());
  CHECK(code_of([] { make_colour_spec(2, 3); }) == ErrorCode::BadRange);
  CHECK(code_of([] { make_colour_spec(-1, 0); }) == ErrorCode::BadRange);
  CHECK(code_of([] { make_colour_spec(2, -1); }) == ErrorCode::BadRange);
}

TEST_CASE("oracle against naive enumeration") {
  for (const auto& g : testing::all_signed_graphs_up_to(3))
    for (long lambda = 0; lambda <= 4; ++lambda)
      for (long mu = 0; mu <= lambda; ++mu)
        CHECK(count_colourings_oracle(g, make_colour_spec(lambda, mu)) ==
              BigInt(static_cast<unsigned long>(testing::naive_count(g, testing::naive_colours(lambda, mu)))));
  Budget tight;
  tight.max_oracle_evaluations = 10;
  CHECK(code_of([&] { count_colourings_oracle(fixture("petersen"), make_colour_spec(3, 0), tight); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("small pairs") {
  CHECK(chromatic_pair(SignedGraph()) == ChromaticPair{UniPoly{1}, UniPoly{1}});
  CHECK(chromatic_pair(SignedGraph(1)) == ChromaticPair{UniPoly::x(), UniPoly::x()});
  CHECK(bivariate_pair(SignedGraph()) == BivariatePair{BiPoly::constant(1), BiPoly::constant(1)});
  const auto m2 = bivariate_pair(complete_graph(2, Sign::Negative));
  CHECK(m2.even == parse_bipoly(goldens::minus_k2_bivariate.even));
  CHECK(m2.odd == parse_bipoly(goldens::minus_k2_bivariate.odd));
  const auto m3 = chromatic_pair(complete_graph(3, Sign::Negative));
  CHECK(m3.even == parse_unipoly("x^3 - 3x^2 + 3x"));
  CHECK(m3.odd == parse_unipoly("(x-1)^3"));
  CHECK(unsigned_chromatic(complete_graph(3, Sign::Negative)) == parse_unipoly("x(x-1)(x-2)"));
  CHECK(unsigned_chromatic(fixture("petersen")) ==
        parse_unipoly("x(x-1)(x-2)(x^7-12x^6+67x^5-230x^4+529x^3-814x^2+775x-352)"));
}

TEST_CASE("expansions agree with colouring counts") {
  std::mt19937_64 rng(3);
  std::vector<SignedGraph> family = testing::all_signed_graphs_up_to(3);
  for (int i = 0; i < 40; ++i) family.push_back(testing::random_graph(rng, 5));
  for (const auto& g : family) {
    const auto c = chromatic_pair(g);
    const auto b = bivariate_pair(g);
    for (long lambda = 0; lambda <= 5; ++lambda) {
      const BigInt direct = count_colourings_oracle(g, make_colour_spec(lambda, 0));
      CHECK(eval(lambda % 2 == 0 ? c.even : c.odd, BigInt(lambda)) == direct);
      for (long mu = 0; mu <= lambda; ++mu) {
        const auto& p = (lambda - mu) % 2 == 0 ? b.even : b.odd;
        CHECK(eval(p, BigInt(lambda), BigInt(mu)) == count_colourings_oracle(g, make_colour_spec(lambda, mu)));
      }
    }
  }
}

TEST_CASE("interpolation matches the expansion") {
  std::mt19937_64 rng(17);
  for (const auto& g : testing::all_signed_graphs_up_to(3)) CHECK(interpolated_pair(g) == chromatic_pair(g));
  for (int i = 0; i < 10; ++i) {
    const auto g = testing::random_graph(rng, 5);
    CHECK(interpolated_pair(g) == chromatic_pair(g));
  }
}

TEST_CASE("structural properties") {
  std::mt19937_64 rng(29);
  std::vector<SignedGraph> family = testing::all_signed_graphs_up_to(3);
  for (int i = 0; i < 60; ++i) family.push_back(testing::random_graph(rng, 5, 0.6));
  for (const auto& g : family) {
    const auto c = chromatic_pair(g);
    const auto b = bivariate_pair(g);
    const int n = g.vertex_count();
    const bool balanced = is_balanced(g);
    CHECK((c.even == c.odd) == balanced);
    CHECK((b.even == b.odd) == balanced);
    CHECK(specialize_y(b, 0) == c);
    CHECK(b.even.on_diagonal() == unsigned_chromatic(positive_part(g)));
    if (n >= 1) {
      const BigInt minus_e = -BigInt(static_cast<unsigned long>(g.edge_count()));
      const BigInt nu(static_cast<unsigned long>(g.negative_edge_count()));
      CHECK(b.even.coeff(n - 1, 0) == minus_e);
      CHECK(b.odd.coeff(n - 1, 0) == minus_e);
      if (n >= 2) {
        CHECK(b.even.coeff(n - 2, 1) == nu);
        CHECK(b.odd.coeff(n - 2, 1) == nu);
      }
    }
    if (is_connected(g)) CHECK((eval(c.odd, BigInt(0)) == 0) == balanced);
    if (g.negative_edge_count() == 0) {
      CHECK(c.even == unsigned_chromatic(g));
      CHECK(b.even == BiPoly(c.even));
    }
    for (int v = 0; v < n; ++v) {
      const auto role = vertex_role(g, v);
      if (role != VertexRole::PositiveDominating && role != VertexRole::NegativeDominating &&
          role != VertexRole::UniversalK1)
        continue;
      const auto rest = delete_vertex(g, v);
      if (!is_balanced(rest)) continue;
      const auto e = bivariate_pair(rest).even;
      CHECK(b.even - b.odd == shift_substitute(e, -1, 1) - shift_substitute(e, -1, 0));
    }
  }
}

TEST_CASE("switching and relabelling invariance") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(rng, 6);
    const auto c = chromatic_pair(g);
    CHECK(chromatic_pair(switch_vertices(g, testing::random_subset(rng, 6))) == c);
    const auto r = relabel(g, testing::random_permutation(rng, 6));
    CHECK(chromatic_pair(r) == c);
    CHECK(bivariate_pair(r) == bivariate_pair(g));
  }
  CHECK_FALSE(bivariate_pair(complete_graph(2, Sign::Positive)) == bivariate_pair(complete_graph(2, Sign::Negative)));
}

TEST_CASE("threshold recursion") {
  CHECK(threshold_bivariate(ThresholdCode()) == BivariatePair{BiPoly::x(), BiPoly::x()});
  CHECK(code_of([] { add_vertex_step(BivariatePair{BiPoly::x(), BiPoly::x()}, 2); }) == ErrorCode::BadCode);
  for (int len = 0; len <= 4; ++len) {
    std::vector<int> code(static_cast<std::size_t>(len), -1);
    while (true) {
      const ThresholdCode t(code);
      CHECK(threshold_bivariate(t) == bivariate_pair(threshold_graph(t)));
      int i = 0;
      while (i < len && code[static_cast<std::size_t>(i)] == 1) code[static_cast<std::size_t>(i++)] = -1;
      if (i == len) break;
      ++code[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("complete graph fast path") {
  for (int n = 0; n <= 5; ++n) {
    const auto kn = complete_graph(n, Sign::Positive);
    const int m = static_cast<int>(kn.edge_count());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<Edge> edges(kn.edges().begin(), kn.edges().end());
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) edges[static_cast<std::size_t>(i)].sign = Sign::Negative;
      const auto g = SignedGraph::build(n, std::span<const Edge>(edges));
      CHECK(complete_bivariate_pair(g) == bivariate_pair(g));
    }
  }
  CHECK(code_of([] { complete_bivariate_pair(edgeless_graph(3)); }) == ErrorCode::NotComplete);
}

TEST_CASE("expansion budget") {
  Budget tight;
  tight.max_subset_edges = 10;
  CHECK(code_of([&] { chromatic_pair(fixture("petersen"), tight); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { bivariate_pair(fixture("petersen"), tight); }) == ErrorCode::BudgetExceeded);
  Budget one;
  one.threads = 1;
  Budget many;
  many.threads = 4;
  const auto g = fixture("Sigma1");
  CHECK(bivariate_pair(g, one) == bivariate_pair(g, many));
  CHECK(resolve_threads(many) == 4);
}
