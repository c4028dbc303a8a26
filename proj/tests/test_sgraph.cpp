#include <doctest.h>

#include <random>

#include "sgchrom/equivalence.hpp"
#include "sgchrom/error.hpp"
#include "sgchrom/graph_io.hpp"
#include "sgchrom/signed_graph.hpp"
#include "support.hpp"

using namespace sgc;

namespace {

SignedGraph make(int n, std::vector<RawEdge> edges) {
  return SignedGraph::build(n, std::span<const RawEdge>(edges));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::UsageError;
}

// Repeatedly strips an isolated or dominating vertex.
bool is_unsigned_threshold(SignedGraph g) {
  while (g.vertex_count() > 0) {
    int pick = -1;
    for (int v = 0; v < g.vertex_count() && pick < 0; ++v)
      if (g.degree(v) == 0 || g.degree(v) == g.vertex_count() - 1) pick = v;
    if (pick < 0) return false;
    g = delete_vertex(g, pick);
  }
  return true;
}

}  // namespace

TEST_CASE("building graphs") {
  const auto g = make(2, {{0, 1, -1}});
  CHECK(g == complete_graph(2, Sign::Negative));
  CHECK(make(1, {}).vertex_count() == 1);
  CHECK(make(1, {}).edge_count() == 0);
  CHECK(code_of([] { make(3, {{0, 1, 1}, {0, 1, -1}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { make(3, {{1, 0, 1}, {0, 1, 1}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { make(3, {{2, 2, 1}}); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { make(3, {{0, 3, 1}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { make(3, {{0, -1, 1}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { make(3, {{0, 1, 0}}); }) == ErrorCode::BadSign);
  const auto h = make(3, {{2, 0, -1}, {1, 0, 1}});
  REQUIRE(h.edge_count() == 2);
  CHECK(h.edges()[0] == Edge{0, 1, Sign::Positive});
  CHECK(h.edges()[1] == Edge{0, 2, Sign::Negative});
  CHECK(SignedGraph().vertex_count() == 0);
}

TEST_CASE("switching") {
  const std::vector<int> first{0};
  CHECK(switch_vertices(complete_graph(2, Sign::Negative), first) == complete_graph(2, Sign::Positive));
  const auto g1 = fixture("G1");
  CHECK(switch_vertices(g1, std::vector<int>{}) == g1);
  CHECK(code_of([&] { switch_vertices(g1, std::vector<int>{7}); }) == ErrorCode::IndexOutOfRange);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_graph(rng, 6);
    const auto x = testing::random_subset(rng, 6);
    const auto s = switch_vertices(g, x);
    CHECK(switch_vertices(s, x) == g);
    CHECK(all_positive(s) == all_positive(g));
    const auto a = component_stats(g), b = component_stats(s);
    CHECK(a.components == b.components);
    CHECK(a.balanced == b.balanced);
    std::uint64_t mask = 0;
    for (int v : x) mask |= std::uint64_t{1} << v;
    CHECK(switch_mask(g, mask) == s);
  }
}

TEST_CASE("component statistics") {
  CHECK(component_stats(edgeless_graph(5)) == ComponentStats{5, 5, 5});
  CHECK(component_stats(complete_graph(3, Sign::Negative)) == ComponentStats{1, 0, 0});
  CHECK(component_stats(fixture("G1")) == ComponentStats{1, 0, 0});
  CHECK(component_stats(SignedGraph()) == ComponentStats{0, 0, 0});
  CHECK(component_stats(complete_graph(2, Sign::Negative)) == ComponentStats{1, 1, 0});
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_graph(rng, 7, 0.35);
    const auto s = component_stats(g);
    CHECK(0 <= s.all_positive);
    CHECK(s.all_positive <= s.balanced);
    CHECK(s.balanced <= s.components);
    CHECK(s.components <= g.vertex_count());
    CHECK(is_balanced(g) == (s.balanced == s.components));
  }
}

TEST_CASE("balance") {
  CHECK(is_balanced(complete_graph(5, Sign::Positive)));
  CHECK(is_balanced(complete_graph(2, Sign::Negative)));
  CHECK_FALSE(is_balanced(fixture("Sigma3")));
  CHECK_FALSE(is_balanced(fixture("Sigma4")));
  CHECK_FALSE(is_balanced(complete_graph(3, Sign::Negative)));
  // Two negative edges on a triangle.
  CHECK(is_balanced(make(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, 1}})));
}

TEST_CASE("spanning subgraphs") {
  const auto g1 = fixture("G1");
  CHECK(spanning_subgraph(g1, g1.edges()) == g1);
  CHECK(spanning_subgraph(complete_graph(3, Sign::Negative), std::span<const Edge>{}) == edgeless_graph(3));
  const std::vector<Edge> rim{{3, 4, Sign::Negative}};
  const auto s = spanning_subgraph(g1, rim);
  CHECK(s.edge_count() == 1);
  CHECK(component_stats(s) == ComponentStats{4, 4, 3});
  const std::vector<Edge> wrong_sign{{3, 4, Sign::Positive}};
  CHECK(code_of([&] { spanning_subgraph(g1, wrong_sign); }) == ErrorCode::UnknownEdge);
  CHECK(spanning_subgraph(g1, std::uint64_t{0}) == edgeless_graph(5));
}

TEST_CASE("joins") {
  const auto pk2 = complete_graph(2, Sign::Positive);
  CHECK(join(pk2, SignedGraph(), Sign::Negative) == pk2);
  CHECK(join(SignedGraph(), pk2, Sign::Positive) == pk2);
  CHECK(join(SignedGraph(1), SignedGraph(1), Sign::Positive) == pk2);
  const auto mk1 = complete_graph(1, Sign::Negative);
  CHECK(join(join(mk1, mk1, Sign::Positive), mk1, Sign::Positive) == complete_graph(3, Sign::Positive));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_graph(rng, 2), b = testing::random_graph(rng, 2),
               c = testing::random_graph(rng, 3);
    for (Sign s : {Sign::Positive, Sign::Negative}) {
      CHECK(are_isomorphic(join(join(a, b, s), c, s), join(a, join(b, c, s), s)));
      CHECK(are_isomorphic(join(a, c, s), join(c, a, s)));
    }
  }
}

TEST_CASE("vertex roles") {
  CHECK(vertex_role(fixture("G1"), 0) == VertexRole::PositiveDominating);
  CHECK(vertex_role(fixture("G1"), 1) == VertexRole::Plain);
  for (int v = 0; v < 4; ++v)
    CHECK(vertex_role(complete_graph(4, Sign::Negative), v) == VertexRole::NegativeDominating);
  CHECK(vertex_role(edgeless_graph(2), 1) == VertexRole::Isolated);
  CHECK(vertex_role(SignedGraph(1), 0) == VertexRole::UniversalK1);
  CHECK(code_of([] { vertex_role(SignedGraph(2), 2); }) == ErrorCode::IndexOutOfRange);
  CHECK(vertex_role_name(VertexRole::PositiveDominating) == "positive_dominating");
}

TEST_CASE("vertex deletion") {
  CHECK(delete_vertex(SignedGraph(1), 0) == SignedGraph());
  CHECK(delete_vertex(complete_graph(3, Sign::Negative), 0) == complete_graph(2, Sign::Negative));
  CHECK(delete_vertex(fixture("G1"), 0) == make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, -1}}));
  CHECK(code_of([] { delete_vertex(SignedGraph(), 0); }) == ErrorCode::EmptyGraph);
  CHECK(code_of([] { delete_vertex(SignedGraph(2), 5); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("threshold graphs") {
  CHECK(threshold_graph(ThresholdCode()) == SignedGraph(1));
  CHECK(threshold_graph(ThresholdCode({1, 1})) == complete_graph(3, Sign::Positive));
  CHECK(threshold_graph(ThresholdCode({-1, -1})) == complete_graph(3, Sign::Negative));
  CHECK(threshold_graph(ThresholdCode({0, 1})) == make(3, {{0, 2, 1}, {1, 2, 1}}));
  CHECK(code_of([] { ThresholdCode({1, 2}); }) == ErrorCode::BadCode);
  CHECK(ThresholdCode({1, -1, 0}).to_string() == "(1,-1,0)");
  CHECK(ThresholdCode().to_string() == "()");
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> entry(-1, 1), len(0, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> code(static_cast<std::size_t>(len(rng)));
    for (auto& a : code) a = entry(rng);
    const auto g = threshold_graph(ThresholdCode(code));
    CHECK(g.vertex_count() == static_cast<int>(code.size()) + 1);
    CHECK(is_unsigned_threshold(g));
    if (!code.empty()) {
      const auto role = vertex_role(g, g.vertex_count() - 1);
      const auto want = code.back() == 0   ? VertexRole::Isolated
                        : code.back() == 1 ? VertexRole::PositiveDominating
                                           : VertexRole::NegativeDominating;
      CHECK(role == want);
    }
  }
}

TEST_CASE("positive and negative parts") {
  CHECK(positive_part(complete_graph(3, Sign::Negative)) == edgeless_graph(3));
  CHECK(positive_part(complete_graph(3, Sign::Positive)) == complete_graph(3, Sign::Positive));
  CHECK(negative_part(fixture("G1")) == make(5, {{3, 4, -1}}));
  CHECK(all_negative(complete_graph(3, Sign::Positive)) == complete_graph(3, Sign::Negative));
}

TEST_CASE("fixtures") {
  const auto g1 = fixture("G1");
  CHECK(g1.vertex_count() == 5);
  CHECK(g1.edge_count() == 7);
  CHECK(g1.negative_edge_count() == 1);
  const auto g2 = fixture("G2");
  CHECK(g2.negative_edge_count() == 1);
  CHECK(all_positive(g1) == all_positive(g2));
  CHECK(all_positive(g1) == fixture("gem"));
  CHECK(fixture("minusK:0") == SignedGraph());
  CHECK(fixture("minusK:4") == complete_graph(4, Sign::Negative));
  CHECK(fixture("plusK:3") == complete_graph(3, Sign::Positive));
  const auto p = fixture("petersen");
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(negative_triangle_count(all_negative(p)) == 0);
  for (const char* name : {"Sigma1", "Sigma2"}) CHECK(fixture(name).vertex_count() == 6);
  for (const char* name : {"Sigma3", "Sigma4"}) {
    CHECK(fixture(name).vertex_count() == 5);
    CHECK(fixture(name).edge_count() == 7);
  }
  CHECK(code_of([] { fixture("nope"); }) == ErrorCode::UnknownFixture);
  CHECK(code_of([] { fixture("plusK:x"); }) == ErrorCode::UnknownFixture);
}

TEST_CASE("relabel") {
  const auto g1 = fixture("G1");
  const std::vector<int> id{0, 1, 2, 3, 4};
  CHECK(relabel(g1, id) == g1);
  const std::vector<int> rot{1, 2, 3, 4, 0};
  const auto r = relabel(g1, rot);
  CHECK(r.sign_between(1, 2) == Sign::Positive);
  CHECK(r.sign_between(4, 0) == Sign::Negative);
  CHECK(code_of([&] { relabel(g1, std::vector<int>{0, 0, 1, 2, 3}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("edge list text format") {
  const auto g1 = fixture("G1");
  const auto text = format_graph_text(g1);
  CHECK(text.rfind("n 5\n", 0) == 0);
  CHECK(parse_graph_text(text) == g1);
  CHECK(parse_graph_text("# two\nn 2\n\ne 1 0 -\n") == complete_graph(2, Sign::Negative));
  CHECK(parse_graph_text("n 0\n") == SignedGraph());
  CHECK(code_of([] { parse_graph_text("e 0 1 +\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_text("n 2\ne 0 1 *\n"); }) == ErrorCode::BadSign);
  CHECK(code_of([] { parse_graph_text("n 2\ne 0 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_text("n 2\nv 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_text("n 2\ne 0 0 +\n"); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { parse_graph_text("n 2\ne 0 1 +\ne 1 0 +\n"); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { parse_graph_text("n two\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_graph_file("/nonexistent/graph.sg"); }) == ErrorCode::ParseError);
}
