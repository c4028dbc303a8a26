#include "sgchrom/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sgchrom/error.hpp"
#include "sgchrom/parity_union_find.hpp"

namespace sgc {

SignedGraph::SignedGraph(int n) : n_(n) {
  if (n < 0) fail(ErrorCode::IndexOutOfRange, "vertex count must be nonnegative");
  index_edges();
}

SignedGraph SignedGraph::build(int n, std::span<const RawEdge> edges) {
  std::vector<Edge> typed;
  typed.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.sign != 1 && e.sign != -1)
      fail(ErrorCode::BadSign, "edge sign must be +1 or -1, got " + std::to_string(e.sign));
    typed.push_back({e.u, e.v, e.sign == 1 ? Sign::Positive : Sign::Negative});
  }
  return build(n, std::span<const Edge>(typed));
}

SignedGraph SignedGraph::build(int n, std::span<const Edge> edges) {
  SignedGraph g(n);
  g.edges_.reserve(edges.size());
  for (auto e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      fail(ErrorCode::IndexOutOfRange, "edge endpoint out of range: " + std::to_string(e.u) +
                                           "-" + std::to_string(e.v) + " with n=" + std::to_string(n));
    if (e.u == e.v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    if (e.sign != Sign::Positive && e.sign != Sign::Negative)
      fail(ErrorCode::BadSign, "edge sign must be +1 or -1");
    if (e.u > e.v) std::swap(e.u, e.v);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v)
      fail(ErrorCode::DuplicateEdge, "duplicate edge " + std::to_string(g.edges_[i].u) + "-" +
                                         std::to_string(g.edges_[i].v));
  }
  g.index_edges();
  return g;
}

void SignedGraph::index_edges() {
  const auto n = static_cast<std::size_t>(n_);
  adjacency_.assign(n * n, 0);
  for (const auto& e : edges_) {
    const auto s = static_cast<std::int8_t>(e.sign);
    adjacency_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = s;
    adjacency_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = s;
  }
}

void SignedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

std::optional<Sign> SignedGraph::sign_between(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto s = adjacency_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                            static_cast<std::size_t>(v)];
  if (s == 0) return std::nullopt;
  return static_cast<Sign>(s);
}

int SignedGraph::degree(int v) const { return positive_degree(v) + negative_degree(v); }

int SignedGraph::positive_degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < n_; ++w)
    if (adjacency_[static_cast<std::size_t>(v * n_ + w)] > 0) ++d;
  return d;
}

int SignedGraph::negative_degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < n_; ++w)
    if (adjacency_[static_cast<std::size_t>(v * n_ + w)] < 0) ++d;
  return d;
}

std::size_t SignedGraph::negative_edge_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign == Sign::Negative; }));
}

std::string_view vertex_role_name(VertexRole role) noexcept {
  switch (role) {
    case VertexRole::Isolated: return "isolated";
    case VertexRole::PositiveDominating: return "positive_dominating";
    case VertexRole::NegativeDominating: return "negative_dominating";
    case VertexRole::Plain: return "plain";
    case VertexRole::UniversalK1: return "universal_K1";
  }
  return "?";
}

ThresholdCode::ThresholdCode(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int a : entries_)
    if (a < -1 || a > 1) fail(ErrorCode::BadCode, "threshold code entry out of {-1,0,1}: " + std::to_string(a));
}

std::string ThresholdCode::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

SignedGraph complete_graph(int n, Sign sign) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, sign});
  return SignedGraph::build(n, std::span<const Edge>(edges));
}

SignedGraph edgeless_graph(int n) { return SignedGraph(n); }

SignedGraph switch_mask(const SignedGraph& g, std::uint64_t vertex_mask) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) {
    const bool in_u = (vertex_mask >> e.u) & 1U;
    const bool in_v = (vertex_mask >> e.v) & 1U;
    if (in_u != in_v) e.sign = -e.sign;
  }
  return SignedGraph::build(g.vertex_count(), std::span<const Edge>(edges));
}

SignedGraph switch_vertices(const SignedGraph& g, std::span<const int> subset) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : subset) {
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorCode::IndexOutOfRange, "switching vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges)
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) e.sign = -e.sign;
  return SignedGraph::build(g.vertex_count(), std::span<const Edge>(edges));
}

ComponentStats component_stats(const SignedGraph& g) {
  ParityUnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v, e.sign == Sign::Negative);
  return {uf.components(), uf.balanced_components(), uf.all_positive_components()};
}

bool is_balanced(const SignedGraph& g) {
  const auto s = component_stats(g);
  return s.balanced == s.components;
}

SignedGraph spanning_subgraph(const SignedGraph& g, std::span<const Edge> subset) {
  std::vector<Edge> kept;
  for (auto e : subset) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!std::binary_search(g.edges().begin(), g.edges().end(), e))
      fail(ErrorCode::UnknownEdge, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                       sign_char(e.sign) + " is not in the graph");
    kept.push_back(e);
  }
  return SignedGraph::build(g.vertex_count(), std::span<const Edge>(kept));
}

SignedGraph spanning_subgraph(const SignedGraph& g, std::uint64_t edge_mask) {
  std::vector<Edge> kept;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((edge_mask >> i) & 1U) kept.push_back(edges[i]);
  return SignedGraph::build(g.vertex_count(), std::span<const Edge>(kept));
}

SignedGraph join(const SignedGraph& g1, const SignedGraph& g2, Sign join_sign) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const auto& e : g2.edges()) edges.push_back({e.u + n1, e.v + n1, e.sign});
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.push_back({u, v + n1, join_sign});
  return SignedGraph::build(n1 + n2, std::span<const Edge>(edges));
}

VertexRole vertex_role(const SignedGraph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  if (n == 1) return VertexRole::UniversalK1;
  const int pos = g.positive_degree(v);
  const int neg = g.negative_degree(v);
  if (pos == 0 && neg == 0) return VertexRole::Isolated;
  if (pos == n - 1) return VertexRole::PositiveDominating;
  if (neg == n - 1) return VertexRole::NegativeDominating;
  return VertexRole::Plain;
}

SignedGraph delete_vertex(const SignedGraph& g, int v) {
  if (g.vertex_count() == 0) fail(ErrorCode::EmptyGraph, "cannot delete a vertex of K0");
  if (v < 0 || v >= g.vertex_count())
    fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v, e.sign});
  }
  return SignedGraph::build(g.vertex_count() - 1, std::span<const Edge>(edges));
}

SignedGraph relabel(const SignedGraph& g, std::span<const int> image) {
  const int n = g.vertex_count();
  if (static_cast<int>(image.size()) != n)
    fail(ErrorCode::IndexOutOfRange, "relabelling has wrong length");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int w : image) {
    if (w < 0 || w >= n || seen[static_cast<std::size_t>(w)])
      fail(ErrorCode::IndexOutOfRange, "relabelling is not a permutation");
    seen[static_cast<std::size_t>(w)] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges())
    edges.push_back({image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)], e.sign});
  return SignedGraph::build(n, std::span<const Edge>(edges));
}

SignedGraph threshold_graph(const ThresholdCode& code) {
  std::vector<Edge> edges;
  int n = 1;
  for (int a : code.entries()) {
    if (a != 0) {
      const Sign s = a > 0 ? Sign::Positive : Sign::Negative;
      for (int u = 0; u < n; ++u) edges.push_back({u, n, s});
    }
    ++n;
  }
  return SignedGraph::build(n, std::span<const Edge>(edges));
}

namespace {

SignedGraph filter_sign(const SignedGraph& g, Sign keep) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.sign == keep) edges.push_back(e);
  return SignedGraph::build(g.vertex_count(), std::span<const Edge>(edges));
}

SignedGraph resign(const SignedGraph& g, Sign s) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = s;
  return SignedGraph::build(g.vertex_count(), std::span<const Edge>(edges));
}

// Fixture transcriptions use the 1-based labels of the drawings.
SignedGraph from_one_based(int n, std::initializer_list<RawEdge> edges) {
  std::vector<RawEdge> shifted;
  for (auto e : edges) shifted.push_back({e.u - 1, e.v - 1, e.sign});
  return SignedGraph::build(n, std::span<const RawEdge>(shifted));
}

std::optional<int> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto rest = name.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || value < 0 || rest.empty()) return std::nullopt;
  return value;
}

}  // namespace

SignedGraph positive_part(const SignedGraph& g) { return filter_sign(g, Sign::Positive); }
SignedGraph negative_part(const SignedGraph& g) { return filter_sign(g, Sign::Negative); }
SignedGraph all_positive(const SignedGraph& g) { return resign(g, Sign::Positive); }
SignedGraph all_negative(const SignedGraph& g) { return resign(g, Sign::Negative); }

SignedGraph fixture(std::string_view name) {
  constexpr int P = 1;
  constexpr int N = -1;
  if (name == "G1")
    return from_one_based(5, {{1, 2, P}, {1, 3, P}, {1, 4, P}, {1, 5, P}, {2, 3, P}, {3, 4, P}, {4, 5, N}});
  if (name == "G2")
    return from_one_based(5, {{1, 2, P}, {1, 3, P}, {1, 4, P}, {1, 5, P}, {2, 3, P}, {3, 4, N}, {4, 5, P}});
  if (name == "gem")
    return from_one_based(5, {{1, 2, P}, {1, 3, P}, {1, 4, P}, {1, 5, P}, {2, 3, P}, {3, 4, P}, {4, 5, P}});
  if (name == "Sigma1")
    return from_one_based(6, {{1, 2, P}, {1, 3, P}, {1, 4, P}, {1, 5, P}, {1, 6, P},
                              {2, 3, P}, {3, 4, P}, {5, 6, N}});
  if (name == "Sigma2")
    return from_one_based(6, {{1, 2, P}, {1, 3, P}, {1, 4, P}, {1, 5, P}, {1, 6, P},
                              {2, 6, P}, {4, 5, P}, {5, 6, N}});
  if (name == "Sigma3")
    return from_one_based(5, {{1, 2, P}, {1, 5, P}, {2, 3, P}, {2, 4, N}, {3, 4, P}, {3, 5, N}, {4, 5, N}});
  if (name == "Sigma4")
    return from_one_based(5, {{1, 2, P}, {1, 3, N}, {1, 4, P}, {1, 5, N}, {2, 3, P}, {3, 4, P}, {4, 5, N}});
  if (name == "petersen") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5, Sign::Positive});           // outer cycle
      edges.push_back({i, i + 5, Sign::Positive});                 // spoke
      edges.push_back({i + 5, (i + 2) % 5 + 5, Sign::Positive});   // pentagram
    }
    return SignedGraph::build(10, std::span<const Edge>(edges));
  }
  if (auto n = parse_suffix(name, "plusK:")) return complete_graph(*n, Sign::Positive);
  if (auto n = parse_suffix(name, "minusK:")) return complete_graph(*n, Sign::Negative);
  fail(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  return {"G1", "G2", "gem", "Sigma1", "Sigma2", "Sigma3", "Sigma4", "petersen", "plusK:<n>", "minusK:<n>"};
}

}  // namespace sgc
