#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgc {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::Positive;

  auto operator<=>(const Edge&) const = default;
};

// Unvalidated edge as it arrives from a caller or a file; `sign` must be +1 or -1.
struct RawEdge {
  int u = 0;
  int v = 0;
  int sign = 1;
};

// Simple signed graph on vertices 0..n-1. Edges are stored with u < v in
// lexicographic (u, v) order. Immutable once built.
class SignedGraph {
 public:
  // K_0.
  SignedGraph() = default;
  // Edgeless graph on n vertices.
  explicit SignedGraph(int n);

  // Validates and normalises. Throws LoopEdge, DuplicateEdge,
  // IndexOutOfRange or BadSign.
  static SignedGraph build(int n, std::span<const RawEdge> edges);
  static SignedGraph build(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::optional<Sign> sign_between(int u, int v) const;
  bool adjacent(int u, int v) const { return sign_between(u, v).has_value(); }

  int degree(int v) const;
  int positive_degree(int v) const;
  int negative_degree(int v) const;
  std::size_t negative_edge_count() const noexcept;

  bool operator==(const SignedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void index_edges();
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  // n*n matrix of 0 / +1 / -1.
  std::vector<std::int8_t> adjacency_;
};

struct ComponentStats {
  int components = 0;           // c
  int balanced = 0;             // b
  int all_positive = 0;         // p
  bool operator==(const ComponentStats&) const = default;
};

enum class VertexRole {
  Isolated,
  PositiveDominating,
  NegativeDominating,
  Plain,
  UniversalK1,
};

std::string_view vertex_role_name(VertexRole role) noexcept;

// Entries in {-1, 0, +1}; entry i says how vertex i+1 attaches to
// vertices 0..i (0 isolated, +1 positive dominating, -1 negative dominating).
class ThresholdCode {
 public:
  ThresholdCode() = default;
  // Throws BadCode on an entry outside {-1, 0, 1}.
  explicit ThresholdCode(std::vector<int> entries);

  std::span<const int> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::string to_string() const;
  bool operator==(const ThresholdCode&) const = default;

 private:
  std::vector<int> entries_;
};

SignedGraph complete_graph(int n, Sign sign);
SignedGraph edgeless_graph(int n);

// Negates every edge with exactly one endpoint in `subset`.
SignedGraph switch_vertices(const SignedGraph& g, std::span<const int> subset);
// Same, with the subset given as a vertex bitmask.
SignedGraph switch_mask(const SignedGraph& g, std::uint64_t vertex_mask);

ComponentStats component_stats(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);

// Keeps exactly the edges in `subset` (matched by endpoints and sign).
SignedGraph spanning_subgraph(const SignedGraph& g, std::span<const Edge> subset);
// Keeps edge i of `g.edges()` iff bit i of `edge_mask` is set.
SignedGraph spanning_subgraph(const SignedGraph& g, std::uint64_t edge_mask);

// Disjoint union (g2 shifted after g1) plus all g1-g2 edges with `join_sign`.
SignedGraph join(const SignedGraph& g1, const SignedGraph& g2, Sign join_sign);

VertexRole vertex_role(const SignedGraph& g, int v);

// Removes v; remaining vertices keep their relative order.
SignedGraph delete_vertex(const SignedGraph& g, int v);

// `image[v]` is the new label of v; must be a permutation of 0..n-1.
SignedGraph relabel(const SignedGraph& g, std::span<const int> image);

SignedGraph threshold_graph(const ThresholdCode& code);

SignedGraph positive_part(const SignedGraph& g);
SignedGraph negative_part(const SignedGraph& g);
// The all-positive graph on the same underlying graph.
SignedGraph all_positive(const SignedGraph& g);
SignedGraph all_negative(const SignedGraph& g);

// G1, G2, Sigma1..Sigma4, gem, petersen, plusK:<n>, minusK:<n>.
// Throws UnknownFixture.
SignedGraph fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace sgc
