#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sgchrom/signed_graph.hpp"

namespace sgc::testing {

// Counts maps V -> colours with c(u) != s * c(w) on every edge by trying
// every assignment. Deliberately naive: no pruning, no shared code with the
// library's oracle.
inline std::uint64_t naive_count(const SignedGraph& g, const std::vector<long>& colours) {
  const int n = g.vertex_count();
  const std::size_t k = colours.size();
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges()) {
      const long cu = colours[digit[static_cast<std::size_t>(e.u)]];
      const long cv = colours[digit[static_cast<std::size_t>(e.v)]];
      if (cu == static_cast<long>(e.sign) * cv) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    int i = 0;
    while (i < n && ++digit[static_cast<std::size_t>(i)] == k) digit[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

// lambda colours, mu of them without a negative partner.
inline std::vector<long> naive_colours(long lambda, long mu) {
  std::vector<long> c;
  const long paired = lambda - mu;
  for (long i = 1; i <= paired / 2; ++i) {
    c.push_back(i);
    c.push_back(-i);
  }
  if (paired % 2 == 1) c.push_back(0);
  // Unpaired colours far from the paired range.
  for (long i = 0; i < mu; ++i) c.push_back(100 + i);
  return c;
}

// Every signed graph on exactly n labelled vertices.
inline std::vector<SignedGraph> all_signed_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<SignedGraph> out;
  // Base-3 digits: 0 absent, 1 positive, 2 negative.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Edge> edges;
    std::uint64_t c = code;
    for (const auto& [u, v] : slots) {
      const auto d = c % 3;
      c /= 3;
      if (d == 1) edges.push_back({u, v, Sign::Positive});
      if (d == 2) edges.push_back({u, v, Sign::Negative});
    }
    out.push_back(SignedGraph::build(n, std::span<const Edge>(edges)));
  }
  return out;
}

inline std::vector<SignedGraph> all_signed_graphs_up_to(int n_max) {
  std::vector<SignedGraph> out;
  for (int n = 0; n <= n_max; ++n) {
    auto part = all_signed_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline SignedGraph random_graph(std::mt19937_64& rng, int n, double edge_p = 0.5, double neg_p = 0.5) {
  std::bernoulli_distribution has(edge_p), neg(neg_p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has(rng)) edges.push_back({u, v, neg(rng) ? Sign::Negative : Sign::Positive});
  return SignedGraph::build(n, std::span<const Edge>(edges));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<int> random_subset(std::mt19937_64& rng, int n) {
  std::vector<int> s;
  std::bernoulli_distribution pick(0.5);
  for (int v = 0; v < n; ++v)
    if (pick(rng)) s.push_back(v);
  return s;
}

}  // namespace sgc::testing
