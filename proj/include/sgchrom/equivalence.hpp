#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgchrom/chromatic.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgc {

// `permutation[v]` is the vertex of g2 that v of g1 maps to, so that
// relabel(g1, permutation) == g2.
struct IsomorphismResult {
  bool found = false;
  std::vector<int> permutation;
  std::uint64_t nodes = 0;
};

// Sign-preserving isomorphism search. Throws BudgetExceeded.
IsomorphismResult find_isomorphism(const SignedGraph& g1, const SignedGraph& g2,
                                   const Budget& budget = {});
bool are_isomorphic(const SignedGraph& g1, const SignedGraph& g2, const Budget& budget = {});

// When found: relabel(g1, permutation) == switch_vertices(g2, switching_set).
// The transcript records every invariant check and search performed, so a
// negative answer can be audited.
struct SwitchingIsomorphismResult {
  bool found = false;
  std::vector<int> switching_set;
  std::vector<int> permutation;
  std::vector<std::string> transcript;
  std::uint64_t switchings_examined = 0;
  std::uint64_t isomorphism_searches = 0;
};

SwitchingIsomorphismResult find_switching_isomorphism(const SignedGraph& g1,
                                                      const SignedGraph& g2,
                                                      const Budget& budget = {});
bool are_switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2,
                              const Budget& budget = {});

// Triangles whose product of signs is negative (a switching invariant).
std::size_t negative_triangle_count(const SignedGraph& g);

// Every automorphism of the underlying unsigned graph, as vertex images.
std::vector<std::vector<int>> automorphisms(const SignedGraph& underlying,
                                            const Budget& budget = {});
// A generating set of the same group, built level by level along the
// stabiliser chain of vertices 0, 1, ...
std::vector<std::vector<int>> automorphism_generators(const SignedGraph& underlying,
                                                      const Budget& budget = {});

// Bit i of a signature mask marks edge i of `underlying.edges()` negative.
SignedGraph apply_signature(const SignedGraph& underlying, std::uint64_t mask);
std::uint64_t signature_mask(const SignedGraph& g);

enum class EquivalenceMode {
  Isomorphism,           // automorphisms only
  SwitchingIsomorphism,  // switchings and automorphisms
  Switching,             // switchings only (labelled)
};

std::string_view mode_name(EquivalenceMode mode) noexcept;
// "iso", "switch" / "switching_iso", "switching". Throws UsageError.
EquivalenceMode parse_mode(std::string_view text);

struct ClassInventory {
  SignedGraph underlying;  // all-positive
  EquivalenceMode mode = EquivalenceMode::SwitchingIsomorphism;
  // Minimal signature mask of each orbit, ascending.
  std::vector<std::uint64_t> masks;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<SignedGraph> representatives;

  std::size_t class_count() const noexcept { return masks.size(); }
};

// Orbits of all 2^|E| signatures. Throws BudgetExceeded when |E| exceeds
// budget.max_orbit_edges.
ClassInventory enumerate_classes(const SignedGraph& underlying, EquivalenceMode mode,
                                 const Budget& budget = {});

}  // namespace sgc
