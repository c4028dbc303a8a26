#pragma once

#include <cstdint>
#include <vector>

#include "sgchrom/polynomial.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgc {

struct Budget {
  // Largest |E| accepted by the subset expansion (2^|E| subsets).
  int max_subset_edges = 24;
  // Largest |C|^n accepted by the brute-force colouring oracle.
  std::uint64_t max_oracle_evaluations = 100'000'000;
  // Largest 2^|E| signature space accepted by orbit enumeration.
  int max_orbit_edges = 21;
  // Backtracking nodes allowed per isomorphism search.
  std::uint64_t max_search_nodes = 50'000'000;
  // 0 picks SGCHROM_THREADS from the environment, else the core count.
  unsigned threads = 0;
};

unsigned resolve_threads(const Budget& budget);

// A concrete (lambda, mu)-colour set: `paired` is closed under negation,
// `unpaired` holds mu colours none of whose negatives are present, and 0 is
// present exactly when lambda - mu is odd.
struct ColourSpec {
  long lambda = 0;
  long mu = 0;
  std::vector<long> paired;
  std::vector<long> unpaired;
  bool includes_zero = false;

  std::vector<long> colours() const;
};

// paired = {±1..±floor((lambda-mu)/2)}, unpaired = {lambda+1..lambda+mu}.
// Throws BadRange unless lambda >= mu >= 0.
ColourSpec make_colour_spec(long lambda, long mu);

// Number of maps V -> C with colour(v) != sign(vw) * colour(w) on every
// edge, by exhaustive search. Throws BudgetExceeded.
BigInt count_colourings_oracle(const SignedGraph& g, const ColourSpec& spec,
                               const Budget& budget = {});

// Subset expansion over all edge subsets Y of
//   (-1)^|Y| x^b(Y) delta^(c(Y)-b(Y)),
// with delta = 0 for the even constituent and 1 for the odd one.
ChromaticPair chromatic_pair(const SignedGraph& g, const Budget& budget = {});

// Subset expansion of (-1)^|Y| x^p(Y) (x-y)^(b(Y)-p(Y)) delta^(c(Y)-b(Y)).
BivariatePair bivariate_pair(const SignedGraph& g, const Budget& budget = {});

// Lagrange interpolation through oracle counts at lambda = 0, 2, ..., 2n and
// 1, 3, ..., 2n+1. Throws NonIntegralCoefficient if a coefficient is not an
// integer.
ChromaticPair interpolated_pair(const SignedGraph& g, const Budget& budget = {});

// Chromatic polynomial of the underlying graph.
UniPoly unsigned_chromatic(const SignedGraph& g, const Budget& budget = {});

// Bivariate pair of g + v from that of g, where v is added as an isolated
// vertex (entry 0), a positive dominating vertex (+1) or a negative
// dominating vertex (-1). Throws BadCode for any other entry.
BivariatePair add_vertex_step(const BivariatePair& previous, int entry);

// Bivariate pair of the threshold graph, by repeated add_vertex_step from
// (x, x) for K_1.
BivariatePair threshold_bivariate(const ThresholdCode& code);

// Bivariate pair of a signed complete graph by counting colour-class
// partitions directly. Throws NotComplete for other graphs.
BivariatePair complete_bivariate_pair(const SignedGraph& g);

}  // namespace sgc
