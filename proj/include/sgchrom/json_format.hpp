#pragma once

#include <string>

#include <json.hpp>

#include "sgchrom/polynomial.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgc {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonFormatVersion = 1;

// Univariate: ["c0", "c1", ...] ascending by degree.
Json to_json(const UniPoly& p);
// Bivariate: [[i, j, "c"], ...] sorted by (i, j).
Json to_json(const BiPoly& p);
// {"even": ..., "odd": ...}
Json to_json(const ChromaticPair& pair);
Json to_json(const BivariatePair& pair);
// {"n": n, "edges": [[u, v, "+"], ...]}
Json to_json(const SignedGraph& g);

UniPoly unipoly_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);
SignedGraph graph_from_json(const Json& j);

// Compact canonical serialisation, usable as a map key.
std::string canonical_key(const UniPoly& p);
std::string canonical_key(const BiPoly& p);
std::string canonical_key(const ChromaticPair& pair);
std::string canonical_key(const BivariatePair& pair);

}  // namespace sgc
