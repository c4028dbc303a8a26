#include "sgchrom/json_format.hpp"

#include "sgchrom/error.hpp"

namespace sgc {

Json to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

Json to_json(const BiPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e.x, e.y, c.get_str()}));
  return arr;
}

Json to_json(const ChromaticPair& pair) {
  return Json{{"even", to_json(pair.even)}, {"odd", to_json(pair.odd)}};
}

Json to_json(const BivariatePair& pair) {
  return Json{{"even", to_json(pair.even)}, {"odd", to_json(pair.odd)}};
}

Json to_json(const SignedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, std::string(1, sign_char(e.sign))}));
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "univariate polynomial must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) fail(ErrorCode::ParseError, "coefficient must be a decimal string");
    coeffs.emplace_back(c.get<std::string>());
  }
  return UniPoly(std::move(coeffs));
}

BiPoly bipoly_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "bivariate polynomial must be an array");
  BiPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[2].is_string())
      fail(ErrorCode::ParseError, "bivariate term must be [i, j, \"c\"]");
    p.add_term({t[0].get<int>(), t[1].get<int>()}, BigInt(t[2].get<std::string>()));
  }
  return p;
}

SignedGraph graph_from_json(const Json& j) {
  std::vector<RawEdge> edges;
  for (const auto& e : j.at("edges")) {
    const auto s = e.at(2).get<std::string>();
    if (s != "+" && s != "-") fail(ErrorCode::BadSign, "edge sign must be \"+\" or \"-\"");
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), s == "+" ? 1 : -1});
  }
  return SignedGraph::build(j.at("n").get<int>(), std::span<const RawEdge>(edges));
}

std::string canonical_key(const UniPoly& p) { return to_json(p).dump(); }
std::string canonical_key(const BiPoly& p) { return to_json(p).dump(); }
std::string canonical_key(const ChromaticPair& pair) { return to_json(pair).dump(); }
std::string canonical_key(const BivariatePair& pair) { return to_json(pair).dump(); }

}  // namespace sgc
