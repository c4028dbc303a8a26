#pragma once

#include <string>
#include <string_view>

#include "sgchrom/signed_graph.hpp"

namespace sgc {

// Edge-list text format:
//   # comment
//   n <count>
//   e <u> <v> <+|->
// Malformed lines raise ParseError; structural violations raise the
// SignedGraph::build errors.
SignedGraph parse_graph_text(std::string_view text);
SignedGraph read_graph_file(const std::string& path);

// Writes the format above with edges in (u, v) order.
std::string format_graph_text(const SignedGraph& g);

}  // namespace sgc
