#include "sgchrom/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sgchrom/error.hpp"

namespace sgc {

namespace {

[[noreturn]] void parse_error(int line_no, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

int parse_int(const std::string& token, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    parse_error(line_no, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) parse_error(line_no, "expected an integer, got '" + token + "'");
  return value;
}

}  // namespace

SignedGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<RawEdge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string tok; fields >> tok;) args.push_back(tok);
    if (kind == "n") {
      if (n >= 0) parse_error(line_no, "vertex count given twice");
      if (args.size() != 1) parse_error(line_no, "expected 'n <count>'");
      n = parse_int(args[0], line_no);
      if (n < 0) parse_error(line_no, "vertex count must be nonnegative");
    } else if (kind == "e") {
      if (n < 0) parse_error(line_no, "edge before vertex count");
      if (args.size() != 3) parse_error(line_no, "expected 'e <u> <v> <+|->'");
      int sign = 0;
      if (args[2] == "+") sign = 1;
      else if (args[2] == "-") sign = -1;
      else fail(ErrorCode::BadSign, "line " + std::to_string(line_no) + ": sign must be '+' or '-'");
      edges.push_back({parse_int(args[0], line_no), parse_int(args[1], line_no), sign});
    } else {
      parse_error(line_no, "unknown record '" + kind + "'");
    }
  }
  if (n < 0) fail(ErrorCode::ParseError, "missing 'n <count>' line");
  return SignedGraph::build(n, std::span<const RawEdge>(edges));
}

SignedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

std::string format_graph_text(const SignedGraph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
  return os.str();
}

}  // namespace sgc
