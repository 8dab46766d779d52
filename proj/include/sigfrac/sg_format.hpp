#pragma once

// "SG v1" text format:
//   sg 1
//   n <count>
//   + <u> <v>      positive edge
//   - <u> <v>      negative edge
// '#' starts a comment; blank lines are ignored. The writer emits edges
// sorted by (u, v) with u < v.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "sigfrac/errors.hpp"
#include "sigfrac/signed_graph.hpp"

namespace sigfrac {

inline std::string to_sg(const SignedGraph& g) {
  std::ostringstream out;
  out << "sg 1\n" << "n " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) out << sign_char(e.sign) << ' ' << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline SignedGraph parse_sg(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int stage = 0;  // 0: expect header, 1: expect n, 2: edges
  int n = 0;
  std::vector<SignedEdge> edges;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) continue;
    std::string extra;
    if (stage == 0) {
      int version = 0;
      if (head != "sg" || !(line >> version) || version != 1 || (line >> extra)) {
        fail("expected 'sg 1'");
      }
      stage = 1;
    } else if (stage == 1) {
      if (head != "n" || !(line >> n) || n < 0 || (line >> extra)) fail("expected 'n <count>'");
      stage = 2;
    } else {
      if (head != "+" && head != "-") fail("expected '+' or '-' edge line, got '" + head + "'");
      long u = 0, v = 0;
      if (!(line >> u >> v) || (line >> extra)) fail("malformed edge line");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                       head == "+" ? Sign::Positive : Sign::Negative});
    }
  }
  if (stage < 2) throw Error(Errc::ParseError, "truncated input: missing header or vertex count");
  try {
    return SignedGraph(n, std::move(edges));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline SignedGraph parse_sg(const std::string& text) {
  std::istringstream in(text);
  return parse_sg(in);
}

inline SignedGraph read_sg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return parse_sg(in);
}

inline void write_sg_file(const std::string& path, const SignedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << to_sg(g);
}

}  // namespace sigfrac
