#pragma once

#include <iosfwd>
#include <string>

#include "graph.hpp"

namespace permadet {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text graph format, one record per line, LF-terminated:
//   graph <name>
//   vertices <n>
//   color <v> <B|W>               (optional; all or none)
//   edge <eid> <u> <v> [weight=<poly>] [sign=<+1|-1>]
//   rot <v> <h1> ... <hk>         (half-edge ids 2*eid and 2*eid+1)
//   # comment
// Canonical output: records in the order above, ids ascending, weight
// omitted when 1, sign omitted when +1.  serialize(parse(x)) is
// byte-identical for canonical files.
std::string serialize_graph(const EmbeddedGraph& g);
EmbeddedGraph parse_graph(const std::string& text);
EmbeddedGraph load_graph_file(const std::string& path);
void save_graph_file(const EmbeddedGraph& g, const std::string& path);

}  // namespace permadet
