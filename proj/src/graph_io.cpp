#include "graph_io.hpp"

#include <fstream>
#include <sstream>

namespace permadet {

std::string serialize_graph(const EmbeddedGraph& g) {
  std::ostringstream os;
  os << "graph " << (g.name.empty() ? "unnamed" : g.name) << "\n";
  os << "vertices " << g.vertex_count << "\n";
  if (g.colors)
    for (int v = 0; v < g.vertex_count; ++v)
      os << "color " << v << ' ' << ((*g.colors)[v] == 0 ? 'B' : 'W') << "\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeRec& r = g.edges[e];
    os << "edge " << e << ' ' << r.u << ' ' << r.v;
    if (!r.weight.is_one()) os << " weight=" << r.weight.str();
    if (r.sign < 0) os << " sign=-1";
    os << "\n";
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    os << "rot " << v;
    for (int d : g.rotation[v]) os << ' ' << d;
    os << "\n";
  }
  return os.str();
}

EmbeddedGraph parse_graph(const std::string& text) {
  EmbeddedGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vertices = false;
  std::vector<std::pair<int, int>> colors;
  struct RawEdge {
    int id, u, v;
    RingElem w = RingElem(1);
    int sign = 1;
  };
  std::vector<RawEdge> raw_edges;
  std::vector<std::pair<int, std::vector<int>>> rots;

  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw[0] == '#') continue;
    if (kw == "graph") {
      if (!(ls >> g.name)) fail("graph needs a name");
    } else if (kw == "vertices") {
      if (!(ls >> g.vertex_count) || g.vertex_count < 0) fail("bad vertex count");
      have_vertices = true;
    } else if (kw == "color") {
      int v;
      std::string c;
      if (!(ls >> v >> c) || (c != "B" && c != "W")) fail("bad color record");
      colors.emplace_back(v, c == "B" ? 0 : 1);
    } else if (kw == "edge") {
      RawEdge e;
      if (!(ls >> e.id >> e.u >> e.v)) fail("bad edge record");
      std::string opt;
      while (ls >> opt) {
        if (opt.rfind("weight=", 0) == 0) {
          try {
            e.w = RingElem::parse(opt.substr(7));
          } catch (const RingError& err) {
            fail(err.what());
          }
        } else if (opt.rfind("sign=", 0) == 0) {
          std::string s = opt.substr(5);
          if (s == "+1") e.sign = 1;
          else if (s == "-1") e.sign = -1;
          else fail("bad sign value");
        } else {
          fail("unknown edge option '" + opt + "'");
        }
      }
      raw_edges.push_back(std::move(e));
    } else if (kw == "rot") {
      int v;
      if (!(ls >> v)) fail("bad rot record");
      std::vector<int> darts;
      int d;
      while (ls >> d) darts.push_back(d);
      rots.emplace_back(v, std::move(darts));
    } else {
      fail("unknown record '" + kw + "'");
    }
  }
  if (!have_vertices) throw ParseError("missing vertices record");

  std::sort(raw_edges.begin(), raw_edges.end(),
            [](const RawEdge& a, const RawEdge& b) { return a.id < b.id; });
  for (size_t i = 0; i < raw_edges.size(); ++i)
    if (raw_edges[i].id != (int)i)
      throw ParseError("edge ids must be 0..E-1 without gaps");
  for (RawEdge& e : raw_edges) {
    if (e.u < 0 || e.u >= g.vertex_count || e.v < 0 || e.v >= g.vertex_count)
      throw ParseError("edge endpoint out of range");
    g.add_edge(e.u, e.v, std::move(e.w), e.sign);
  }
  g.rotation.assign(g.vertex_count, {});
  for (auto& [v, darts] : rots) {
    if (v < 0 || v >= g.vertex_count) throw ParseError("rot vertex out of range");
    g.rotation[v] = std::move(darts);
  }
  if (!colors.empty()) {
    std::vector<int> c(g.vertex_count, -1);
    for (auto [v, col] : colors) {
      if (v < 0 || v >= g.vertex_count) throw ParseError("color vertex out of range");
      c[v] = col;
    }
    for (int x : c)
      if (x == -1) throw ParseError("colored graph must color every vertex");
    g.colors = std::move(c);
  }
  try {
    validate(g);
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
  return g;
}

EmbeddedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

void save_graph_file(const EmbeddedGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize_graph(g);
}

}  // namespace permadet
