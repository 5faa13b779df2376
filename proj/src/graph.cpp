#include "graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

namespace permadet {

int EmbeddedGraph::add_edge(int u, int v, RingElem w, int sign) {
  edges.push_back(EdgeRec{u, v, std::move(w), sign});
  return (int)edges.size() - 1;
}

bool SurfaceInfo::all_faces_even() const {
  return std::all_of(faces.begin(), faces.end(),
                     [](const Face& f) { return f.side_count() % 2 == 0; });
}

std::vector<int> SurfaceInfo::dart_face() const {
  size_t darts = 0;
  for (const Face& f : faces) darts += f.sides.size();
  std::vector<int> df(darts, -1);
  for (size_t fi = 0; fi < faces.size(); ++fi)
    for (const FaceSide& s : faces[fi].sides) {
      if (s.dart >= (int)df.size()) df.resize(s.dart + 1, -1);
      if (df[s.dart] != -1)
        throw GraphError("dart_face needs an orientable embedding");
      df[s.dart] = (int)fi;
    }
  return df;
}

namespace {

int rot_index(const std::vector<int>& rot, int dart) {
  for (size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == dart) return (int)i;
  throw GraphError("dart missing from rotation");
}

// Face tracing for one component.
//
// Orientable components are first normalized (vertex flips removing all
// -1 signs); faces are then the orbits of dart -> successor(twin(dart)).
// Non-orientable components are traced in the orientation double cover,
// where each face lifts to a pair of mirror-image orbits; one canonical
// orbit per pair is projected back down.
struct ComponentTracer {
  const EmbeddedGraph& g;
  const std::vector<int>& verts;  // component vertices
  std::vector<int> comp_of;       // vertex -> component id (-1 elsewhere)

  // per-vertex flip for orientation normalization
  std::vector<int> flip;   // indexed by vertex, only comp vertices used
  bool orientable = true;

  ComponentTracer(const EmbeddedGraph& gg, const std::vector<int>& vs)
      : g(gg), verts(vs), flip(gg.vertex_count, 0) {
    orient();
  }

  void orient() {
    std::vector<int> state(g.vertex_count, -1);
    std::queue<int> q;
    state[verts[0]] = 0;
    q.push(verts[0]);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : g.rotation[v]) {
        int e = d / 2;
        int w = g.dart_head(d);
        int want = state[v] ^ (g.edges[e].sign < 0 ? 1 : 0);
        if (state[w] == -1) {
          state[w] = want;
          q.push(w);
        } else if (state[w] != want) {
          orientable = false;
        }
      }
    }
    if (orientable)
      for (int v : verts) flip[v] = state[v];
  }

  // effective sign after normalization flips (orientable case: all +1)
  int eff_sign(int e) const {
    int s = g.edges[e].sign < 0 ? 1 : 0;
    s ^= flip[g.edges[e].u] ^ flip[g.edges[e].v];
    return s ? -1 : +1;
  }

  const std::vector<int>& rot(int v) const { return g.rotation[v]; }

  int succ(int v, int dart, bool reversed_chart) const {
    const std::vector<int>& r = rot(v);
    int i = rot_index(r, dart);
    int n = (int)r.size();
    // a flipped vertex chart reads its rotation backwards
    bool rev = reversed_chart ^ (flip[v] == 1);
    int j = rev ? (i + n - 1) % n : (i + 1) % n;
    return r[j];
  }

  std::vector<Face> trace_orientable() const {
    std::vector<Face> out;
    std::vector<char> seen(g.dart_count(), 0);
    std::vector<int> comp_darts;
    for (int v : verts)
      for (int d : g.rotation[v]) comp_darts.push_back(d);
    std::sort(comp_darts.begin(), comp_darts.end());
    for (int d0 : comp_darts) {
      if (seen[d0]) continue;
      Face f;
      int d = d0;
      do {
        seen[d] = 1;
        f.sides.push_back(FaceSide{d, (d & 1) == 0});
        int t = EmbeddedGraph::twin(d);
        d = succ(g.dart_base(t), t, false);
      } while (d != d0);
      out.push_back(std::move(f));
    }
    return out;
  }

  // double-cover states: 2*dart + sheet, where sheet is the sheet of the
  // dart's base vertex
  std::vector<Face> trace_nonorientable() const {
    auto next_state = [&](int s) {
      int d = s / 2, sheet = s % 2;
      int e = d / 2;
      int t = EmbeddedGraph::twin(d);
      int tsheet = sheet ^ (g.edges[e].sign < 0 ? 1 : 0);
      int nd = succ(g.dart_base(t), t, tsheet == 1);
      return 2 * nd + tsheet;
    };
    std::vector<int> comp_states;
    for (int v : verts)
      for (int d : g.rotation[v]) {
        comp_states.push_back(2 * d);
        comp_states.push_back(2 * d + 1);
      }
    std::sort(comp_states.begin(), comp_states.end());
    std::map<int, int> orbit_of;  // state -> orbit id
    std::vector<std::vector<int>> orbits;
    for (int s0 : comp_states) {
      if (orbit_of.count(s0)) continue;
      int id = (int)orbits.size();
      orbits.emplace_back();
      int s = s0;
      do {
        orbit_of[s] = id;
        orbits[id].push_back(s);
        s = next_state(s);
      } while (s != s0);
    }
    // pair each orbit with its deck image (sheet flipped)
    std::vector<Face> out;
    std::vector<char> used(orbits.size(), 0);
    for (size_t i = 0; i < orbits.size(); ++i) {
      if (used[i]) continue;
      int mirror = orbit_of.at(orbits[i][0] ^ 1);
      used[i] = 1;
      used[mirror] = 1;  // may equal i (a side-reversing face track)
      Face f;
      for (int s : orbits[i])
        f.sides.push_back(FaceSide{s / 2, ((s / 2) & 1) == 0});
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<Face> trace() const {
    return orientable ? trace_orientable() : trace_nonorientable();
  }
};

}  // namespace

SurfaceInfo validate(const EmbeddedGraph& g) {
  if ((int)g.rotation.size() != g.vertex_count)
    throw GraphError("rotation table size mismatch");
  // each dart exactly once, at its base vertex
  std::vector<int> seen(g.dart_count(), 0);
  for (int v = 0; v < g.vertex_count; ++v)
    for (int d : g.rotation[v]) {
      if (d < 0 || d >= g.dart_count()) throw GraphError("dart id out of range");
      if (seen[d]++) throw GraphError("dart appears twice in rotations");
      if (g.dart_base(d) != v)
        throw GraphError("dart listed at a vertex it is not incident to");
    }
  for (int d = 0; d < g.dart_count(); ++d)
    if (!seen[d]) throw GraphError("dart missing from rotations");
  for (const EdgeRec& e : g.edges) {
    if (e.u < 0 || e.u >= g.vertex_count || e.v < 0 || e.v >= g.vertex_count)
      throw GraphError("edge endpoint out of range");
    if (e.weight.is_zero()) throw GraphError("zero edge weight");
    if (e.sign != 1 && e.sign != -1) throw GraphError("edge sign must be +-1");
  }
  if (g.colors) {
    if ((int)g.colors->size() != g.vertex_count)
      throw GraphError("color table size mismatch");
    for (int c : *g.colors)
      if (c != 0 && c != 1) throw GraphError("colors must be B/W");
    for (const EdgeRec& e : g.edges)
      if ((*g.colors)[e.u] == (*g.colors)[e.v])
        throw GraphError("monochromatic edge in colored graph");
  }

  SurfaceInfo info;
  info.vertex_component.assign(g.vertex_count, -1);
  // components via union of edges
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const EdgeRec& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int v0 = 0; v0 < g.vertex_count; ++v0) {
    if (info.vertex_component[v0] != -1) continue;
    int cid = (int)info.components.size();
    ComponentInfo comp;
    std::queue<int> q;
    q.push(v0);
    info.vertex_component[v0] = cid;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.vertices.push_back(v);
      for (int w : adj[v])
        if (info.vertex_component[w] == -1) {
          info.vertex_component[w] = cid;
          q.push(w);
        }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    for (const EdgeRec& e : g.edges)
      if (info.vertex_component[e.u] == cid) ++comp.edge_ct;

    if (comp.edge_ct == 0) {
      // isolated vertex: a sphere with a single (empty-boundary) face
      Face f;
      f.component = cid;
      info.faces.push_back(f);
      comp.face_ct = 1;
      comp.orientable = true;
      comp.euler = 2;
      comp.surface = Surface::sphere;
      info.components.push_back(std::move(comp));
      continue;
    }

    ComponentTracer tracer(g, comp.vertices);
    std::vector<Face> faces = tracer.trace();
    comp.face_ct = (int)faces.size();
    comp.orientable = tracer.orientable;
    int nv = (int)comp.vertices.size();
    comp.euler = nv - comp.edge_ct + comp.face_ct;
    if (comp.euler == 2 && comp.orientable) {
      comp.surface = Surface::sphere;
    } else if (comp.euler == 1 && !comp.orientable) {
      comp.surface = Surface::projective_plane;
    } else {
      throw GraphError("component has Euler characteristic " +
                       std::to_string(comp.euler) +
                       (comp.orientable ? " (orientable)" : " (non-orientable)") +
                       "; not a sphere or projective-plane embedding");
    }
    for (Face& f : faces) {
      f.component = cid;
      info.faces.push_back(std::move(f));
    }
    info.components.push_back(std::move(comp));
  }
  info.surface = Surface::sphere;
  for (const ComponentInfo& c : info.components)
    if (c.surface == Surface::projective_plane)
      info.surface = Surface::projective_plane;
  return info;
}

std::vector<Face> trace_faces(const EmbeddedGraph& g) { return validate(g).faces; }

ColoringReport bipartite_coloring(const EmbeddedGraph& g) {
  ColoringReport rep;
  SurfaceInfo info = validate(g);
  rep.locally_bipartite = info.all_faces_even();
  std::vector<int> color(g.vertex_count, -1);
  bool ok = true;
  for (int v0 = 0; v0 < g.vertex_count && ok; ++v0) {
    if (color[v0] != -1) continue;
    color[v0] = 0;
    std::queue<int> q;
    q.push(v0);
    while (!q.empty() && ok) {
      int v = q.front();
      q.pop();
      for (int d : g.rotation[v]) {
        int w = g.dart_head(d);
        if (color[w] == -1) {
          color[w] = color[v] ^ 1;
          q.push(w);
        } else if (color[w] == color[v]) {
          ok = false;
          break;
        }
      }
    }
  }
  if (ok) rep.colors = std::move(color);
  return rep;
}

EmbeddedGraph dual_graph(const EmbeddedGraph& g, bool midpoints) {
  SurfaceInfo info = validate(g);
  for (const ComponentInfo& c : info.components)
    if (c.surface != Surface::sphere)
      throw GraphError("dual_graph requires a sphere embedding");
  std::vector<int> dart_face = info.dart_face();

  EmbeddedGraph d;
  d.vertex_count = (int)info.faces.size();
  d.rotation.assign(d.vertex_count, {});
  // dual edge i crosses primal edge i; dart 2i lives at the face
  // containing primal dart 2i
  for (int e = 0; e < g.edge_count(); ++e)
    d.add_edge(dart_face[2 * e], dart_face[2 * e + 1]);
  for (size_t fi = 0; fi < info.faces.size(); ++fi) {
    for (const FaceSide& s : info.faces[fi].sides) {
      int e = s.dart / 2;
      d.rotation[fi].push_back(2 * e + (s.dart & 1));
    }
  }
  if (!midpoints) return d;

  EmbeddedGraph m;
  m.vertex_count = d.vertex_count + d.edge_count();
  m.rotation.assign(m.vertex_count, {});
  for (int e = 0; e < d.edge_count(); ++e) {
    int mid = d.vertex_count + e;
    m.add_edge(d.edges[e].u, mid);  // edge 2e
    m.add_edge(mid, d.edges[e].v);  // edge 2e+1
    m.rotation[mid] = {2 * (2 * e) + 1, 2 * (2 * e + 1)};
  }
  for (int v = 0; v < d.vertex_count; ++v)
    for (int dart : d.rotation[v]) {
      int e = dart / 2;
      m.rotation[v].push_back((dart & 1) ? 2 * (2 * e + 1) + 1 : 2 * (2 * e));
    }
  return m;
}

EmbeddedGraph edge_graph(const EmbeddedGraph& g) {
  validate(g);
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) throw GraphError("edge_graph does not accept loops");
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.degree(v) > 3)
      throw GraphError("edge_graph embedding requires max degree 3");

  EmbeddedGraph out;
  out.vertex_count = g.edge_count();
  out.rotation.assign(out.vertex_count, {});

  // chords created per primal-vertex corner: corner i at v is the pair
  // (rot[i], rot[i+1])
  std::map<std::pair<int, int>, int> chord;  // (v, corner) -> edge-graph edge id
  for (int v = 0; v < g.vertex_count; ++v) {
    int k = g.degree(v);
    if (k < 2) continue;
    int pairs = (k == 2) ? 1 : k;
    for (int i = 0; i < pairs; ++i) {
      int d1 = g.rotation[v][i];
      int d2 = g.rotation[v][(i + 1) % k];
      int id = out.add_edge(d1 / 2, d2 / 2);
      chord[{v, i}] = id;
    }
  }
  // rotation at m_e: [sigma_u(e), sigma_u^-1(e), sigma_v(e), sigma_v^-1(e)]
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int side = 0; side < 2; ++side) {
      int dart = 2 * e + side;
      int v = g.dart_base(dart);
      int k = g.degree(v);
      if (k < 2) continue;
      int i = rot_index(g.rotation[v], dart);
      auto dart_of_chord = [&](int corner) {
        int id = chord.at({v, corner});
        const EdgeRec& ce = out.edges[id];
        if (ce.u == ce.v)
          throw GraphError("edge_graph: parallel edges adjacent in a rotation");
        return ce.u == e ? 2 * id : 2 * id + 1;
      };
      if (k == 2) {
        out.rotation[e].push_back(dart_of_chord(0));
      } else {
        int succ_corner = i;                // pair (e, sigma(e))
        int pred_corner = (i + k - 1) % k;  // pair (sigma^-1(e), e)
        out.rotation[e].push_back(dart_of_chord(succ_corner));
        out.rotation[e].push_back(dart_of_chord(pred_corner));
      }
    }
  }
  return out;
}

std::vector<int> dart_action(const EmbeddedGraph& g, const std::vector<int>& perm) {
  if ((int)perm.size() != g.vertex_count)
    throw GraphError("permutation size mismatch");
  {
    std::vector<char> hit(g.vertex_count, 0);
    for (int v : perm) {
      if (v < 0 || v >= g.vertex_count || hit[v])
        throw GraphError("not a vertex permutation");
      hit[v] = 1;
    }
  }
  // group parallel edges by endpoint pair; map in id order within a group
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto key = std::minmax(g.edges[e].u, g.edges[e].v);
    by_pair[{key.first, key.second}].push_back(e);
  }
  std::vector<int> edge_img(g.edge_count(), -1);
  for (auto& [pair, ids] : by_pair) {
    auto img = std::minmax(perm[pair.first], perm[pair.second]);
    auto it = by_pair.find({img.first, img.second});
    if (it == by_pair.end() || it->second.size() != ids.size())
      throw GraphError("vertex permutation is not a graph automorphism");
    for (size_t i = 0; i < ids.size(); ++i) {
      edge_img[ids[i]] = it->second[i];
      if (g.edges[ids[i]].weight != g.edges[it->second[i]].weight)
        throw GraphError("automorphism does not preserve weights");
    }
  }
  std::vector<int> dmap(g.dart_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int f = edge_img[e];
    int pu = perm[g.edges[e].u];
    if (pu == g.edges[f].u && perm[g.edges[e].v] == g.edges[f].v) {
      dmap[2 * e] = 2 * f;
      dmap[2 * e + 1] = 2 * f + 1;
    } else if (pu == g.edges[f].v && perm[g.edges[e].v] == g.edges[f].u) {
      dmap[2 * e] = 2 * f + 1;
      dmap[2 * e + 1] = 2 * f;
    } else {
      throw GraphError("vertex permutation is not a graph automorphism");
    }
  }
  return dmap;
}

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b, bool reversed) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<int> bb = b;
  if (reversed) std::reverse(bb.begin(), bb.end());
  size_t n = a.size();
  for (size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[i] == bb[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace

EmbeddedGraph quotient_by_free_automorphism(const EmbeddedGraph& g,
                                            const std::vector<int>& perm,
                                            int order) {
  validate(g);
  std::vector<int> dmap = dart_action(g, perm);

  // freeness on vertices and edges, and the stated order
  {
    std::vector<int> p = perm;
    for (int i = 1; i < order; ++i) {
      for (int v = 0; v < g.vertex_count; ++v)
        if (p[v] == v) throw GraphError("automorphism fixes a vertex");
      if (i + 1 < order) {
        std::vector<int> np(g.vertex_count);
        for (int v = 0; v < g.vertex_count; ++v) np[v] = perm[p[v]];
        p = np;
      }
    }
    for (int v = 0; v < g.vertex_count; ++v)
      if (perm[p[v]] != v) throw GraphError("automorphism order mismatch");
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (dmap[2 * e] == 2 * e + 1) throw GraphError("automorphism fixes an edge");

  // orientation behavior: compare rotations at image vertices
  int type = -1;  // 0 preserving, 1 reversing
  for (int v = 0; v < g.vertex_count; ++v) {
    if (g.degree(v) < 3) continue;
    std::vector<int> img;
    for (int d : g.rotation[v]) img.push_back(dmap[d]);
    bool pres = cyclic_equal(g.rotation[perm[v]], img, false);
    bool rev = cyclic_equal(g.rotation[perm[v]], img, true);
    int t = pres ? 0 : rev ? 1 : -1;
    if (t == -1) throw GraphError("rotation mismatch: not an embedded automorphism");
    if (pres && rev) continue;  // ambiguous (symmetric rotation)
    if (type == -1) type = t;
    else if (type != t) throw GraphError("inconsistent orientation behavior");
  }
  if (type == -1) type = (order % 2 == 0) ? 1 : 0;
  if (type == 1 && order % 2 == 1)
    throw GraphError("odd-order automorphism cannot reverse orientation");

  // vertex orbits; representative = smallest id; chart flip epsilon
  std::vector<int> rep(g.vertex_count, -1), power(g.vertex_count, 0);
  std::vector<int> reps;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (rep[v] != -1) continue;
    int r = (int)reps.size();
    int w = v, j = 0;
    do {
      rep[w] = r;
      power[w] = j;
      w = perm[w];
      ++j;
    } while (w != v);
    reps.push_back(v);
  }
  auto eps = [&](int v) { return (type == 1 && power[v] % 2 == 1) ? 1 : 0; };

  // edge orbits; representative = smallest edge id
  std::vector<int> erep(g.edge_count(), -1);
  std::vector<int> ereps;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (erep[e] != -1) continue;
    int id = (int)ereps.size();
    int f = e;
    do {
      erep[f] = id;
      f = dmap[2 * f] / 2;
    } while (f != e);
    ereps.push_back(e);
  }

  EmbeddedGraph q;
  q.vertex_count = (int)reps.size();
  q.rotation.assign(q.vertex_count, {});
  q.name = g.name.empty() ? "" : g.name + "-quotient";
  for (int id = 0; id < (int)ereps.size(); ++id) {
    const EdgeRec& e = g.edges[ereps[id]];
    int s = (eps(e.u) ^ eps(e.v)) ? -1 : +1;
    if (e.sign < 0) s = -s;
    q.add_edge(rep[e.u], rep[e.v], e.weight, s);
  }
  // a dart's orbit contains exactly one dart of the representative edge
  std::vector<int> dart_rep(g.dart_count(), -1);
  for (int d = 0; d < g.dart_count(); ++d) {
    int x = d;
    while (EmbeddedGraph::edge_of(x) != ereps[erep[x / 2]]) x = dmap[x];
    dart_rep[d] = 2 * erep[d / 2] + (x & 1);
  }
  for (int r = 0; r < (int)reps.size(); ++r) {
    for (int d : g.rotation[reps[r]]) q.rotation[r].push_back(dart_rep[d]);
  }
  if (g.colors && type == 0) {
    // color-preserving quotients inherit colors when consistent
    std::vector<int> qc(q.vertex_count);
    bool consistent = true;
    for (int v = 0; v < g.vertex_count && consistent; ++v) {
      if ((*g.colors)[v] != (*g.colors)[reps[rep[v]]]) consistent = false;
      qc[rep[v]] = (*g.colors)[v];
    }
    if (consistent) q.colors = qc;
  }
  validate(q);
  return q;
}

std::vector<SubgraphPiece> split_components(const EmbeddedGraph& g) {
  SurfaceInfo info = validate(g);
  std::vector<SubgraphPiece> out;
  for (const ComponentInfo& c : info.components) {
    SubgraphPiece piece;
    piece.graph = induced_subgraph(g, c.vertices, &piece.vertex_map);
    out.push_back(std::move(piece));
  }
  return out;
}

EmbeddedGraph induced_subgraph(const EmbeddedGraph& g, const std::vector<int>& keep,
                               std::vector<int>* vertex_map_out) {
  std::vector<int> newid(g.vertex_count, -1);
  for (size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = (int)i;
  EmbeddedGraph s;
  s.vertex_count = (int)keep.size();
  s.rotation.assign(s.vertex_count, {});
  std::vector<int> edgeid(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeRec& r = g.edges[e];
    if (newid[r.u] != -1 && newid[r.v] != -1)
      edgeid[e] = s.add_edge(newid[r.u], newid[r.v], r.weight, r.sign);
  }
  for (size_t i = 0; i < keep.size(); ++i)
    for (int d : g.rotation[keep[i]])
      if (edgeid[d / 2] != -1)
        s.rotation[i].push_back(2 * edgeid[d / 2] + (d & 1));
  if (g.colors) {
    std::vector<int> c(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) c[i] = (*g.colors)[keep[i]];
    s.colors = std::move(c);
  }
  if (vertex_map_out) *vertex_map_out = keep;
  return s;
}

bool is_perfect_matching(const EmbeddedGraph& g, const Matching& m) {
  std::vector<int> covered(g.vertex_count, 0);
  for (int e : m) {
    if (e < 0 || e >= g.edge_count() || g.is_loop(e)) return false;
    ++covered[g.edges[e].u];
    ++covered[g.edges[e].v];
  }
  return std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; });
}

}  // namespace permadet
