#include "kasteleyn.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "gf2.hpp"

namespace permadet {

namespace {

int kasteleyn_sign(int side_count) {
  // (-1)^(|F|/2 + 1)
  if (side_count % 2 != 0)
    throw KasteleynError("odd-sided face has no Kasteleyn curvature");
  return (side_count / 2 + 1) % 2 == 0 ? +1 : -1;
}

std::vector<int> require_colors(const EmbeddedGraph& g) {
  if (g.colors) return *g.colors;
  ColoringReport rep = bipartite_coloring(g);
  if (!rep.colors) throw KasteleynError("graph is not bipartite");
  return *rep.colors;
}

}  // namespace

RingElem curvature(const EmbeddedGraph& g, const std::vector<int>& colors,
                   const Weighting& w, const Face& face) {
  RingElem num(kasteleyn_sign(face.side_count())), den(1);
  for (const FaceSide& s : face.sides) {
    int e = s.dart / 2;
    const RingElem& we = w.w[e];
    if (we.is_zero()) throw KasteleynError("zero weight");
    // side agrees with the black->white direction iff it leaves a black vertex
    if (colors[g.dart_base(s.dart)] == 0)
      num *= we;
    else
      den *= we;
  }
  return num.exact_div(den);
}

int orientation_curvature(const EmbeddedGraph& g, const Face& face,
                          const Orientation& o) {
  int along = 0;
  for (const FaceSide& s : face.sides) {
    bool travels_uv = (s.dart & 1) == 0;
    if (travels_uv == (o.forward[s.dart / 2] != 0)) ++along;
  }
  (void)g;
  return along % 2 == 1 ? +1 : -1;
}

RingElem total_curvature(const EmbeddedGraph& g, const Weighting& w) {
  std::vector<int> colors = require_colors(g);
  RingElem prod(1);
  for (const Face& f : validate(g).faces) prod *= curvature(g, colors, w, f);
  return prod;
}

CurvaturePrescription all_flat_prescription(const SurfaceInfo& info) {
  CurvaturePrescription p;
  p.values.assign(info.faces.size(), RingElem(1));
  return p;
}

CurvaturePrescription prescription_with_outer(
    const SurfaceInfo& info, const std::map<int, RingElem>& internal,
    const std::vector<int>& outer_faces) {
  CurvaturePrescription p;
  p.values.assign(info.faces.size(), RingElem(1));
  std::vector<char> is_outer(info.faces.size(), 0);
  for (int f : outer_faces) is_outer[f] = 1;
  for (const auto& [f, val] : internal) {
    if (f < 0 || f >= (int)info.faces.size() || is_outer[f])
      throw KasteleynError("bad internal face index in prescription");
    if (!val.is_monomial()) throw KasteleynError("prescribed curvature must be a unit");
    p.values[f] = val;
  }
  // the outer face absorbs the inverse of its component's product
  std::vector<RingElem> comp_prod(info.components.size(), RingElem(1));
  for (size_t f = 0; f < info.faces.size(); ++f)
    if (!is_outer[f]) comp_prod[info.faces[f].component] *= p.values[f];
  for (int f : outer_faces) {
    const RingElem& cp = comp_prod[info.faces[f].component];
    if (!cp.is_unit()) throw KasteleynError("unrealizable prescription");
    p.values[f] = cp.unit_inverse();
  }
  return p;
}

Weighting prescribed_curvature_weighting(const EmbeddedGraph& g,
                                         const CurvaturePrescription& p) {
  SurfaceInfo info = validate(g);
  std::vector<int> colors = require_colors(g);
  if ((int)p.values.size() != (int)info.faces.size())
    throw KasteleynError("prescription / face count mismatch");
  for (const Face& f : info.faces)
    if (f.side_count() % 2 != 0)
      throw KasteleynError("odd-sided face has no Kasteleyn curvature");
  for (const RingElem& v : p.values)
    if (!v.is_monomial() || abs(v.terms()[0].second) != 1)
      throw KasteleynError("prescribed curvature must be a +-monomial unit");
  {
    std::vector<RingElem> comp_prod(info.components.size(), RingElem(1));
    for (size_t f = 0; f < info.faces.size(); ++f)
      comp_prod[info.faces[f].component] *= p.values[f];
    for (const RingElem& cp : comp_prod)
      if (!cp.is_one()) throw KasteleynError("unrealizable prescription: product != 1");
  }

  int E = g.edge_count();
  // sign bits: one equation per face
  Gf2System signs(E);
  for (size_t fi = 0; fi < info.faces.size(); ++fi) {
    const Face& f = info.faces[fi];
    if (f.sides.empty()) continue;
    int target_sign = kasteleyn_sign(f.side_count()) *
                      (p.values[fi].terms()[0].second < 0 ? -1 : 1);
    int row = signs.add_row(target_sign < 0);
    for (const FaceSide& s : f.sides) signs.flip(row, s.dart / 2);
  }
  Gf2System::Solution sol = signs.solve();
  if (!sol.consistent)
    throw KasteleynError("no weighting realizes the prescribed curvature signs");

  // exponents: integer back-substitution along a dual spanning tree
  std::vector<int> expo(E, 0);
  {
    int F = (int)info.faces.size();
    // signed incidence face x edge (coefficient of x_e in face equation)
    std::vector<std::map<int, int>> coef(F);
    std::vector<int> target(F, 0);
    for (int fi = 0; fi < F; ++fi) {
      for (const FaceSide& s : info.faces[fi].sides) {
        int e = s.dart / 2;
        coef[fi][e] += colors[g.dart_base(s.dart)] == 0 ? +1 : -1;
      }
      std::erase_if(coef[fi], [](const auto& kv) { return kv.second == 0; });
      target[fi] = p.values[fi].is_zero() ? 0 : p.values[fi].min_exp();
    }
    // dual adjacency via edges with nonzero coefficient in two faces
    std::vector<std::vector<std::pair<int, int>>> dual(F);  // (face, edge)
    {
      std::vector<std::vector<int>> faces_of_edge(E);
      for (int fi = 0; fi < F; ++fi)
        for (const auto& [e, c] : coef[fi]) faces_of_edge[e].push_back(fi);
      for (int e = 0; e < E; ++e)
        if (faces_of_edge[e].size() == 2) {
          dual[faces_of_edge[e][0]].push_back({faces_of_edge[e][1], e});
          dual[faces_of_edge[e][1]].push_back({faces_of_edge[e][0], e});
        }
    }
    std::vector<int> parent(F, -1), parent_edge(F, -1), order;
    std::vector<char> seen(F, 0);
    for (int root = 0; root < F; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      parent[root] = root;
      std::queue<int> q;
      q.push(root);
      while (!q.empty()) {
        int f = q.front();
        q.pop();
        order.push_back(f);
        for (auto [h, e] : dual[f])
          if (!seen[h]) {
            seen[h] = 1;
            parent[h] = f;
            parent_edge[h] = e;
            q.push(h);
          }
      }
    }
    // leaves first: solve each face's equation for its parent-tree edge
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int f = *it;
      int rhs = target[f];
      for (const auto& [e, c] : coef[f]) rhs -= c * expo[e];
      if (parent_edge[f] >= 0) {
        int c = coef[f].at(parent_edge[f]);
        // tree edges appear once in each face, coefficient +-1
        if (c != 1 && c != -1)
          throw KasteleynError("internal: non-unit dual tree coefficient");
        expo[parent_edge[f]] += rhs / c;
        if (rhs % c != 0) throw KasteleynError("internal: non-integral exponent");
      } else if (rhs != 0) {
        throw KasteleynError("unrealizable prescription: exponents inconsistent");
      }
    }
  }
  Weighting w;
  w.w.reserve(E);
  for (int e = 0; e < E; ++e)
    w.w.push_back(RingElem::monomial(sol.x[e] ? -1 : 1, expo[e]));
  // the construction is verified, not trusted
  for (size_t fi = 0; fi < info.faces.size(); ++fi) {
    if (info.faces[fi].sides.empty()) continue;
    if (curvature(g, colors, w, info.faces[fi]) != p.values[fi])
      throw KasteleynError("internal: curvature verification failed");
  }
  return w;
}

Weighting flat_weighting(const EmbeddedGraph& g) {
  SurfaceInfo info = validate(g);
  for (const ComponentInfo& c : info.components)
    if (c.surface != Surface::sphere)
      throw KasteleynError("flat_weighting requires a sphere embedding");
  if (g.vertex_count % 2 != 0)
    throw KasteleynError("flat_weighting requires an even vertex count");
  return prescribed_curvature_weighting(g, all_flat_prescription(info));
}

Orientation flat_orientation(const EmbeddedGraph& g) {
  SurfaceInfo info = validate(g);
  ColoringReport col = bipartite_coloring(g);
  for (const ComponentInfo& c : info.components) {
    if (c.surface == Surface::sphere) continue;
    // projective components need the locally-but-not-globally-bipartite
    // condition for the single Pfaffian to count matchings
    bool locally = true;
    for (size_t fi = 0; fi < info.faces.size(); ++fi)
      if (&info.components[info.faces[fi].component] == &c &&
          info.faces[fi].side_count() % 2 != 0)
        locally = false;
    EmbeddedGraph piece = induced_subgraph(g, c.vertices);
    bool globally = bipartite_coloring(piece).colors.has_value();
    if (!locally || globally)
      throw KasteleynError(
          "projective component must be locally but not globally bipartite");
  }
  int E = g.edge_count();
  Gf2System sys(E);
  for (const Face& f : info.faces) {
    if (f.sides.empty()) continue;
    int row = sys.add_row(true);  // odd count along the traversal
    for (const FaceSide& s : f.sides) {
      sys.flip(row, s.dart / 2);
      if ((s.dart & 1) == 0) sys.flip_rhs(row);  // reference u->v crossing
    }
  }
  Gf2System::Solution sol = sys.solve();
  if (!sol.consistent)
    throw KasteleynError("no flat orientation (precondition violated)");
  Orientation o;
  o.forward.assign(E, 1);
  for (int e = 0; e < E; ++e) o.forward[e] = sol.x[e] ? 0 : 1;
  for (const Face& f : info.faces)
    if (!f.sides.empty() && orientation_curvature(g, f, o) != 1)
      throw KasteleynError("internal: orientation flatness verification failed");
  return o;
}

ExactMatrix kasteleyn_matrix(const EmbeddedGraph& g, const Weighting& w,
                             std::vector<int>* black_out,
                             std::vector<int>* white_out) {
  std::vector<int> colors = require_colors(g);
  std::vector<int> blacks, whites, pos(g.vertex_count, -1);
  for (int v = 0; v < g.vertex_count; ++v)
    (colors[v] == 0 ? blacks : whites).push_back(v);
  for (size_t i = 0; i < blacks.size(); ++i) pos[blacks[i]] = (int)i;
  for (size_t i = 0; i < whites.size(); ++i) pos[whites[i]] = (int)i;
  ExactMatrix m((int)blacks.size(), (int)whites.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    int b = g.edges[e].u, wv = g.edges[e].v;
    if (colors[b] != 0) std::swap(b, wv);
    m.at(pos[b], pos[wv]) += w.w[e];
  }
  if (black_out) *black_out = blacks;
  if (white_out) *white_out = whites;
  return m;
}

ExactMatrix antisymmetric_matrix(const EmbeddedGraph& g, const Orientation& o,
                                 const Weighting& w) {
  ExactMatrix a(g.vertex_count, g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    int t = o.forward[e] ? g.edges[e].u : g.edges[e].v;
    int h = o.forward[e] ? g.edges[e].v : g.edges[e].u;
    if (t == h) throw KasteleynError("loops cannot appear in matchings");
    a.at(t, h) += w.w[e];
    a.at(h, t) -= w.w[e];
  }
  return a;
}

namespace {

Weighting unit_weighting(const EmbeddedGraph& g) {
  Weighting w;
  w.w.assign(g.edge_count(), RingElem(1));
  return w;
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

Int count_matchings(const EmbeddedGraph& g) {
  SurfaceInfo info = validate(g);
  if (g.vertex_count == 0) return 1;
  for (const ComponentInfo& c : info.components)
    if (c.vertices.size() % 2 != 0) return 0;
  ColoringReport col = bipartite_coloring(g);
  if (col.colors) {
    for (const ComponentInfo& c : info.components)
      if (c.surface != Surface::sphere)
        throw KasteleynError(
            "globally bipartite projective-plane graphs are unsupported");
    int blacks = (int)std::count(col.colors->begin(), col.colors->end(), 0);
    if (2 * blacks != g.vertex_count) return 0;
    EmbeddedGraph gc = g;
    gc.colors = *col.colors;
    RingElem d = kasteleyn_matrix(gc, flat_weighting(gc)).det();
    return abs(d.as_integer());
  }
  Orientation o = flat_orientation(g);
  RingElem pf = antisymmetric_matrix(g, o, unit_weighting(g)).pfaffian();
  return abs(pf.as_integer());
}

RingElem weighted_matching_sum(const EmbeddedGraph& g, const Weighting& w,
                               const std::optional<Matching>& reference) {
  if (reference && !is_perfect_matching(g, *reference))
    throw KasteleynError("reference is not a perfect matching");
  ColoringReport col = bipartite_coloring(g);
  RingElem value, ref_term;
  if (col.colors) {
    EmbeddedGraph gc = g;
    gc.colors = *col.colors;
    ExactMatrix m = kasteleyn_matrix(gc, w);
    if (m.rows() != m.cols()) return RingElem(0);
    value = m.det();
    if (reference) ref_term = matching_term(gc, w, *reference);
  } else {
    Orientation o = flat_orientation(g);
    value = antisymmetric_matrix(g, o, w).pfaffian();
    if (reference) ref_term = matching_term_pf(g, o, w, *reference);
  }
  if (reference) value = value.exact_div(ref_term);
  return value;
}

RingElem matching_term(const EmbeddedGraph& g, const Weighting& w, const Matching& m) {
  std::vector<int> colors = require_colors(g);
  std::vector<int> blacks, pos(g.vertex_count, -1);
  std::vector<int> whites;
  for (int v = 0; v < g.vertex_count; ++v)
    (colors[v] == 0 ? blacks : whites).push_back(v);
  for (size_t i = 0; i < whites.size(); ++i) pos[whites[i]] = (int)i;
  if (blacks.size() != whites.size() || !is_perfect_matching(g, m))
    throw KasteleynError("matching_term needs a perfect matching");
  std::vector<int> partner(g.vertex_count, -1);
  RingElem weight(1);
  for (int e : m) {
    partner[g.edges[e].u] = g.edges[e].v;
    partner[g.edges[e].v] = g.edges[e].u;
    weight *= w.w[e];
  }
  std::vector<int> perm(blacks.size());
  for (size_t i = 0; i < blacks.size(); ++i) perm[i] = pos[partner[blacks[i]]];
  return permutation_sign(perm) < 0 ? -weight : weight;
}

RingElem matching_term_pf(const EmbeddedGraph& g, const Orientation& o,
                          const Weighting& w, const Matching& m) {
  if (!is_perfect_matching(g, m))
    throw KasteleynError("matching_term needs a perfect matching");
  // permutation (i1 j1 i2 j2 ...) with pairs sorted by smaller endpoint
  std::vector<int> partner(g.vertex_count, -1);
  RingElem weight(1);
  for (int e : m) {
    int u = g.edges[e].u, v = g.edges[e].v;
    partner[u] = v;
    partner[v] = u;
    RingElem we = w.w[e];
    // the A entry at (min,max) is +w when the edge is oriented min->max
    int tail = o.forward[e] ? u : v;
    if (tail != std::min(u, v)) we = -we;
    weight *= we;
  }
  std::vector<int> seq;
  for (int v = 0; v < g.vertex_count; ++v)
    if (partner[v] > v) {
      seq.push_back(v);
      seq.push_back(partner[v]);
    }
  // sign of seq as a permutation of 0..n-1
  std::vector<int> perm(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) perm[i] = seq[i];
  return permutation_sign(perm) < 0 ? -weight : weight;
}

InvariantFactors cokernel_of(const EmbeddedGraph& g) {
  ExactMatrix m = kasteleyn_matrix(g, flat_weighting(g));
  if (m.rows() != m.cols())
    throw KasteleynError("cokernel needs equal color classes");
  return m.smith_normal_form();
}

std::pair<Int, Int> antipodal_square_check(const EmbeddedGraph& g,
                                           const std::vector<int>& involution) {
  SurfaceInfo info = validate(g);
  for (const ComponentInfo& c : info.components)
    if (c.surface != Surface::sphere)
      throw KasteleynError("antipodal theorem needs a sphere graph");
  if (g.vertex_count % 4 != 0)
    throw KasteleynError("antipodal theorem needs 4n vertices");
  ColoringReport col = bipartite_coloring(g);
  if (!col.colors) throw KasteleynError("antipodal theorem needs a bipartite graph");
  for (int v = 0; v < g.vertex_count; ++v) {
    if (involution[v] == v) throw KasteleynError("involution has a fixed vertex");
    if (involution[involution[v]] != v) throw KasteleynError("not an involution");
  }
  // color-reversing: on every self-paired component the involution must
  // swap the classes of the intrinsic 2-coloring; swapped component pairs
  // are recolorable and always fine
  for (const ComponentInfo& c : info.components) {
    int cid = info.vertex_component[c.vertices[0]];
    if (info.vertex_component[involution[c.vertices[0]]] != cid) continue;
    for (int v : c.vertices)
      if ((*col.colors)[involution[v]] == (*col.colors)[v])
        throw KasteleynError("involution preserves colors");
  }
  EmbeddedGraph q = quotient_by_free_automorphism(g, involution, 2);
  Int big = count_matchings(g);
  Int small = count_matchings(q);
  if (big != small * small)
    throw KasteleynError("antipodal square identity failed: " + big.get_str() +
                         " != (" + small.get_str() + ")^2");
  return {big, small};
}

std::vector<int> positive_side_faces(const EmbeddedGraph& g,
                                     const std::vector<int>& colors,
                                     const Matching& m1, const Matching& m2) {
  SurfaceInfo info = validate(g);
  std::vector<int> dart_face = info.dart_face();
  std::vector<int> loop_edges;
  for (int e : m1)
    if (!m2.count(e)) loop_edges.push_back(e);
  for (int e : m2)
    if (!m1.count(e)) loop_edges.push_back(e);
  if (loop_edges.empty())
    throw KasteleynError("matchings are identical");
  // direct the loop: m1 edges run black -> white, m2 edges reversed
  // (white -> black along the traversal)
  std::vector<char> in_loop(g.edge_count(), 0);
  for (int e : loop_edges) in_loop[e] = 1;
  std::vector<int> loop_darts;
  for (int e : loop_edges) {
    bool is_m1 = m1.count(e) > 0;
    int black_dart = colors[g.edges[e].u] == 0 ? 2 * e : 2 * e + 1;
    loop_darts.push_back(is_m1 ? black_dart : EmbeddedGraph::twin(black_dart));
  }
  // positive side: faces whose traversal crosses a loop edge in the same
  // direction as the loop, then flood fill without crossing the loop
  std::vector<char> pos_face(info.faces.size(), 0);
  std::queue<int> q;
  for (int d : loop_darts) {
    int f = dart_face[d];
    if (!pos_face[f]) {
      pos_face[f] = 1;
      q.push(f);
    }
  }
  // face adjacency over non-loop edges
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (const FaceSide& s : info.faces[f].sides) {
      int e = s.dart / 2;
      if (in_loop[e]) continue;
      int other = dart_face[EmbeddedGraph::twin(s.dart)];
      if (!pos_face[other]) {
        pos_face[other] = 1;
        q.push(other);
      }
    }
  }
  std::vector<int> out;
  for (size_t f = 0; f < pos_face.size(); ++f)
    if (pos_face[f]) out.push_back((int)f);
  return out;
}

}  // namespace permadet
