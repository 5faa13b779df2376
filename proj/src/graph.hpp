#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ring.hpp"

namespace permadet {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-edge (dart) ids: 2e is based at edges[e].u, 2e+1 at edges[e].v.
struct EdgeRec {
  int u = 0, v = 0;
  RingElem weight = RingElem(1);
  int sign = +1;  // -1 marks an orientation-reversing edge (crosscap)
};

// A graph embedded in a surface, encoded as a signed rotation system:
// a cyclic order of darts at every vertex plus a sign per edge.  Sphere
// embeddings have all signs +1; one independent -1 cycle gives the
// projective plane.
struct EmbeddedGraph {
  int vertex_count = 0;
  std::vector<EdgeRec> edges;
  std::vector<std::vector<int>> rotation;  // darts, counterclockwise
  std::optional<std::vector<int>> colors;  // 0 black, 1 white
  std::string name;

  int edge_count() const { return (int)edges.size(); }
  int dart_count() const { return 2 * edge_count(); }
  static int twin(int dart) { return dart ^ 1; }
  static int edge_of(int dart) { return dart / 2; }
  int dart_base(int dart) const {
    const EdgeRec& e = edges[dart / 2];
    return (dart & 1) ? e.v : e.u;
  }
  int dart_head(int dart) const { return dart_base(twin(dart)); }
  bool is_loop(int e) const { return edges[e].u == edges[e].v; }
  int degree(int v) const { return (int)rotation[v].size(); }
  int other_end(int e, int v) const {
    return edges[e].u == v ? edges[e].v : edges[e].u;
  }

  // append an edge; rotations must be updated by the caller
  int add_edge(int u, int v, RingElem w = RingElem(1), int sign = +1);
};

enum class Surface { sphere, projective_plane };

struct FaceSide {
  int dart;      // traversal crosses the edge leaving from dart_base(dart)
  bool forward;  // true when the crossing runs u -> v
};

struct Face {
  std::vector<FaceSide> sides;
  int component = 0;
  int side_count() const { return (int)sides.size(); }
};

struct ComponentInfo {
  std::vector<int> vertices;  // ascending
  int edge_ct = 0;
  int face_ct = 0;
  bool orientable = true;
  int euler = 2;
  Surface surface = Surface::sphere;
};

struct SurfaceInfo {
  Surface surface = Surface::sphere;  // projective if any component is
  std::vector<Face> faces;
  std::vector<ComponentInfo> components;
  std::vector<int> vertex_component;

  bool all_faces_even() const;
  // face index containing each dart; requires an orientable (sphere)
  // embedding, where the correspondence is one-to-one
  std::vector<int> dart_face() const;
};

// Full structural validation: rotation coverage, color sanity, face
// tracing, Euler characteristic 2 or 1 per component.
SurfaceInfo validate(const EmbeddedGraph& g);

std::vector<Face> trace_faces(const EmbeddedGraph& g);

struct ColoringReport {
  std::optional<std::vector<int>> colors;  // lowest vertex of a component is black
  bool locally_bipartite = false;          // every face has an even side count
};

ColoringReport bipartite_coloring(const EmbeddedGraph& g);

// Planar dual: one vertex per face, one edge crossing each primal edge.
// With midpoints, every dual edge is subdivided once.  Sphere input only.
EmbeddedGraph dual_graph(const EmbeddedGraph& g, bool midpoints = false);

// One vertex per primal edge; two vertices adjacent once per shared
// primal endpoint.  The induced embedding needs max degree 3.
EmbeddedGraph edge_graph(const EmbeddedGraph& g);

// Quotient by a free automorphism of order k given as a vertex
// permutation.  Orientation-reversing generators (detected from the
// rotations) produce projective-plane quotients via edge signs.
EmbeddedGraph quotient_by_free_automorphism(const EmbeddedGraph& g,
                                            const std::vector<int>& perm,
                                            int order);

// --- shared helpers ---

// induced action of a vertex permutation on darts; throws when the
// permutation is not an automorphism of the underlying weighted graph
std::vector<int> dart_action(const EmbeddedGraph& g, const std::vector<int>& perm);

// connected components as standalone graphs plus original-vertex maps
struct SubgraphPiece {
  EmbeddedGraph graph;
  std::vector<int> vertex_map;  // new id -> old id
};
std::vector<SubgraphPiece> split_components(const EmbeddedGraph& g);

// subgraph induced on a vertex subset (rotations restricted, order kept)
EmbeddedGraph induced_subgraph(const EmbeddedGraph& g, const std::vector<int>& keep,
                               std::vector<int>* vertex_map_out = nullptr);

using Matching = std::set<int>;  // edge ids

bool is_perfect_matching(const EmbeddedGraph& g, const Matching& m);

}  // namespace permadet
