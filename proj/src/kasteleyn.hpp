#pragma once

#include <map>
#include <optional>
#include <utility>

#include "graph.hpp"
#include "matrix.hpp"

namespace permadet {

struct KasteleynError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-indexed unit weights (+-1 or +-q^k).
struct Weighting {
  std::vector<RingElem> w;
};

// Edge-indexed directions; true orients u -> v.
struct Orientation {
  std::vector<char> forward;
};

// One unit per face, aligned with validate(g).faces; must multiply to 1
// within every component.
struct CurvaturePrescription {
  std::vector<RingElem> values;
};

// Kasteleyn curvature of a bipartite face: (-1)^(|F|/2+1) prod(F+)/prod(F-),
// where F+ holds the sides whose black->white direction agrees with the
// face traversal.
RingElem curvature(const EmbeddedGraph& g, const std::vector<int>& colors,
                   const Weighting& w, const Face& face);

// +1 iff an odd number of sides point along the face traversal.
int orientation_curvature(const EmbeddedGraph& g, const Face& face,
                          const Orientation& o);

// Product of curvature over all faces (always 1 for any weighting).
RingElem total_curvature(const EmbeddedGraph& g, const Weighting& w);

CurvaturePrescription all_flat_prescription(const SurfaceInfo& info);

// Internal faces prescribed by the caller; the designated outer face of
// each component receives the unique value making the component product 1.
CurvaturePrescription prescription_with_outer(
    const SurfaceInfo& info, const std::map<int, RingElem>& internal,
    const std::vector<int>& outer_faces);

// A +-monomial weighting realizing the prescription exactly.
Weighting prescribed_curvature_weighting(const EmbeddedGraph& g,
                                         const CurvaturePrescription& p);

// All faces flat (+-1 entries); bipartite sphere graphs only.
Weighting flat_weighting(const EmbeddedGraph& g);

// Flat orientation; sphere graphs, or projective-plane graphs that are
// locally but not globally bipartite.
Orientation flat_orientation(const EmbeddedGraph& g);

// Bipartite adjacency matrix: rows are black vertices ascending, columns
// white ascending; entries sum parallel weights.
ExactMatrix kasteleyn_matrix(const EmbeddedGraph& g, const Weighting& w,
                             std::vector<int>* black_out = nullptr,
                             std::vector<int>* white_out = nullptr);

// Antisymmetric adjacency matrix under an orientation.
ExactMatrix antisymmetric_matrix(const EmbeddedGraph& g, const Orientation& o,
                                 const Weighting& w);

// Number of perfect matchings: |det| of a flat weighting (bipartite) or
// |Pf| of a flat orientation; 0 for odd vertex count; componentwise.
Int count_matchings(const EmbeddedGraph& g);

// det / Pf of the weighted graph; with a reference matching the result is
// divided by the reference term, so the reference contributes +1.
RingElem weighted_matching_sum(const EmbeddedGraph& g, const Weighting& w,
                               const std::optional<Matching>& reference = std::nullopt);

// The det-expansion term of one matching: sign times its weight product.
RingElem matching_term(const EmbeddedGraph& g, const Weighting& w, const Matching& m);
RingElem matching_term_pf(const EmbeddedGraph& g, const Orientation& o,
                          const Weighting& w, const Matching& m);

// Smith normal form of the flat-weighted Kasteleyn matrix.
InvariantFactors cokernel_of(const EmbeddedGraph& g);

// Both counts of the antipodal theorem; throws unless the involution is a
// fixed-point-free color-reversing embedded automorphism on 4n vertices,
// and asserts count(g) = count(g/p)^2.
std::pair<Int, Int> antipodal_square_check(const EmbeddedGraph& g,
                                           const std::vector<int>& involution);

// Faces enclosed on the positive side of the loop separating two
// matchings (sphere graphs); used by the loop-ratio checks.
std::vector<int> positive_side_faces(const EmbeddedGraph& g,
                                     const std::vector<int>& colors,
                                     const Matching& m1, const Matching& m2);

}  // namespace permadet
