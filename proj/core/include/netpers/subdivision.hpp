#pragma once

#include <vector>

#include "netpers/relation.hpp"
#include "netpers/simplicial_complex.hpp"
#include "netpers/simplicial_map.hpp"

namespace netpers {

/// First barycentric subdivision. Vertices of the subdivision are the
/// simplices of K (vertex i of the result names original_simplex[i]);
/// simplices are strict inclusion chains.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> original_simplex;  // subdivision vertex id -> simplex of K

    int vertex_for(const SimplicialComplex& k, const Simplex& s) const;
};

Subdivision barycentric_subdivision(const SimplicialComplex& k);

/// The map K^(1) -> K sending each subdivision vertex (a simplex of K) to its
/// least original vertex. Simplicial and order-reversing.
SimplicialMapSpec least_vertex_map(const SimplicialComplex& k, const Subdivision& sd);

enum class SinkChoiceRule { LeastIndex, GreatestIndex };

/// The map E_R^(1) -> F_R assigning to each simplex sigma of E_R a witness
/// column y with (x, y) in R for every x in sigma. All choice rules give
/// contiguous maps; LeastIndex is the canonical one.
SimplicialMapSpec sink_assignment_map(const Relation& r, const SimplicialComplex& e,
                                      const Subdivision& e_sd,
                                      SinkChoiceRule rule = SinkChoiceRule::LeastIndex);

/// Functor action on subdivisions: given simplicial f : K -> L, the map
/// K^(1) -> L^(1) sending vertex sigma to vertex f(sigma).
SimplicialMapSpec subdivide_map(const SimplicialMapSpec& f, const Subdivision& k_sd,
                                const SimplicialComplex& l, const Subdivision& l_sd);

/// Vertex-level inclusion K^(1) -> L^(1) induced by a subcomplex inclusion K <= L.
SimplicialMapSpec subdivision_inclusion(const Subdivision& k_sd, const SimplicialComplex& l,
                                        const Subdivision& l_sd);

}  // namespace netpers
