#pragma once

#include <unordered_map>
#include <vector>

#include "netpers/simplicial_complex.hpp"
#include "netpers/z2_algebra.hpp"

namespace netpers {

/// A simplicial map given by its action on vertices. Valid between K and L
/// when the image vertex set of every simplex of K is a simplex of L.
struct SimplicialMapSpec {
    std::unordered_map<int, int> vertex_map;

    int apply_vertex(int v) const;
    Simplex apply(const Simplex& s) const;  // sorted, duplicates collapsed
};

bool is_simplicial(const SimplicialMapSpec& f, const SimplicialComplex& k,
                   const SimplicialComplex& l);

/// g after f (apply f first).
SimplicialMapSpec compose(const SimplicialMapSpec& g, const SimplicialMapSpec& f);

SimplicialMapSpec identity_map(const SimplicialComplex& k);

/// true iff f(sigma) union g(sigma) is a simplex of L for every sigma in K.
/// Throws input_error when f or g is not simplicial K -> L.
bool are_contiguous(const SimplicialMapSpec& f, const SimplicialMapSpec& g,
                    const SimplicialComplex& k, const SimplicialComplex& l);

/// Matrix of the map induced on H_hom_dim over Z2, expressed in fixed
/// homology bases extracted from kernel/boundary reduction of K and L.
/// Column i holds the coordinates of f_#(z_i) for the i-th basis class of
/// H_hom_dim(K). Contiguous maps induce equal matrices.
std::vector<Z2Vector> induced_homology_matrix(const SimplicialMapSpec& f,
                                              const SimplicialComplex& k,
                                              const SimplicialComplex& l, int hom_dim);

}  // namespace netpers
