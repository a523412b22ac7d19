#pragma once

#include <string>
#include <vector>

#include "netpers/persistence.hpp"

namespace netpers {

/// Exact bottleneck distance between two single-dimension diagrams (pass the
/// point lists of one homological dimension). Unmatched points pay their L-inf
/// distance to the diagonal; essential points can only match essential points,
/// so unequal essential counts give +infinity. Computed by binary search over
/// the candidate cost set with bipartite matching feasibility.
double bottleneck_distance(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b);

/// Bottleneck distance at one dimension of two full diagrams.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

/// Exact multiset equality across all dimensions.
bool diagram_equal(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Symmetric nonnegative matrix with zero diagonal and row labels.
struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> d;

    int size() const { return static_cast<int>(labels.size()); }
    void validate() const;  // throws input_error on asymmetry/negative/nonzero diagonal
};

/// Pairwise bottleneck distances at the given dimension. +infinity entries are
/// propagated (serialized as "inf"). Pairs are computed in parallel when
/// jobs > 1; the result does not depend on jobs.
DistanceMatrix bottleneck_matrix(const std::vector<PersistenceDiagram>& diagrams, int dim,
                                 const std::vector<std::string>& labels, int jobs = 1);

}  // namespace netpers
