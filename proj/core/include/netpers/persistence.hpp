#pragma once

#include <limits>
#include <map>
#include <vector>

#include "netpers/filtration.hpp"
#include "netpers/simplicial_complex.hpp"
#include "netpers/types.hpp"

namespace netpers {

constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

struct DiagramPoint {
    double birth;
    double death;  // kInfiniteDeath for essential classes

    bool essential() const { return death == kInfiniteDeath; }
    double persistence() const { return death - birth; }

    friend bool operator==(const DiagramPoint& a, const DiagramPoint& b) {
        return a.birth == b.birth && a.death == b.death;
    }
    friend bool operator<(const DiagramPoint& a, const DiagramPoint& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    }
};

/// Per-dimension multiset of (birth, death) pairs, sorted. Zero-persistence
/// pairs are never stored.
class PersistenceDiagram {
public:
    PersistenceDiagram() = default;

    void add(int dim, DiagramPoint p);
    void sort_points();

    int max_dim() const;
    const std::vector<DiagramPoint>& at_dim(int dim) const;  // empty vector when absent
    std::size_t total_points() const;

    bool operator==(const PersistenceDiagram& other) const { return points_ == other.points_; }

private:
    std::map<int, std::vector<DiagramPoint>> points_;
    static const std::vector<DiagramPoint> empty_;
};

/// Z2 boundary matrix of a filtered complex: columns follow the canonical
/// filtration order, each column listing the row indices of its
/// codimension-one faces. Guarantees boundary-of-boundary = 0.
class BoundaryMatrixZ2 {
public:
    explicit BoundaryMatrixZ2(const FilteredComplex& f);

    std::size_t columns() const { return cols_.size(); }
    const std::vector<int>& column(std::size_t j) const { return cols_[j]; }
    int dim_of(std::size_t j) const { return dims_[j]; }
    double birth_of(std::size_t j) const { return births_[j]; }

    /// Checks that applying the boundary twice annihilates every column.
    bool boundary_squared_is_zero() const;

private:
    std::vector<std::vector<int>> cols_;  // sorted row indices
    std::vector<int> dims_;
    std::vector<double> births_;
};

/// Standard persistence over Z2 by left-to-right column reduction with
/// lowest-one pivoting. Unpaired simplices yield death = infinity; pairs with
/// birth == death are dropped. Throws input_error when max_hom_dim exceeds
/// what the complex's dimension cap makes trustworthy.
PersistenceDiagram compute_persistence(const FilteredComplex& f, int max_hom_dim);

/// Betti numbers over Z2 of a static complex, dims 0..up_to.
std::vector<int> betti_numbers(const SimplicialComplex& k, int up_to);

/// Rank of H_k(K) -> H_k(L) induced by inclusion, computed from the two-step
/// filtration (K at 0, L\K at 1). Throws input_error when K is not a
/// subcomplex of L.
int induced_map_rank(const SimplicialComplex& k, const SimplicialComplex& l, int hom_dim);

/// The two-step filtration itself (K at birth 0, L\K at birth 1).
FilteredComplex two_step_filtration(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace netpers
