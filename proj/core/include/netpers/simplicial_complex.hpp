#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "netpers/types.hpp"

namespace netpers {

/// A finite simplicial complex: simplices sorted by (dimension, lexicographic
/// vertex order) with constant-time membership. Face closure is an invariant;
/// from_simplices checks it, closure() repairs it.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Throws std::logic_error when the list is not face-closed or contains duplicates.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    /// Builds the face closure of the given simplices.
    static SimplicialComplex closure(const std::vector<Simplex>& generators);

    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    int dim() const;

    bool contains(const Simplex& s) const { return membership_.count(s) > 0; }

    /// Index of a simplex in the canonical (dim, lex) order; -1 when absent.
    int index_of(const Simplex& s) const;

    std::vector<int> vertex_ids() const;  // sorted vertices appearing in the complex

    bool is_subcomplex_of(const SimplicialComplex& other) const;

    bool operator==(const SimplicialComplex& other) const {
        return simplices_ == other.simplices_;
    }

private:
    void rebuild_index();

    std::vector<Simplex> simplices_;
    std::unordered_set<Simplex, SimplexHash> membership_;
    std::unordered_map<Simplex, int, SimplexHash> index_;
};

}  // namespace netpers
