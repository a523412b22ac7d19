#pragma once

#include <optional>
#include <vector>

#include "netpers/network.hpp"
#include "netpers/types.hpp"

namespace netpers {

struct FilteredSimplex {
    Simplex vertices;
    double birth;

    bool operator==(const FilteredSimplex&) const = default;
};

/// A filtered simplicial complex: simplices with real birth values, kept in
/// the canonical order (birth ascending, then dimension, then lexicographic
/// vertex order). Face-closed and birth-monotone by construction; validate()
/// re-checks both.
class FilteredComplex {
public:
    FilteredComplex() = default;

    /// Sorts into canonical order. dimension_cap records the cap the complex
    /// was built with (nullopt means the complex is complete as given).
    explicit FilteredComplex(std::vector<FilteredSimplex> simplices,
                             std::optional<int> dimension_cap = std::nullopt);

    const std::vector<FilteredSimplex>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    std::optional<int> dimension_cap() const { return dimension_cap_; }

    /// Largest birth value (the filtration is constant from here on).
    double max_birth() const;

    /// Snapshot at resolution delta: all simplices with birth <= delta.
    std::vector<Simplex> complex_at(double delta) const;

    /// Checks face closure, birth monotonicity, canonical order and absence of
    /// duplicates. Throws std::logic_error on violation.
    void validate() const;

    bool operator==(const FilteredComplex& other) const {
        return simplices_ == other.simplices_;
    }

private:
    std::vector<FilteredSimplex> simplices_;
    std::optional<int> dimension_cap_;
};

/// Dowker sink filtration: birth(sigma) = min over sink candidates x' of
/// max over x in sigma of w(x, x'). Contains every simplex with at most
/// max_dim+1 vertices.
FilteredComplex dowker_sink_filtration(const Network& x, int max_dim = 2);

/// Dowker source filtration: birth(sigma) = min over x' of max_{x in sigma} w(x', x).
FilteredComplex dowker_source_filtration(const Network& x, int max_dim = 2);

/// Rips filtration: birth(sigma) = max over ordered pairs (x,x') in sigma^2 of
/// w(x, x'). Diagonal entries participate (x = x' is allowed).
FilteredComplex rips_filtration(const Network& x, int max_dim = 2);

}  // namespace netpers
