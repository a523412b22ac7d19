#pragma once

#include <string>
#include <vector>

#include "netpers/persistence.hpp"
#include "netpers/relation.hpp"

namespace netpers {

/// Homology-level consistency report for a nested pair of relations R <= R':
/// (a) Betti numbers of E and F agree at both levels, (b) the inclusion-induced
/// ranks H_k(E_R) -> H_k(E_R') and H_k(F_R) -> H_k(F_R') agree, and (c) the
/// two-step persistence diagrams of the E- and F-sides are equal.
struct FdtReport {
    std::vector<int> betti_e_small, betti_f_small;
    std::vector<int> betti_e_large, betti_f_large;
    std::vector<int> rank_e, rank_f;  // per homology dimension 0..max_hom_dim
    bool diagrams_equal = false;
    bool passed = false;
    std::vector<std::string> failures;
};

/// Throws input_error when the relations are not nested or one is empty.
FdtReport verify_fdt_pair(const Relation& r, const Relation& r_prime, int max_hom_dim);

}  // namespace netpers
