#include "netpers/fdt.hpp"

#include <string>

#include "netpers/diagram_distance.hpp"

namespace netpers {

FdtReport verify_fdt_pair(const Relation& r, const Relation& r_prime, int max_hom_dim) {
    if (r.empty() || r_prime.empty()) throw input_error("FDT check needs nonempty relations");
    if (!r.subset_of(r_prime)) throw input_error("FDT check needs nested relations R <= R'");

    const int max_dim = max_hom_dim + 1;
    auto [e_small, f_small] = dowker_pair_from_relation(r, max_dim);
    auto [e_large, f_large] = dowker_pair_from_relation(r_prime, max_dim);

    FdtReport report;
    report.betti_e_small = betti_numbers(e_small, max_hom_dim);
    report.betti_f_small = betti_numbers(f_small, max_hom_dim);
    report.betti_e_large = betti_numbers(e_large, max_hom_dim);
    report.betti_f_large = betti_numbers(f_large, max_hom_dim);

    for (int k = 0; k <= max_hom_dim; ++k) {
        report.rank_e.push_back(induced_map_rank(e_small, e_large, k));
        report.rank_f.push_back(induced_map_rank(f_small, f_large, k));
    }

    PersistenceDiagram dgm_e = compute_persistence(two_step_filtration(e_small, e_large), max_hom_dim);
    PersistenceDiagram dgm_f = compute_persistence(two_step_filtration(f_small, f_large), max_hom_dim);
    report.diagrams_equal = diagram_equal(dgm_e, dgm_f);

    for (int k = 0; k <= max_hom_dim; ++k) {
        if (report.betti_e_small[k] != report.betti_f_small[k])
            report.failures.push_back("betti mismatch between E_R and F_R at dim " + std::to_string(k));
        if (report.betti_e_large[k] != report.betti_f_large[k])
            report.failures.push_back("betti mismatch between E_R' and F_R' at dim " + std::to_string(k));
        if (report.rank_e[k] != report.rank_f[k])
            report.failures.push_back("induced-map rank mismatch at dim " + std::to_string(k));
    }
    if (!report.diagrams_equal)
        report.failures.push_back("two-step persistence diagrams of the E and F sides differ");
    report.passed = report.failures.empty();
    return report;
}

}  // namespace netpers
