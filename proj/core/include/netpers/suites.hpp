#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netpers {

struct SuiteResult {
    std::string name;
    int cases_run = 0;
    int failures = 0;
    std::vector<std::string> messages;  // one entry per failed check

    bool passed() const { return failures == 0 && cases_run > 0; }
    void check(bool ok, const std::string& what);
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int n_cases = 100;
    int jobs = 1;
    /// Deliberately corrupts the expected values; the suite must then fail.
    /// Exists so that "this harness can detect a failure" is itself testable.
    bool corrupt = false;
};

/// Dowker diagrams of cycle networks across all dimensions versus their exact
/// characterization (dim 1 point (1, ceil(n/2)); even/odd-dimension laws).
SuiteResult run_cycle_suite(const SuiteOptions& opt);

/// Dowker sink diagram == source diagram at dims 0 and 1 on random networks.
SuiteResult run_duality_suite(const SuiteOptions& opt);

/// d_B <= 2 d_N at dims 0,1 for Rips/sink/source on random pairs with exact
/// d_N from correspondence enumeration, plus agreement of the map-pair and
/// correspondence formulations of d_N to 1e-12.
SuiteResult run_stability_suite(const SuiteOptions& opt);

/// Nested random relation pairs: Betti/rank/two-step diagram consistency of
/// the E and F complexes.
SuiteResult run_fdt_suite(const SuiteOptions& opt);

/// Circle nerve at radius k/(2n) equals the Dowker sink snapshot of the cycle
/// network at delta = k, as simplex sets, for n = 3..10 and k = 0..n.
SuiteResult run_cech_suite(const SuiteOptions& opt);

/// Transformation laws on random networks: Rips blind to symmetrization,
/// transposition and pair swaps; Dowker dim-0 blind to pair swaps; sink of X
/// equals source of transpose(X); plus a witness pair where a swap changes
/// the dim-1 Dowker diagram.
SuiteResult run_invariance_suite(const SuiteOptions& opt);

/// Subdivision map contiguity: the four diagram-chase identities on one
/// relation and the two inclusion-compatibility identities on nested pairs,
/// plus negative controls for the contiguity checker.
SuiteResult run_contiguity_suite(const SuiteOptions& opt);

/// Suite registry for the CLI (cycle, duality, stability, fdt, cech, invariance).
SuiteResult run_suite_by_name(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();

}  // namespace netpers
