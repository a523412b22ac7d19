#include "netpers/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netpers/diagram_distance.hpp"
#include "netpers/fdt.hpp"
#include "netpers/filtration.hpp"
#include "netpers/nerve.hpp"
#include "netpers/network.hpp"
#include "netpers/network_distance.hpp"
#include "netpers/persistence.hpp"
#include "netpers/relation.hpp"
#include "netpers/rng.hpp"
#include "netpers/subdivision.hpp"

namespace netpers {

void SuiteResult::check(bool ok, const std::string& what) {
    ++cases_run;
    if (!ok) {
        ++failures;
        messages.push_back(what);
    }
}

namespace {

std::string point_list(const std::vector<DiagramPoint>& pts) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i ? ", " : "") << "(" << pts[i].birth << ", ";
        if (pts[i].essential())
            os << "inf";
        else
            os << pts[i].death;
        os << ")";
    }
    os << "}";
    return os.str();
}

bool points_equal(const std::vector<DiagramPoint>& got, std::vector<DiagramPoint> expected) {
    std::sort(expected.begin(), expected.end());
    return got == expected;
}

/// Exact Dowker diagram of the cycle network predicted by its
/// characterization. Dimension 0: one essential class born 0 plus n-1 classes
/// (0, 1). Even dimensions 2l: when (l+1) divides n and k = nl/(l+1) <= n-2,
/// the point (k, k+1) with multiplicity n/(l+1) - 1. Odd dimensions 2l+1: when
/// some integer lies strictly between nl/(l+1) and n(l+1)/(l+2), the point
/// (min such integer, ceil(n(l+1)/(l+2))) with multiplicity 1.
std::vector<DiagramPoint> predicted_cycle_diagram(int n, int dim) {
    std::vector<DiagramPoint> out;
    if (dim == 0) {
        out.push_back({0.0, kInfiniteDeath});
        for (int i = 0; i < n - 1; ++i) out.push_back({0.0, 1.0});
        std::sort(out.begin(), out.end());
        return out;
    }
    if (dim % 2 == 0) {
        const int l = dim / 2;
        if (n % (l + 1) != 0) return out;
        const int k = n * l / (l + 1);
        if (k > n - 2) return out;
        const int multiplicity = n / (l + 1) - 1;
        for (int i = 0; i < multiplicity; ++i)
            out.push_back({static_cast<double>(k), static_cast<double>(k + 1)});
        return out;
    }
    const int l = (dim - 1) / 2;
    const double lo = static_cast<double>(n) * l / (l + 1);
    const double hi = static_cast<double>(n) * (l + 1) / (l + 2);
    int first = -1;
    for (int m = static_cast<int>(std::floor(lo)) + 1; m < hi; ++m) {
        if (static_cast<double>(m) > lo && static_cast<double>(m) < hi) {
            first = m;
            break;
        }
    }
    if (first < 0) return out;
    out.push_back({static_cast<double>(first), std::ceil(hi)});
    return out;
}

// Zero diagonal, nonnegative off-diagonal weights. The dim-0 swap invariance
// needs this shape: with arbitrary diagonals a swap can move vertex births
// (they are row minima) and genuinely change the dim-0 diagram.
Network random_dissimilarity_network(Rng& rng, int n, double hi) {
    std::vector<std::string> labels(n);
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        labels[i] = "n" + std::to_string(i);
        for (int j = 0; j < n; ++j)
            if (i != j) rows[i][j] = rng.next_real(0.0, hi);
    }
    return Network(std::move(labels), std::move(rows));
}

Relation random_relation(Rng& rng, int nrows, int ncols, double density) {
    for (;;) {
        Relation r(nrows, ncols);
        for (int x = 0; x < nrows; ++x)
            for (int y = 0; y < ncols; ++y)
                if (rng.next_bool(density)) r.set(x, y);
        if (!r.empty()) return r;
    }
}

Relation random_subrelation(Rng& rng, const Relation& r, double keep) {
    for (;;) {
        Relation sub(r.nrows(), r.ncols());
        bool nonempty = false;
        for (int x = 0; x < r.nrows(); ++x)
            for (int y = 0; y < r.ncols(); ++y)
                if (r.at(x, y) && rng.next_bool(keep)) {
                    sub.set(x, y);
                    nonempty = true;
                }
        if (nonempty) return sub;
    }
}

}  // namespace

SuiteResult run_cycle_suite(const SuiteOptions& opt) {
    SuiteResult res{.name = "cycle"};
    // corruption control: shifts every predicted birth by one
    const double bias = opt.corrupt ? 1.0 : 0.0;

    // Dimension 1 point (1, ceil(n/2)) with multiplicity 1, for n = 3..10.
    for (int n = 3; n <= 10; ++n) {
        auto diagram = compute_persistence(dowker_sink_filtration(cycle_network(n), 2), 1);
        std::vector<DiagramPoint> expected = {{1.0 + bias, std::ceil(n / 2.0)}};
        res.check(points_equal(diagram.at_dim(1), expected),
                  "cycle n=" + std::to_string(n) + ": dim-1 diagram " +
                      point_list(diagram.at_dim(1)) + " != expected " + point_list(expected));
    }

    // All dimensions against the characterization, full skeleton, n = 3..8.
    for (int n = 3; n <= 8; ++n) {
        auto filtration = dowker_sink_filtration(cycle_network(n), n - 1);
        auto diagram = compute_persistence(filtration, n - 2);
        for (int dim = 0; dim <= n - 2; ++dim) {
            auto expected = predicted_cycle_diagram(n, dim);
            for (auto& p : expected) p.birth += bias;
            if (bias != 0.0 && expected.empty()) expected.push_back({bias, bias + 1.0});
            res.check(points_equal(diagram.at_dim(dim), expected),
                      "cycle n=" + std::to_string(n) + " dim " + std::to_string(dim) +
                          ": diagram " + point_list(diagram.at_dim(dim)) + " != expected " +
                          point_list(expected));
        }
    }
    return res;
}

SuiteResult run_duality_suite(const SuiteOptions& opt) {
    SuiteResult res{.name = "duality"};
    Rng rng(opt.seed);
    for (int case_id = 0; case_id < opt.n_cases; ++case_id) {
        int n = rng.next_int(1, 6);
        Network x = random_network(rng, n, -1.0, 2.0);
        auto sink = compute_persistence(dowker_sink_filtration(x, 2), 1);
        auto source = compute_persistence(dowker_source_filtration(x, 2), 1);
        if (opt.corrupt && case_id == 0) source.add(1, {0.0, 1.0});
        bool equal = diagram_equal(sink, source);
        res.check(equal, "duality case " + std::to_string(case_id) + " (n=" + std::to_string(n) +
                             "): sink diagram != source diagram");
    }
    return res;
}

SuiteResult run_stability_suite(const SuiteOptions& opt) {
    SuiteResult res{.name = "stability"};
    Rng rng(opt.seed);
    const double slack = opt.corrupt ? -1.0 : 1e-9;

    for (int case_id = 0; case_id < opt.n_cases; ++case_id) {
        int nx = rng.next_int(1, 4), ny = rng.next_int(1, 4);
        Network x = random_network(rng, nx, 0.0, 2.0);
        Network y = random_network(rng, ny, 0.0, 2.0);
        double dn = network_distance_correspondences(x, y);

        for (int dim = 0; dim <= 1; ++dim) {
            auto pair_name = "case " + std::to_string(case_id) + " dim " + std::to_string(dim);
            double d_rips = bottleneck_distance(compute_persistence(rips_filtration(x, 2), 1),
                                                compute_persistence(rips_filtration(y, 2), 1), dim);
            double d_sink =
                bottleneck_distance(compute_persistence(dowker_sink_filtration(x, 2), 1),
                                    compute_persistence(dowker_sink_filtration(y, 2), 1), dim);
            double d_source =
                bottleneck_distance(compute_persistence(dowker_source_filtration(x, 2), 1),
                                    compute_persistence(dowker_source_filtration(y, 2), 1), dim);
            res.check(d_rips <= 2.0 * dn + slack, "stability (Rips) violated: " + pair_name);
            res.check(d_sink <= 2.0 * dn + slack, "stability (Dowker sink) violated: " + pair_name);
            res.check(d_source <= 2.0 * dn + slack,
                      "stability (Dowker source) violated: " + pair_name);
        }
    }

    // The two exact formulations must agree.
    const int n_equivalence = std::max(1, opt.n_cases / 2);
    for (int case_id = 0; case_id < n_equivalence; ++case_id) {
        int nx = rng.next_int(1, 4), ny = rng.next_int(1, 4);
        Network x = random_network(rng, nx, -1.0, 1.0);
        Network y = random_network(rng, ny, -1.0, 1.0);
        double via_corr = network_distance_correspondences(x, y);
        double via_maps = network_distance_maps(x, y).distance;
        res.check(std::fabs(via_corr - via_maps) <= 1e-12 + (opt.corrupt ? -1.0 : 0.0),
                  "map/correspondence network distance mismatch: case " + std::to_string(case_id) +
                      ": " + std::to_string(via_maps) + " vs " + std::to_string(via_corr));
    }
    return res;
}

SuiteResult run_fdt_suite(const SuiteOptions& opt) {
    SuiteResult res{.name = "fdt"};
    Rng rng(opt.seed);
    for (int case_id = 0; case_id < opt.n_cases; ++case_id) {
        int nx = rng.next_int(2, 6), ny = rng.next_int(2, 6);
        Relation r_prime = random_relation(rng, nx, ny, rng.next_real(0.3, 0.8));
        Relation r = random_subrelation(rng, r_prime, rng.next_real(0.4, 0.9));
        if (opt.corrupt && case_id == 0) {
            res.check(false, "corrupted fdt oracle (intentional failure)");
            continue;
        }
        auto report = verify_fdt_pair(r, r_prime, 2);
        std::string detail;
        for (const auto& f : report.failures) detail += " | " + f;
        res.check(report.passed, "fdt case " + std::to_string(case_id) + " (" +
                                     std::to_string(nx) + "x" + std::to_string(ny) + ")" + detail);
    }
    return res;
}

SuiteResult run_cech_suite(const SuiteOptions& opt) {
    SuiteResult res{.name = "cech"};
    for (int n = 3; n <= 10; ++n) {
        auto filtration = dowker_sink_filtration(cycle_network(n), n - 1);
        for (int k = 0; k <= n; ++k) {
            auto nerve_complex = cech_circle_complex(n, k / (2.0 * n));
            auto snapshot = filtration.complex_at(static_cast<double>(k) + (opt.corrupt ? -0.5 : 0.0));
            std::sort(nerve_complex.begin(), nerve_complex.end());
            std::sort(snapshot.begin(), snapshot.end());
            res.check(nerve_complex == snapshot,
                      "circle nerve vs Dowker snapshot differ at n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + " (" + std::to_string(nerve_complex.size()) +
                          " vs " + std::to_string(snapshot.size()) + " simplices)");
        }
    }
    return res;
}

SuiteResult run_invariance_suite(const SuiteOptions& opt) {
    SuiteResult res{.name = "invariance"};
    Rng rng(opt.seed);
    for (int case_id = 0; case_id < opt.n_cases; ++case_id) {
        int n = rng.next_int(2, 5);
        Network x = random_network(rng, n, -1.0, 2.0);
        int a = rng.next_int(0, n - 1);
        int b = (a + rng.next_int(1, n - 1)) % n;
        Network swapped = pair_swap(x, std::min(a, b), std::max(a, b));

        auto rips = rips_filtration(x, 2);
        res.check(rips == rips_filtration(max_symmetrize(x), 2),
                  "Rips filtration changed under max-symmetrization, case " + std::to_string(case_id));
        res.check(rips == rips_filtration(transpose(x), 2),
                  "Rips filtration changed under transposition, case " + std::to_string(case_id));
        res.check(rips == rips_filtration(swapped, 2),
                  "Rips filtration changed under pair swap, case " + std::to_string(case_id));
        if (opt.corrupt && case_id == 0)
            res.check(false, "corrupted invariance oracle (intentional failure)");

        // Dim-0 swap invariance holds on dissimilarity networks (zero diagonal,
        // nonnegative weights); it fails for arbitrary diagonals.
        Network dis = random_dissimilarity_network(rng, n, 2.0);
        Network dis_swapped = pair_swap(dis, std::min(a, b), std::max(a, b));
        res.check(diagram_equal(compute_persistence(dowker_sink_filtration(dis, 1), 0),
                                compute_persistence(dowker_sink_filtration(dis_swapped, 1), 0)),
                  "Dowker dim-0 diagram changed under pair swap, case " + std::to_string(case_id));

        res.check(dowker_source_filtration(x, 2) == dowker_sink_filtration(transpose(x), 2),
                  "source filtration != sink filtration of transpose, case " + std::to_string(case_id));
        res.check(diagram_equal(compute_persistence(dowker_sink_filtration(x, 2), 1),
                                compute_persistence(dowker_source_filtration(transpose(x), 2), 1)),
                  "sink diagram of X != source diagram of transpose(X), case " +
                      std::to_string(case_id));
    }

    // Witness that Dowker dim-1 diagrams are NOT blind to pair swaps: the
    // canonical three-node pair (swap exchanges the a<->c weights 4 and 2).
    Network witness({"a", "b", "c"}, {{0, 6, 4}, {1, 0, 5}, {2, 3, 0}});
    Network witness_swapped = pair_swap(witness, "a", "c");
    auto d1 = compute_persistence(dowker_sink_filtration(witness, 2), 1);
    auto d2 = compute_persistence(dowker_sink_filtration(witness_swapped, 2), 1);
    res.check(!diagram_equal(d1, d2),
              "expected a dim-1 Dowker diagram change under the witness pair swap");
    res.check(points_equal(d2.at_dim(1), {{3.0, 4.0}}),
              "witness swap dim-1 diagram is " + point_list(d2.at_dim(1)) + ", expected {(3, 4)}");
    return res;
}

SuiteResult run_contiguity_suite(const SuiteOptions& opt) {
    SuiteResult res{.name = "contiguity"};
    Rng rng(opt.seed);

    // Subdivision blowup is steep; take a second subdivision only for hosts
    // of at most 50 simplices.
    auto within_budget = [](const SimplicialComplex& c) { return c.size() <= 50; };

    int accepted = 0;
    int attempts = 0;
    while (accepted < opt.n_cases && attempts < opt.n_cases * 200) {
        ++attempts;
        int nx = rng.next_int(2, 4), ny = rng.next_int(2, 4);
        Relation r = random_relation(rng, nx, ny, rng.next_real(0.3, 0.7));
        auto [e, f] = dowker_pair_from_relation(r, std::max(nx, ny));
        if (!within_budget(e) || !within_budget(f)) continue;
        ++accepted;
        const std::string tag = " (relation case " + std::to_string(accepted) + ")";

        Relation rt = r.transposed();
        Subdivision e1 = barycentric_subdivision(e);
        Subdivision f1 = barycentric_subdivision(f);
        Subdivision e2 = barycentric_subdivision(e1.complex);
        Subdivision f2 = barycentric_subdivision(f1.complex);

        SimplicialMapSpec phi_e = least_vertex_map(e, e1);        // E^(1) -> E
        SimplicialMapSpec phi_f = least_vertex_map(f, f1);        // F^(1) -> F
        SimplicialMapSpec phi_e1 = least_vertex_map(e1.complex, e2);  // E^(2) -> E^(1)
        SimplicialMapSpec phi_f1 = least_vertex_map(f1.complex, f2);  // F^(2) -> F^(1)
        SimplicialMapSpec psi_f = sink_assignment_map(r, e, e1);   // E^(1) -> F
        SimplicialMapSpec psi_e = sink_assignment_map(rt, f, f1);  // F^(1) -> E
        SimplicialMapSpec psi_f1 = subdivide_map(psi_f, e2, f, f1);  // E^(2) -> F^(1)
        SimplicialMapSpec psi_e1 = subdivide_map(psi_e, f2, e, e1);  // F^(2) -> E^(1)

        const bool flip = opt.corrupt && accepted == 1;
        res.check(are_contiguous(compose(phi_e, phi_e1), compose(psi_e, psi_f1), e2.complex, e) !=
                      flip,
                  "item 1: Phi_E o Phi_E1 vs Psi_E o Psi_F1 not contiguous" + tag);
        res.check(are_contiguous(compose(phi_f, phi_f1), compose(psi_f, psi_e1), f2.complex, f),
                  "item 2: Phi_F o Phi_F1 vs Psi_F o Psi_E1 not contiguous" + tag);
        res.check(are_contiguous(compose(psi_e, phi_f1), compose(phi_e, psi_e1), f2.complex, e),
                  "item 3: Psi_E o Phi_F1 vs Phi_E o Psi_E1 not contiguous" + tag);
        res.check(are_contiguous(compose(psi_f, phi_e1), compose(phi_f, psi_f1), e2.complex, f),
                  "item 4: Psi_F o Phi_E1 vs Phi_F o Psi_F1 not contiguous" + tag);

        // Choice-rule variants of the witness assignment stay contiguous.
        SimplicialMapSpec psi_f_alt = sink_assignment_map(r, e, e1, SinkChoiceRule::GreatestIndex);
        res.check(are_contiguous(psi_f, psi_f_alt, e1.complex, f),
                  "alternative witness choices not contiguous" + tag);

        // Functorial identities on a nested pair R <= R'.
        Relation r_small = random_subrelation(rng, r, 0.7);
        auto [e_s, f_s] = dowker_pair_from_relation(r_small, std::max(nx, ny));
        Subdivision e1_s = barycentric_subdivision(e_s);
        Subdivision f1_s = barycentric_subdivision(f_s);
        SimplicialMapSpec psi_e_small = sink_assignment_map(r_small.transposed(), f_s, f1_s);
        SimplicialMapSpec phi_f_small = least_vertex_map(f_s, f1_s);
        SimplicialMapSpec iota_f1 = subdivision_inclusion(f1_s, f, f1);

        // iota_E o Psi_E_R vs Psi_E_R' o iota_F1 : F_R^(1) -> E_R'
        res.check(are_contiguous(psi_e_small, compose(psi_e, iota_f1), f1_s.complex, e),
                  "functorial claim (E side) not contiguous" + tag);
        // iota_F o Phi_F_R vs Phi_F_R' o iota_F1 : F_R^(1) -> F_R'
        res.check(are_contiguous(phi_f_small, compose(phi_f, iota_f1), f1_s.complex, f),
                  "functorial claim (F side) not contiguous" + tag);
    }
    res.check(accepted == opt.n_cases,
              "could not draw enough relations within the subdivision budget");

    // Negative controls: the checker must reject maps whose pointwise union
    // leaves the target.
    SimplicialComplex edge = SimplicialComplex::closure({{0, 1}});
    SimplicialComplex two_points = SimplicialComplex::from_simplices({{0}, {1}});
    SimplicialMapSpec const_zero, const_one;
    const_zero.vertex_map = {{0, 0}, {1, 0}};
    const_one.vertex_map = {{0, 1}, {1, 1}};
    res.check(!are_contiguous(const_zero, const_one, edge, two_points),
              "negative control 1: constant maps to non-adjacent vertices must not be contiguous");

    SimplicialComplex square =
        SimplicialComplex::closure({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    SimplicialMapSpec id_sq = identity_map(square);
    SimplicialMapSpec antipode;
    antipode.vertex_map = {{0, 2}, {1, 3}, {2, 0}, {3, 1}};
    res.check(!are_contiguous(id_sq, antipode, square, square),
              "negative control 2: identity vs antipode on the square must not be contiguous");
    return res;
}

SuiteResult run_suite_by_name(const std::string& name, const SuiteOptions& opt) {
    if (name == "cycle") return run_cycle_suite(opt);
    if (name == "duality") return run_duality_suite(opt);
    if (name == "stability") return run_stability_suite(opt);
    if (name == "fdt") return run_fdt_suite(opt);
    if (name == "cech") return run_cech_suite(opt);
    if (name == "invariance") return run_invariance_suite(opt);
    throw input_error("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"cycle", "duality", "stability", "fdt", "cech", "invariance"};
}

}  // namespace netpers
