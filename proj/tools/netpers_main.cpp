// Command-line front end: diagrams, diagram comparison, validation suites,
// relation checks and the place-cell classification experiment.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "netpers/fdt.hpp"
#include "netpers/filtration.hpp"
#include "netpers/hippocampus.hpp"
#include "netpers/io.hpp"
#include "netpers/persistence.hpp"
#include "netpers/relation.hpp"
#include "netpers/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetError = 3;

using nlohmann::json;

// Simplex-count guard: a filtration holds every vertex subset of size up to
// cap+1, which grows binomially in the node count.
void check_diagram_budget(int n, int cap) {
    const double budget = 5e7;
    double total = 0.0, binom = 1.0;
    for (int s = 1; s <= cap + 1 && s <= n; ++s) {
        binom = binom * (n - s + 1) / s;
        total += binom;
        if (total > budget)
            throw netpers::budget_error(
                "filtration would exceed " + std::to_string(static_cast<long long>(budget)) +
                " simplices; lower --max-dim or shrink the network");
    }
}

int cmd_diagram(const std::string& input, const std::string& method, int max_hom_dim,
                const std::string& out_path, const std::string& dump_path) {
    netpers::Network net = netpers::load_network(input);
    const int cap = max_hom_dim + 1;
    check_diagram_budget(net.size(), cap);
    netpers::FilteredComplex filtration = [&] {
        if (method == "rips") return netpers::rips_filtration(net, cap);
        if (method == "dowker-sink") return netpers::dowker_sink_filtration(net, cap);
        if (method == "dowker-source") return netpers::dowker_source_filtration(net, cap);
        throw netpers::input_error("unknown method '" + method + "'");
    }();
    netpers::PersistenceDiagram diagram = netpers::compute_persistence(filtration, max_hom_dim);
    if (!dump_path.empty())
        netpers::atomic_write_file(dump_path, netpers::filtration_to_text(filtration));
    netpers::atomic_write_file(out_path, netpers::diagram_to_csv(diagram));
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, int dim) {
    auto a = netpers::load_diagram_csv(path_a);
    auto b = netpers::load_diagram_csv(path_b);
    double d = netpers::bottleneck_distance(a, b, dim);
    std::cout << (std::isfinite(d) ? netpers::format_double(d) : "inf") << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& suite, std::uint64_t seed, int n_cases, int jobs,
                 bool corrupt) {
    netpers::SuiteOptions opt;
    opt.seed = seed;
    opt.n_cases = n_cases;
    opt.jobs = jobs;
    opt.corrupt = corrupt;
    netpers::SuiteResult result = netpers::run_suite_by_name(suite, opt);
    std::cout << "suite " << result.name << ": " << result.cases_run << " checks, "
              << result.failures << " failures\n";
    for (std::size_t i = 0; i < result.messages.size() && i < 20; ++i)
        std::cout << "  FAIL: " << result.messages[i] << "\n";
    if (result.messages.size() > 20)
        std::cout << "  ... " << (result.messages.size() - 20) << " more\n";
    std::cout << (result.passed() ? "PASS" : "FAIL") << "\n";
    return result.passed() ? kExitOk : kExitValidationFailure;
}

int cmd_verify_fdt(const std::string& path_r, const std::string& path_r_prime, int max_hom_dim) {
    netpers::Relation r = netpers::load_relation(path_r);
    netpers::Relation r_prime = netpers::load_relation(path_r_prime);
    netpers::FdtReport report = netpers::verify_fdt_pair(r, r_prime, max_hom_dim);
    auto print_row = [](const std::string& name, const std::vector<int>& values) {
        std::cout << name << ":";
        for (int v : values) std::cout << " " << v;
        std::cout << "\n";
    };
    print_row("betti E_R ", report.betti_e_small);
    print_row("betti F_R ", report.betti_f_small);
    print_row("betti E_R'", report.betti_e_large);
    print_row("betti F_R'", report.betti_f_large);
    print_row("rank E->E'", report.rank_e);
    print_row("rank F->F'", report.rank_f);
    std::cout << "two-step diagrams equal: " << (report.diagrams_equal ? "yes" : "no") << "\n";
    for (const auto& f : report.failures) std::cout << "FAIL: " << f << "\n";
    std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
    return report.passed ? kExitOk : kExitValidationFailure;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir, int jobs) {
    netpers::ExperimentConfig cfg = netpers::load_experiment_config(config_path);
    cfg.jobs = jobs;
    netpers::ExperimentResult result = netpers::run_experiment(cfg);

    namespace fs = std::filesystem;
    fs::create_directories(fs::path(out_dir) / "trials");
    json manifest;
    manifest["config"] = {{"arena_side", cfg.arena_side},
                          {"grid_points", cfg.grid_points},
                          {"hole_radius_factor", cfg.hole_radius_factor},
                          {"classes", cfg.classes},
                          {"trials_per_class", cfg.trials_per_class},
                          {"steps", cfg.steps},
                          {"fields_min", cfg.fields_min},
                          {"fields_max", cfg.fields_max},
                          {"field_radius_factor", cfg.field_radius_factor},
                          {"delay_window", cfg.delay_window},
                          {"master_seed", cfg.master_seed},
                          {"snap_grid", cfg.snap_grid},
                          {"coverage_threshold", cfg.coverage_threshold},
                          {"max_dim", cfg.max_dim},
                          {"diagram_dim", cfg.diagram_dim}};
    json trials = json::array();
    for (const auto& t : result.trials) {
        std::string stem = "trial-" + std::to_string(t.arena_class) + "-" +
                           std::to_string(t.trial_index);
        std::string net_file = "trials/" + stem + "-network.json";
        std::string dgm_file = "trials/" + stem + "-diagram.csv";
        netpers::atomic_write_file((fs::path(out_dir) / net_file).string(),
                                   netpers::network_to_json(t.network));
        netpers::atomic_write_file((fs::path(out_dir) / dgm_file).string(),
                                   netpers::diagram_to_csv(t.diagram));
        trials.push_back({{"label", t.label},
                          {"class", t.arena_class},
                          {"trial", t.trial_index},
                          {"seed", t.seed},
                          {"n_fields", t.n_fields},
                          {"coverage", t.coverage},
                          {"coverage_flagged", t.coverage_flagged},
                          {"network", net_file},
                          {"diagram", dgm_file}});
    }
    manifest["trials"] = std::move(trials);
    manifest["separation"] = {{"within_mean", result.within_mean},
                              {"between_mean", result.between_mean},
                              {"separated", result.within_mean < result.between_mean}};

    netpers::atomic_write_file((fs::path(out_dir) / "bottleneck-matrix.csv").string(),
                               netpers::distance_matrix_to_csv(result.matrix));
    netpers::atomic_write_file((fs::path(out_dir) / "dendrogram.json").string(),
                               netpers::dendrogram_to_json(result.dendrogram));
    netpers::atomic_write_file((fs::path(out_dir) / "manifest.json").string(),
                               manifest.dump(2) + "\n");
    std::cout << "trials: " << result.trials.size() << "\n"
              << "within-class mean bottleneck: " << result.within_mean << "\n"
              << "between-class mean bottleneck: " << result.between_mean << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rips and Dowker persistent homology of weighted directed networks"};
    app.set_version_flag("--version", std::string("netpers ") + NETPERS_VERSION);
    app.require_subcommand(1);

    auto* diagram = app.add_subcommand("diagram", "Compute a persistence diagram of a network");
    std::string diagram_input, diagram_method = "dowker-sink", diagram_out, diagram_dump;
    int diagram_max_dim = 1;
    diagram->add_option("--input", diagram_input, "Network file (.json or .csv)")->required();
    diagram->add_option("--method", diagram_method, "rips | dowker-sink | dowker-source")
        ->check(CLI::IsMember({"rips", "dowker-sink", "dowker-source"}));
    diagram->add_option("--max-dim", diagram_max_dim, "Largest homology dimension")
        ->check(CLI::NonNegativeNumber);
    diagram->add_option("--out", diagram_out, "Output diagram CSV")->required();
    diagram->add_option("--dump-filtration", diagram_dump, "Also dump the filtration as text");

    auto* compare = app.add_subcommand("compare", "Bottleneck distance between two diagram files");
    std::string compare_a, compare_b;
    int compare_dim = 1;
    compare->add_option("--a", compare_a, "First diagram CSV")->required();
    compare->add_option("--b", compare_b, "Second diagram CSV")->required();
    compare->add_option("--dim", compare_dim, "Homology dimension")->check(CLI::NonNegativeNumber);

    auto* validate = app.add_subcommand("validate", "Run a validation suite");
    std::string validate_suite;
    std::uint64_t validate_seed = 0;
    int validate_cases = 100, validate_jobs = 1;
    bool validate_corrupt = false;
    validate
        ->add_option("--suite", validate_suite,
                     "cycle | duality | stability | fdt | cech | invariance")
        ->required()
        ->check(CLI::IsMember(netpers::suite_names()));
    validate->add_option("--seed", validate_seed, "Random seed (required; no ambient entropy)")
        ->required();
    validate->add_option("--n-cases", validate_cases, "Number of randomized cases")
        ->check(CLI::PositiveNumber);
    validate->add_option("--jobs", validate_jobs, "Worker thread cap")->check(CLI::PositiveNumber);
    validate->add_flag("--corrupt", validate_corrupt,
                       "Deliberately corrupt the expected values (self-test of the harness)");

    auto* verify = app.add_subcommand("verify-fdt", "Check a nested relation pair at homology level");
    std::string verify_r, verify_r_prime;
    int verify_dim = 2;
    verify->add_option("--r", verify_r, "Relation file for R")->required();
    verify->add_option("--rprime", verify_r_prime, "Relation file for R' (must contain R)")
        ->required();
    verify->add_option("--max-hom-dim", verify_dim, "Largest homology dimension checked")
        ->check(CLI::NonNegativeNumber);

    auto* experiment = app.add_subcommand("experiment", "Run the place-cell classification pipeline");
    std::string experiment_config, experiment_out;
    int experiment_jobs = 1;
    experiment->add_option("--config", experiment_config, "Experiment config JSON")->required();
    experiment->add_option("--out", experiment_out, "Output directory")->required();
    experiment->add_option("--jobs", experiment_jobs, "Worker thread cap")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (diagram->parsed())
            return cmd_diagram(diagram_input, diagram_method, diagram_max_dim, diagram_out,
                               diagram_dump);
        if (compare->parsed()) return cmd_compare(compare_a, compare_b, compare_dim);
        if (validate->parsed())
            return cmd_validate(validate_suite, validate_seed, validate_cases, validate_jobs,
                                validate_corrupt);
        if (verify->parsed()) return cmd_verify_fdt(verify_r, verify_r_prime, verify_dim);
        if (experiment->parsed())
            return cmd_experiment(experiment_config, experiment_out, experiment_jobs);
    } catch (const netpers::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetError;
    } catch (const netpers::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
