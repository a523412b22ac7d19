#include <doctest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "netpers/dendrogram.hpp"
#include "netpers/io.hpp"
#include "netpers/rng.hpp"
#include "test_helpers.hpp"

using namespace netpers;
namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    std::string command = std::string(NETPERS_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 256> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / "netpers-test";
    fs::create_directories(dir);
    return dir;
}

std::string write_temp(const std::string& name, const std::string& contents) {
    auto path = temp_dir() / name;
    std::ofstream out(path);
    out << contents;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kThreeNodeJson =
    R"({"labels": ["a","b","c"], "weights": [[-1,1,2],[1,0,2],[1,2,0]]})";

}  // namespace

TEST_CASE("shortest round-trip double formatting") {
    for (double v : {0.1, 1.0 / 3.0, -0.0, 1e-300, 2.5, -17.125, 6.02e23})
        CHECK(parse_double(format_double(v)) == v);
    CHECK(format_double(-1.0) == "-1");
    CHECK(format_double(0.0) == "0");
    CHECK_THROWS_AS(parse_double("zebra"), input_error);

    Rng rng(61);
    for (int rep = 0; rep < 2000; ++rep) {
        double v = (rng.next_real01() - 0.5) * std::pow(10.0, rng.next_int(-20, 20));
        CHECK(parse_double(format_double(v)) == v);
    }
}

TEST_CASE("network json and csv round trips") {
    Rng rng(62);
    for (int rep = 0; rep < 30; ++rep) {
        Network x = random_network(rng, rng.next_int(1, 6), -3.0, 3.0);
        std::istringstream json_in(network_to_json(x));
        CHECK(read_network_json(json_in) == x);
        std::istringstream csv_in(network_to_csv(x));
        CHECK(read_network_csv(csv_in) == x);
    }

    std::istringstream fig(kThreeNodeJson);
    Network three = read_network_json(fig);
    CHECK(three.weight(0, 0) == -1);
    CHECK(three.weight(2, 1) == 2);

    // the offending cell is named in the error
    std::istringstream bad_cell("a,b\n0,inf\n1,0\n");
    CHECK_THROWS_WITH_AS(read_network_csv(bad_cell, "net.csv"), doctest::Contains("(a, b)"),
                         input_error);
    std::istringstream not_square(R"({"labels":["a","b"],"weights":[[0,1,2],[1,0,2]]})");
    CHECK_THROWS_AS(read_network_json(not_square), input_error);
}

TEST_CASE("diagram csv round trip") {
    PersistenceDiagram d;
    d.add(0, {-1.0, kInfiniteDeath});
    d.add(0, {0.0, 1.0});
    d.add(1, {0.25, 0.75});
    d.sort_points();
    std::string csv = diagram_to_csv(d);
    CHECK(csv == "dim,birth,death\n0,-1,inf\n0,0,1\n1,0.25,0.75\n");
    std::istringstream in(csv);
    CHECK(diagram_equal(read_diagram_csv(in), d));
}

TEST_CASE("dendrogram and distance matrix serialization") {
    DistanceMatrix m{{"u", "v", "w"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}};
    CHECK(distance_matrix_to_csv(m) == "u,v,w\n0,1,2\n1,0,1\n2,1,0\n");

    Dendrogram d = single_linkage(m);
    auto doc = nlohmann::json::parse(dendrogram_to_json(d));
    CHECK(doc["leaves"] == nlohmann::json::array({"u", "v", "w"}));
    // chaining: both merges at height 1, quadruples [height, a, b, new_id]
    CHECK(doc["merges"][0] == nlohmann::json::array({1.0, 0, 1, 3}));
    CHECK(doc["merges"][1] == nlohmann::json::array({1.0, 2, 3, 4}));
}

TEST_CASE("atomic writes leave no temp files") {
    auto dir = temp_dir();
    auto target = dir / "atomic.txt";
    atomic_write_file(target.string(), "payload");
    CHECK(slurp(target.string()) == "payload");
    int stray = 0;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().filename().string().find(".tmp-") != std::string::npos) ++stray;
    CHECK(stray == 0);
}

TEST_CASE("cli version and usage errors") {
    CHECK(run_cli("--version").output == "netpers 1.0.0\n");
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("diagram --input nothing.json --out x.csv").exit_code == 2);
}

TEST_CASE("cli diagram command") {
    std::string net = write_temp("three.json", kThreeNodeJson);
    auto out = (temp_dir() / "three-sink.csv").string();
    auto dump = (temp_dir() / "three-sink.txt").string();

    auto r = run_cli("diagram --input " + net + " --method dowker-sink --max-dim 1 --out " + out +
                     " --dump-filtration " + dump);
    CHECK(r.exit_code == 0);
    CHECK(slurp(out) == "dim,birth,death\n0,-1,inf\n0,0,1\n0,0,1\n");
    CHECK(slurp(dump) ==
          "-1 0 0\n0 0 1\n0 0 2\n1 1 0 1\n1 1 0 2\n1 1 1 2\n1 2 0 1 2\n");

    // byte-identical on rerun
    auto r2 = run_cli("diagram --input " + net + " --method dowker-sink --max-dim 1 --out " + out);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(out) == "dim,birth,death\n0,-1,inf\n0,0,1\n0,0,1\n");

    auto dim0 = (temp_dir() / "three-dim0.csv").string();
    run_cli("diagram --input " + net + " --method dowker-sink --max-dim 0 --out " + dim0);
    for (const auto& line : {std::string("0,-1,inf"), std::string("0,0,1")})
        CHECK(slurp(dim0).find(line) != std::string::npos);
    CHECK(slurp(dim0).find("\n1,") == std::string::npos);

    // failed runs must not leave output behind
    auto never = (temp_dir() / "never.csv").string();
    auto bad = run_cli("diagram --input missing.json --out " + never);
    CHECK(bad.exit_code == 2);
    CHECK_FALSE(fs::exists(never));
}

TEST_CASE("cli compare command") {
    std::string a = write_temp("a.csv", "dim,birth,death\n1,1,3\n");
    std::string b = write_temp("b.csv", "dim,birth,death\n1,1,4\n");
    std::string essential = write_temp("e.csv", "dim,birth,death\n1,0,inf\n");

    CHECK(run_cli("compare --a " + a + " --b " + a + " --dim 1").output == "0\n");
    CHECK(run_cli("compare --a " + a + " --b " + b + " --dim 1").output == "1\n");
    CHECK(run_cli("compare --a " + a + " --b " + essential + " --dim 1").output == "inf\n");
}

TEST_CASE("cli validate command") {
    auto pass = run_cli("validate --suite cycle --seed 1");
    CHECK(pass.exit_code == 0);
    CHECK(pass.output.find("PASS") != std::string::npos);

    auto fail = run_cli("validate --suite duality --seed 1 --n-cases 5 --corrupt");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL") != std::string::npos);

    CHECK(run_cli("validate --suite cycle").exit_code == 2);  // --seed is mandatory
}

TEST_CASE("cli verify-fdt command") {
    std::string r = write_temp("r.rel", "2 3\n1 0 0\n0 1 0\n");
    std::string r_prime = write_temp("rp.rel", "2 3\n1 1 0\n0 1 1\n");
    auto ok = run_cli("verify-fdt --r " + r + " --rprime " + r_prime);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("PASS") != std::string::npos);

    auto backwards = run_cli("verify-fdt --r " + r_prime + " --rprime " + r);
    CHECK(backwards.exit_code == 2);
}

TEST_CASE("cli budget exit code") {
    // 30 nodes at homology dimension 9 would need ~10^14 simplices
    Rng rng(63);
    Network big = random_network(rng, 30, 0.0, 1.0);
    std::string path = write_temp("big.json", network_to_json(big));
    auto r = run_cli("diagram --input " + path + " --max-dim 9 --out " +
                     (temp_dir() / "big.csv").string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("cli experiment command") {
    std::string config = write_temp("exp.json", R"({
        "master_seed": 5,
        "classes": [0, 4],
        "trials_per_class": 1,
        "steps": 300,
        "fields_min": 8,
        "fields_max": 10
    })");
    auto out_dir = (temp_dir() / "exp-out").string();
    auto r = run_cli("experiment --config " + config + " --out " + out_dir + " --jobs 2");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(fs::path(out_dir) / "bottleneck-matrix.csv"));
    CHECK(fs::exists(fs::path(out_dir) / "dendrogram.json"));
    CHECK(fs::exists(fs::path(out_dir) / "manifest.json"));
    CHECK(fs::exists(fs::path(out_dir) / "trials" / "trial-0-0-network.json"));
    CHECK(fs::exists(fs::path(out_dir) / "trials" / "trial-4-0-diagram.csv"));

    std::string matrix = slurp((fs::path(out_dir) / "bottleneck-matrix.csv").string());
    auto rerun_dir = (temp_dir() / "exp-out-2").string();
    auto r2 = run_cli("experiment --config " + config + " --out " + rerun_dir);
    CHECK(r2.exit_code == 0);
    CHECK(slurp((fs::path(rerun_dir) / "bottleneck-matrix.csv").string()) == matrix);

    std::string no_seed = write_temp("exp-no-seed.json", R"({"classes": [0]})");
    CHECK(run_cli("experiment --config " + no_seed + " --out " + out_dir).exit_code == 2);
}
