#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "netpers/filtration.hpp"
#include "netpers/relation.hpp"
#include "netpers/rng.hpp"
#include "test_helpers.hpp"

using namespace netpers;

namespace {

double birth_of(const FilteredComplex& f, const Simplex& s) {
    for (const auto& fs : f.simplices())
        if (fs.vertices == s) return fs.birth;
    FAIL("simplex not found in filtration");
    return 0.0;
}

FilteredComplex shift_births(const Network& x, double c,
                             FilteredComplex (*build)(const Network&, int), int max_dim) {
    auto rows = x.weight_rows();
    for (auto& row : rows)
        for (double& v : row) v += c;
    return build(Network(x.labels(), rows), max_dim);
}

}  // namespace

TEST_CASE("dowker sink filtration of the three-node example") {
    FilteredComplex f = dowker_sink_filtration(helpers::three_node_example(), 2);
    f.validate();
    CHECK(birth_of(f, {0}) == -1);
    CHECK(birth_of(f, {1}) == 0);
    CHECK(birth_of(f, {2}) == 0);
    CHECK(birth_of(f, {0, 1}) == 1);
    CHECK(birth_of(f, {0, 2}) == 1);
    CHECK(birth_of(f, {1, 2}) == 1);
    CHECK(birth_of(f, {0, 1, 2}) == 1);
}

TEST_CASE("dowker source filtration of the three-node example") {
    FilteredComplex f = dowker_source_filtration(helpers::three_node_example(), 2);
    f.validate();
    CHECK(birth_of(f, {0, 1}) == 1);
    CHECK(birth_of(f, {0, 2}) == 1);
    CHECK(birth_of(f, {1, 2}) == 2);
    CHECK(birth_of(f, {0, 1, 2}) == 2);
}

TEST_CASE("single node network") {
    FilteredComplex f = dowker_sink_filtration(Network({"x"}, {{4.5}}), 2);
    REQUIRE(f.size() == 1);
    CHECK(f.simplices()[0].birth == 4.5);
}

TEST_CASE("sink birth of the antipodal edge in the four-cycle") {
    Network g4 = cycle_network(4);
    FilteredComplex f = dowker_sink_filtration(g4, 2);
    // direct enumeration over the four sink candidates
    double expected = std::numeric_limits<double>::infinity();
    for (int cand = 0; cand < 4; ++cand)
        expected = std::min(expected, std::max(g4.weight(0, cand), g4.weight(2, cand)));
    CHECK(expected == 2.0);
    CHECK(birth_of(f, {0, 2}) == expected);
}

TEST_CASE("source equals sink of the transpose, simplex for simplex") {
    Rng rng(21);
    for (int rep = 0; rep < 25; ++rep) {
        Network x = random_network(rng, rng.next_int(1, 5), -1.0, 2.0);
        CHECK(dowker_source_filtration(x, 2) == dowker_sink_filtration(transpose(x), 2));
    }
    Network sym = max_symmetrize(random_network(rng, 4, 0.0, 1.0));
    CHECK(dowker_source_filtration(sym, 2) == dowker_sink_filtration(sym, 2));
}

TEST_CASE("rips filtration") {
    FilteredComplex f = rips_filtration(helpers::three_node_example(), 2);
    f.validate();
    CHECK(birth_of(f, {0}) == -1);
    CHECK(birth_of(f, {0, 1}) == 1);  // max(-1, 0, 1, 1)

    Network two({"a", "b"}, {{0, 3}, {3, 0}});
    CHECK(birth_of(rips_filtration(two, 1), {0, 1}) == 3);

    // self-weights participate in the pair max
    Network loud({"a", "b"}, {{5, 1}, {1, 0}});
    CHECK(birth_of(rips_filtration(loud, 1), {0}) == 5);
    CHECK(birth_of(rips_filtration(loud, 1), {0, 1}) == 5);

    Rng rng(22);
    for (int rep = 0; rep < 25; ++rep) {
        Network x = random_network(rng, 4, -1.0, 2.0);
        CHECK(rips_filtration(x, 2) == rips_filtration(max_symmetrize(x), 2));
        CHECK(rips_filtration(x, 2) == rips_filtration(transpose(x), 2));
    }
}

TEST_CASE("dowker filtrations are genuinely sensitive to direction") {
    // the three-node example separates sink from source, and the sink
    // filtration moves under both transposition and max-symmetrization
    Network x = helpers::three_node_example();
    FilteredComplex sink = dowker_sink_filtration(x, 2);
    CHECK_FALSE(sink == dowker_source_filtration(x, 2));
    CHECK_FALSE(sink == dowker_sink_filtration(transpose(x), 2));
    CHECK_FALSE(sink == dowker_sink_filtration(max_symmetrize(x), 2));
    CHECK(birth_of(dowker_sink_filtration(max_symmetrize(x), 2), {0, 2}) == 2);  // was 1
}

TEST_CASE("snapshots") {
    FilteredComplex f = dowker_sink_filtration(helpers::three_node_example(), 2);
    auto at_half = f.complex_at(0.5);
    CHECK(at_half == std::vector<Simplex>{{0}, {1}, {2}});
    CHECK(f.complex_at(-5.0).empty());
    CHECK(f.complex_at(100.0).size() == 7);  // full 2-skeleton on three nodes
}

TEST_CASE("every constructed filtration passes the validator") {
    Rng rng(24);
    for (int rep = 0; rep < 20; ++rep) {
        Network x = random_network(rng, rng.next_int(1, 6), -2.0, 2.0);
        CHECK_NOTHROW(dowker_sink_filtration(x, 2).validate());
        CHECK_NOTHROW(dowker_source_filtration(x, 2).validate());
        CHECK_NOTHROW(rips_filtration(x, 2).validate());
    }
}

TEST_CASE("filtration validator catches broken inputs") {
    CHECK_THROWS_AS(FilteredComplex({{{0, 1}, 0.0}, {{0}, 0.0}}).validate(),
                    std::logic_error);  // missing face {1}
    CHECK_THROWS_AS(FilteredComplex({{{0}, 1.0}, {{1}, 0.0}, {{0, 1}, 0.5}}).validate(),
                    std::logic_error);  // face born after coface
    CHECK_THROWS_AS(FilteredComplex({{{0}, 0.0}, {{0}, 0.0}}).validate(), std::logic_error);
}

TEST_CASE("constant weight shift moves every birth by the same amount") {
    Rng rng(23);
    Network x = random_network(rng, 4, -1.0, 1.0);
    const double c = 0.75;
    auto check_shift = [&](FilteredComplex (*build)(const Network&, int)) {
        FilteredComplex base = build(x, 2);
        FilteredComplex shifted = shift_births(x, c, build, 2);
        REQUIRE(base.size() == shifted.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(base.simplices()[i].vertices == shifted.simplices()[i].vertices);
            // exact: min/max select an entry, and each entry picked up one
            // identical rounded addition
            CHECK(shifted.simplices()[i].birth == base.simplices()[i].birth + c);
        }
    };
    check_shift(&dowker_sink_filtration);
    check_shift(&dowker_source_filtration);
    check_shift(&rips_filtration);
}

TEST_CASE("dowker pair from an explicit relation") {
    Relation full(3, 4);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 4; ++y) full.set(x, y);
    auto [e_full, f_full] = dowker_pair_from_relation(full, 3);
    CHECK(e_full.size() == 7);    // full simplex on three vertices
    CHECK(f_full.size() == 15);   // full simplex on four vertices

    Relation identity(4, 4);
    for (int i = 0; i < 4; ++i) identity.set(i, i);
    auto [e_id, f_id] = dowker_pair_from_relation(identity, 3);
    CHECK(e_id.size() == 4);
    CHECK(f_id.size() == 4);
    for (const auto& s : e_id.simplices()) CHECK(s.size() == 1);

    // relation R_{delta, X} of the three-node example at delta = 1
    Network x = helpers::three_node_example();
    Relation at_one(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (x.weight(i, j) <= 1.0) at_one.set(i, j);
    auto [e, f] = dowker_pair_from_relation(at_one, 2);
    auto snapshot = dowker_sink_filtration(x, 2).complex_at(1.0);
    std::sort(snapshot.begin(), snapshot.end());
    std::vector<Simplex> e_simplices = e.simplices();
    std::sort(e_simplices.begin(), e_simplices.end());
    CHECK(e_simplices == snapshot);

    CHECK_THROWS_AS(dowker_pair_from_relation(Relation(2, 2), 1), input_error);
}

TEST_CASE("circle nerve extremes") {
    auto vertices_only = cech_circle_complex(5, 0.0);
    CHECK(vertices_only.size() == 5);
    for (const auto& s : vertices_only) CHECK(s.size() == 1);

    auto everything = cech_circle_complex(5, 0.5);
    CHECK(everything.size() == 31);

    // matches the Dowker sink snapshot of the cycle network at integer scale
    auto filtration = dowker_sink_filtration(cycle_network(4), 3);
    for (int k = 0; k <= 4; ++k) {
        auto nerve_complex = cech_circle_complex(4, k / 8.0);
        auto snapshot = filtration.complex_at(k);
        std::sort(nerve_complex.begin(), nerve_complex.end());
        std::sort(snapshot.begin(), snapshot.end());
        CHECK(nerve_complex == snapshot);
    }

    // the nerve is constant between consecutive grid radii
    Rng rng(25);
    for (int rep = 0; rep < 30; ++rep) {
        int n = rng.next_int(3, 9);
        double r = rng.next_real(0.0, 0.5);
        int k = static_cast<int>(std::floor(2.0 * r * n));
        CHECK(cech_circle_complex(n, r) == cech_circle_complex(n, k / (2.0 * n)));
    }
}
