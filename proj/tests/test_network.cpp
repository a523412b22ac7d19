#include <doctest.h>

#include "netpers/network.hpp"
#include "netpers/rng.hpp"
#include "test_helpers.hpp"

using namespace netpers;

TEST_CASE("network validation") {
    CHECK_NOTHROW(Network({"x"}, {{0.0}}));
    CHECK_THROWS_AS(Network({}, {}), input_error);
    CHECK_THROWS_AS(Network({"a", "a"}, {{0, 1}, {1, 0}}), input_error);
    CHECK_THROWS_AS(Network({"a", "b"}, {{0, 1}}), input_error);
    CHECK_THROWS_AS(Network({"a", "b"}, {{0, 1}, {1}}), input_error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Network({"a", "b"}, {{0, inf}, {1, 0}}), input_error);
    // negative weights are legal, including on the diagonal
    CHECK_NOTHROW(Network({"a", "b"}, {{-1, -5}, {0, 2}}));
}

TEST_CASE("transpose") {
    Network x = helpers::three_node_example();
    Network t = transpose(x);
    CHECK(t.weight(0, 2) == 1);  // a->c picks up the old c->a weight
    CHECK(t.weight(2, 0) == 2);
    CHECK(t.labels() == x.labels());

    Network sym({"a", "b"}, {{0, 3}, {3, 0}});
    CHECK(transpose(sym) == sym);

    Rng rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        Network r = random_network(rng, 5, -2.0, 2.0);
        CHECK(transpose(transpose(r)) == r);
    }
}

TEST_CASE("max symmetrize") {
    Network x = helpers::three_node_example();
    Network s = max_symmetrize(x);
    CHECK(s.weight(0, 2) == 2);
    CHECK(s.weight(2, 0) == 2);
    CHECK(max_symmetrize(s) == s);

    Rng rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        Network r = random_network(rng, 4, -2.0, 2.0);
        CHECK(max_symmetrize(transpose(r)) == max_symmetrize(r));
        Network m = max_symmetrize(r);
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) CHECK(m.weight(i, j) == m.weight(j, i));
    }
}

TEST_CASE("pair swap") {
    CHECK(pair_swap(helpers::swap_witness_x(), "a", "c") == helpers::swap_witness_y());

    Network sym({"a", "b"}, {{0, 3}, {3, 0}});
    CHECK(pair_swap(sym, "a", "b") == sym);

    Rng rng(44);
    for (int rep = 0; rep < 20; ++rep) {
        Network r = random_network(rng, 4, -1.0, 1.0);
        int i = rng.next_int(0, 3), j = (i + rng.next_int(1, 3)) % 4;
        CHECK(pair_swap(pair_swap(r, i, j), i, j) == r);
    }

    Network x = helpers::three_node_example();
    CHECK_THROWS_AS(pair_swap(x, "a", "a"), input_error);
    CHECK_THROWS_AS(pair_swap(x, "a", "zz"), input_error);
}

TEST_CASE("cycle network") {
    Network g3 = cycle_network(3);
    CHECK(g3.weight_rows() == std::vector<std::vector<double>>{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});

    for (int n : {3, 4, 7, 10}) {
        Network g = cycle_network(n);
        for (int i = 0; i < n; ++i) {
            CHECK(g.weight(i, i) == 0);
            CHECK(g.weight(i, (i + 1) % n) == 1);
            CHECK(g.weight((i + 1) % n, i) == n - 1);
            for (int j = 0; j < n; ++j) {
                if (i != j) CHECK(g.weight(i, j) + g.weight(j, i) == n);
                // row i is row 0 cyclically shifted
                CHECK(g.weight(i, j) == g.weight(0, ((j - i) % n + n) % n));
            }
        }
    }
    Network g4 = cycle_network(4);
    CHECK(g4.weight(0, 2) == 2);
    CHECK(g4.weight(2, 0) == 2);

    CHECK_THROWS_AS(cycle_network(2), input_error);
}
