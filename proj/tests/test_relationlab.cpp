#include <doctest.h>

#include <algorithm>

#include "netpers/fdt.hpp"
#include "netpers/nerve.hpp"
#include "netpers/persistence.hpp"
#include "netpers/rng.hpp"
#include "netpers/subdivision.hpp"
#include "netpers/suites.hpp"
#include "oracles.hpp"

using namespace netpers;

namespace {

Relation random_relation(Rng& rng, int nrows, int ncols, double density) {
    for (;;) {
        Relation r(nrows, ncols);
        for (int x = 0; x < nrows; ++x)
            for (int y = 0; y < ncols; ++y)
                if (rng.next_bool(density)) r.set(x, y);
        if (!r.empty()) return r;
    }
}

// Relabels nerve simplices (over member positions) through member_labels.
std::vector<Simplex> relabeled_nerve(const Cover& cover) {
    std::vector<Simplex> out;
    SimplicialComplex n = nerve(cover);
    for (const auto& s : n.simplices()) {
        Simplex relabeled;
        for (int idx : s) relabeled.push_back(cover.member_labels[idx]);
        std::sort(relabeled.begin(), relabeled.end());
        out.push_back(std::move(relabeled));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("nerve basics") {
    SimplicialComplex host = SimplicialComplex::closure({{0, 1}, {2}});
    Cover one{host, {host}, {0}};
    CHECK(nerve(one).simplices() == std::vector<Simplex>{{0}});

    Cover disjoint{host,
                   {SimplicialComplex::closure({{0, 1}}), SimplicialComplex::from_simplices({{2}})},
                   {0, 1}};
    auto n = nerve(disjoint);
    CHECK(n.simplices() == std::vector<Simplex>{{0}, {1}});
}

TEST_CASE("cover from a relation and its nerve recover the Dowker complexes") {
    Rng rng(51);
    for (int rep = 0; rep < 40; ++rep) {
        int nx = rng.next_int(2, 6), ny = rng.next_int(2, 6);
        int max_dim = std::max(nx, ny);
        Relation r = random_relation(rng, nx, ny, rng.next_real(0.3, 0.8));
        Cover cover = cover_from_relation(r, max_dim);
        CHECK(cover.is_cover_of_simplices());
        CHECK(cover.host == dowker_e_complex(r.transposed(), max_dim));  // host is F_R

        // nerve equals E_R, checked against the definitional membership test
        SimplicialComplex e = dowker_e_complex(r, max_dim);
        std::vector<Simplex> e_simplices = e.simplices();
        std::sort(e_simplices.begin(), e_simplices.end());
        CHECK(relabeled_nerve(cover) == e_simplices);
        for (const auto& s : e.simplices()) CHECK(oracles::in_e_complex(r, s));
    }
}

TEST_CASE("cover from the full and identity relations") {
    Relation full(3, 4);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 4; ++y) full.set(x, y);
    Cover c = cover_from_relation(full, 3);
    REQUIRE(c.members.size() == 3);
    for (const auto& m : c.members) CHECK(m == c.host);  // each member is all of F_R

    Relation identity(4, 4);
    for (int i = 0; i < 4; ++i) identity.set(i, i);
    Cover ci = cover_from_relation(identity, 3);
    REQUIRE(ci.members.size() == 4);
    for (const auto& m : ci.members) CHECK(m.size() == 1);
}

TEST_CASE("relation from a cover") {
    // host: two triangles sharing the edge {1,2}
    SimplicialComplex host = SimplicialComplex::closure({{0, 1, 2}, {1, 2, 3}});
    Cover c{host,
            {SimplicialComplex::closure({{0, 1, 2}}), SimplicialComplex::closure({{1, 2, 3}})},
            {0, 1}};
    Relation r = relation_from_cover(c);
    CHECK(r.nrows() == 4);
    CHECK(r.ncols() == 2);
    // E of that relation is the host, F is the nerve (an edge)
    CHECK(dowker_e_complex(r, 3) == host);
    SimplicialComplex f = dowker_e_complex(r.transposed(), 3);
    CHECK(f.simplices() == std::vector<Simplex>{{0}, {1}, {0, 1}});

    // single full-simplex member: every vertex relates to the one member
    Cover single{SimplicialComplex::closure({{0, 1, 2}}),
                 {SimplicialComplex::closure({{0, 1, 2}})},
                 {0}};
    Relation rs = relation_from_cover(single);
    for (int v = 0; v < 3; ++v) CHECK(rs.at(v, 0));

    // not a cover of simplices: hollow triangle member
    SimplicialComplex hollow =
        SimplicialComplex::from_simplices({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
    Cover bad{hollow, {hollow}, {0}};
    CHECK_THROWS_AS(relation_from_cover(bad), input_error);
}

TEST_CASE("relation -> cover -> relation round trip (transposed restriction)") {
    Rng rng(52);
    for (int rep = 0; rep < 20; ++rep) {
        Relation r = random_relation(rng, 4, 4, 0.5);
        Cover cover = cover_from_relation(r, 3);
        Relation back = relation_from_cover(cover);
        // rows of `back` are the vertices of F_R in order, columns the
        // vertices of E_R; entries must match the transposed original
        std::vector<int> f_vertices = cover.host.vertex_ids();
        for (std::size_t row = 0; row < f_vertices.size(); ++row)
            for (std::size_t col = 0; col < cover.member_labels.size(); ++col)
                CHECK(back.at(static_cast<int>(row), static_cast<int>(col)) ==
                      r.at(cover.member_labels[col], f_vertices[row]));
    }
}

TEST_CASE("barycentric subdivision") {
    SimplicialComplex edge = SimplicialComplex::closure({{0, 1}});
    Subdivision sd = barycentric_subdivision(edge);
    CHECK(sd.complex.size() == 5);  // 3 vertices + 2 edges: a path through the midpoint
    CHECK(betti_numbers(sd.complex, 1) == std::vector<int>{1, 0});

    SimplicialComplex triangle_boundary =
        SimplicialComplex::from_simplices({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
    Subdivision hexagon = barycentric_subdivision(triangle_boundary);
    int vertices = 0, edges = 0;
    for (const auto& s : hexagon.complex.simplices())
        (s.size() == 1 ? vertices : edges) += 1;
    CHECK(vertices == 6);
    CHECK(edges == 6);
    CHECK(betti_numbers(hexagon.complex, 1) == std::vector<int>{1, 1});

    Rng rng(53);
    for (int rep = 0; rep < 15; ++rep) {
        Relation r = random_relation(rng, 3, 4, 0.5);
        SimplicialComplex k = dowker_e_complex(r, 3);
        Subdivision sub = barycentric_subdivision(k);
        CHECK(betti_numbers(k, 2) == betti_numbers(sub.complex, 2));
    }
}

TEST_CASE("least vertex map") {
    SimplicialComplex edge = SimplicialComplex::closure({{0, 1}});
    Subdivision sd = barycentric_subdivision(edge);
    SimplicialMapSpec phi = least_vertex_map(edge, sd);
    CHECK(phi.apply_vertex(sd.vertex_for(edge, {0})) == 0);
    CHECK(phi.apply_vertex(sd.vertex_for(edge, {1})) == 1);
    CHECK(phi.apply_vertex(sd.vertex_for(edge, {0, 1})) == 0);
    CHECK(is_simplicial(phi, sd.complex, edge));

    Rng rng(54);
    for (int rep = 0; rep < 15; ++rep) {
        Relation r = random_relation(rng, 4, 4, 0.5);
        SimplicialComplex k = dowker_e_complex(r, 3);
        Subdivision sub = barycentric_subdivision(k);
        SimplicialMapSpec f = least_vertex_map(k, sub);
        CHECK(is_simplicial(f, sub.complex, k));
        // order-reversing on nested subdivision vertices
        for (const auto& chain : sub.complex.simplices())
            for (std::size_t i = 1; i < chain.size(); ++i)
                CHECK(f.apply_vertex(chain[i - 1]) >= f.apply_vertex(chain[i]));
        // induces isomorphisms on homology: full rank in every dimension
        for (int dim = 0; dim <= 2; ++dim) {
            auto matrix = induced_homology_matrix(f, sub.complex, k, dim);
            auto betti = betti_numbers(k, dim);
            CHECK(static_cast<int>(matrix.size()) == betti[dim]);
            Z2ColumnSpace span(matrix.empty() ? 1 : matrix.front().size());
            for (const auto& col : matrix) span.insert(col);
            CHECK(static_cast<int>(span.rank()) == betti[dim]);
        }
    }
}

TEST_CASE("sink assignment map") {
    Relation full(3, 4);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 4; ++y) full.set(x, y);
    SimplicialComplex e = dowker_e_complex(full, 2);
    Subdivision sd = barycentric_subdivision(e);
    SimplicialMapSpec psi = sink_assignment_map(full, e, sd);
    for (const auto& [v, y] : psi.vertex_map) CHECK(y == 0);  // least witness is column 0

    Rng rng(55);
    for (int rep = 0; rep < 15; ++rep) {
        Relation r = random_relation(rng, 4, 4, 0.5);
        SimplicialComplex er = dowker_e_complex(r, 3);
        SimplicialComplex fr = dowker_e_complex(r.transposed(), 3);
        Subdivision sub = barycentric_subdivision(er);
        SimplicialMapSpec p1 = sink_assignment_map(r, er, sub);
        SimplicialMapSpec p2 = sink_assignment_map(r, er, sub, SinkChoiceRule::GreatestIndex);
        CHECK(is_simplicial(p1, sub.complex, fr));
        CHECK(is_simplicial(p2, sub.complex, fr));
        CHECK(are_contiguous(p1, p2, sub.complex, fr));
    }
}

TEST_CASE("contiguity checker") {
    SimplicialComplex k = SimplicialComplex::closure({{0, 1}});
    SimplicialMapSpec id = identity_map(k);
    CHECK(are_contiguous(id, id, k, k));

    SimplicialComplex two_points = SimplicialComplex::from_simplices({{0}, {1}});
    SimplicialMapSpec to_zero, to_one;
    to_zero.vertex_map = {{0, 0}, {1, 0}};
    to_one.vertex_map = {{0, 1}, {1, 1}};
    CHECK_FALSE(are_contiguous(to_zero, to_one, k, two_points));

    SimplicialMapSpec not_simplicial;
    not_simplicial.vertex_map = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(are_contiguous(not_simplicial, not_simplicial, k, two_points), input_error);
}

TEST_CASE("contiguous maps induce equal homology matrices") {
    Rng rng(56);
    int verified = 0;
    for (int rep = 0; rep < 20 && verified < 10; ++rep) {
        Relation r = random_relation(rng, 4, 4, 0.5);
        SimplicialComplex k = dowker_e_complex(r, 3);
        if (k.size() > 40) continue;
        Subdivision sub = barycentric_subdivision(k);
        SimplicialMapSpec least = least_vertex_map(k, sub);
        // greatest-vertex variant: also sends each chain into its top simplex
        SimplicialMapSpec greatest;
        for (std::size_t v = 0; v < sub.original_simplex.size(); ++v)
            greatest.vertex_map.emplace(static_cast<int>(v), sub.original_simplex[v].back());
        REQUIRE(are_contiguous(least, greatest, sub.complex, k));
        for (int dim = 0; dim <= 1; ++dim)
            CHECK(induced_homology_matrix(least, sub.complex, k, dim) ==
                  induced_homology_matrix(greatest, sub.complex, k, dim));
        ++verified;
    }
    CHECK(verified == 10);
}

TEST_CASE("fdt pair verification") {
    Relation identity(4, 4);
    for (int i = 0; i < 4; ++i) identity.set(i, i);
    Relation full(4, 4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) full.set(x, y);

    auto same = verify_fdt_pair(identity, identity, 1);
    CHECK(same.passed);
    CHECK(same.rank_e == std::vector<int>{4, 0});  // identity map on four components

    auto nested = verify_fdt_pair(identity, full, 1);
    CHECK(nested.passed);
    CHECK(nested.rank_e[0] == 1);  // four components collapse into one

    CHECK_THROWS_AS(verify_fdt_pair(full, identity, 1), input_error);
    CHECK_THROWS_AS(verify_fdt_pair(Relation(2, 2), full, 1), input_error);

    Rng rng(57);
    for (int rep = 0; rep < 25; ++rep) {
        Relation big = random_relation(rng, 5, 5, 0.6);
        Relation small(5, 5);
        bool nonempty = false;
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                if (big.at(x, y) && rng.next_bool(0.7)) {
                    small.set(x, y);
                    nonempty = true;
                }
        if (!nonempty) continue;
        CHECK(verify_fdt_pair(small, big, 2).passed);
    }
}

TEST_CASE("contiguity suite including negative controls") {
    SuiteOptions opt;
    opt.seed = 99;
    opt.n_cases = 5;
    auto result = run_contiguity_suite(opt);
    for (const auto& m : result.messages) MESSAGE(m);
    CHECK(result.passed());
}
