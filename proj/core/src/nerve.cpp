#include "netpers/nerve.hpp"

#include <algorithm>
#include <unordered_map>

namespace netpers {

void Cover::validate() const {
    if (members.size() != member_labels.size())
        throw input_error("cover: member_labels size mismatch");
    std::unordered_set<Simplex, SimplexHash> covered;
    for (const auto& member : members) {
        for (const auto& s : member.simplices()) {
            if (!host.contains(s)) throw input_error("cover member is not a subcomplex of the host");
            covered.insert(s);
        }
    }
    if (covered.size() != host.size())
        throw input_error("cover members do not cover the host complex");
}

bool Cover::is_cover_of_simplices() const {
    for (const auto& member : members) {
        Simplex top = member.vertex_ids();
        if (top.empty()) return false;
        if (top.size() > 60) return false;  // power-set count would overflow; never hit here
        std::size_t expected = (std::size_t{1} << top.size()) - 1;
        if (member.size() != expected || !member.contains(top)) return false;
    }
    return true;
}

SimplicialComplex nerve(const Cover& c) {
    const int m = static_cast<int>(c.members.size());

    // Members are face-closed, so pairwise-and-deeper intersections are
    // nonempty exactly when a vertex is shared.
    std::vector<int> universe = c.host.vertex_ids();
    std::unordered_map<int, int> bit_of;
    for (std::size_t i = 0; i < universe.size(); ++i) bit_of.emplace(universe[i], static_cast<int>(i));
    const std::size_t words = (universe.size() + 63) / 64 + 1;
    std::vector<std::vector<std::uint64_t>> vertex_bits(m, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < m; ++i)
        for (int v : c.members[i].vertex_ids()) {
            int b = bit_of.at(v);
            vertex_bits[i][b >> 6] |= 1ull << (b & 63);
        }

    std::vector<Simplex> out;
    Simplex current;
    auto rec = [&](auto&& self, int first, const std::vector<std::uint64_t>& shared) -> void {
        for (int i = first; i < m; ++i) {
            std::vector<std::uint64_t> next(words);
            bool nonempty = false;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = shared[w] & vertex_bits[i][w];
                nonempty |= next[w] != 0;
            }
            if (!nonempty) continue;
            current.push_back(i);
            out.push_back(current);
            self(self, i + 1, next);
            current.pop_back();
        }
    };
    std::vector<std::uint64_t> all(words, ~0ull);
    rec(rec, 0, all);
    return SimplicialComplex::from_simplices(std::move(out));
}

Cover cover_from_relation(const Relation& r, int max_dim) {
    if (r.empty()) throw input_error("cover from relation needs a nonempty relation");
    Cover c;
    c.host = dowker_e_complex(r.transposed(), max_dim);  // F_R

    // One member per vertex x of E_R: the full simplex on x's witness columns,
    // truncated like the host.
    for (int x = 0; x < r.nrows(); ++x) {
        std::vector<Simplex> member_simplices;
        for (const auto& tau : c.host.simplices()) {
            bool inside = true;
            for (int y : tau) inside = inside && r.at(x, y);
            if (inside) member_simplices.push_back(tau);
        }
        if (member_simplices.empty()) continue;  // x is not a vertex of E_R
        c.members.push_back(SimplicialComplex::from_simplices(std::move(member_simplices)));
        c.member_labels.push_back(x);
    }
    c.validate();
    return c;
}

Relation relation_from_cover(const Cover& c) {
    c.validate();
    if (!c.is_cover_of_simplices())
        throw input_error("relation from cover needs a cover of simplices");
    std::vector<int> vertices = c.host.vertex_ids();
    std::unordered_map<int, int> row_of;
    for (std::size_t i = 0; i < vertices.size(); ++i) row_of.emplace(vertices[i], static_cast<int>(i));

    Relation r(static_cast<int>(vertices.size()), static_cast<int>(c.members.size()));
    for (std::size_t i = 0; i < c.members.size(); ++i)
        for (int v : c.members[i].vertex_ids()) r.set(row_of.at(v), static_cast<int>(i));
    return r;
}

}  // namespace netpers
