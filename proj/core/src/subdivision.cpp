#include "netpers/subdivision.hpp"

#include <stdexcept>

namespace netpers {

int Subdivision::vertex_for(const SimplicialComplex& k, const Simplex& s) const {
    int idx = k.index_of(s);
    if (idx < 0) throw std::logic_error("simplex is not a vertex of the subdivision");
    return idx;
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
    const auto& simplices = k.simplices();
    const int m = static_cast<int>(simplices.size());

    // Chains are enumerated over the containment DAG. The (dim, lex) order
    // makes strict containment increase ids, so chains are sorted vertex lists.
    std::vector<std::vector<int>> supersets(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (simplices[i].size() < simplices[j].size() &&
                simplex_subset(simplices[i], simplices[j]))
                supersets[i].push_back(j);

    std::vector<Simplex> chains;
    Simplex current;
    auto rec = [&](auto&& self, int top) -> void {
        for (int next : supersets[top]) {
            current.push_back(next);
            chains.push_back(current);
            self(self, next);
            current.pop_back();
        }
    };
    for (int i = 0; i < m; ++i) {
        current = {i};
        chains.push_back(current);
        rec(rec, i);
    }

    Subdivision out;
    out.complex = SimplicialComplex::from_simplices(std::move(chains));
    out.original_simplex = simplices;
    return out;
}

SimplicialMapSpec least_vertex_map(const SimplicialComplex& k, const Subdivision& sd) {
    if (sd.original_simplex != k.simplices())
        throw std::logic_error("subdivision does not belong to this complex");
    SimplicialMapSpec f;
    for (std::size_t v = 0; v < sd.original_simplex.size(); ++v)
        f.vertex_map.emplace(static_cast<int>(v), sd.original_simplex[v].front());
    return f;
}

SimplicialMapSpec sink_assignment_map(const Relation& r, const SimplicialComplex& e,
                                      const Subdivision& e_sd, SinkChoiceRule rule) {
    if (r.empty()) throw input_error("sink assignment needs a nonempty relation");
    if (e_sd.original_simplex != e.simplices())
        throw std::logic_error("subdivision does not belong to this complex");
    SimplicialMapSpec f;
    for (std::size_t v = 0; v < e_sd.original_simplex.size(); ++v) {
        const Simplex& sigma = e_sd.original_simplex[v];
        int chosen = -1;
        for (int y = 0; y < r.ncols(); ++y) {
            bool witness = true;
            for (int x : sigma) witness = witness && r.at(x, y);
            if (witness) {
                chosen = y;
                if (rule == SinkChoiceRule::LeastIndex) break;
            }
        }
        if (chosen < 0)
            throw std::logic_error("simplex of E_R has no witness column; relation mismatch");
        f.vertex_map.emplace(static_cast<int>(v), chosen);
    }
    return f;
}

SimplicialMapSpec subdivide_map(const SimplicialMapSpec& f, const Subdivision& k_sd,
                                const SimplicialComplex& l, const Subdivision& l_sd) {
    SimplicialMapSpec out;
    for (std::size_t v = 0; v < k_sd.original_simplex.size(); ++v)
        out.vertex_map.emplace(static_cast<int>(v),
                               l_sd.vertex_for(l, f.apply(k_sd.original_simplex[v])));
    return out;
}

SimplicialMapSpec subdivision_inclusion(const Subdivision& k_sd, const SimplicialComplex& l,
                                        const Subdivision& l_sd) {
    SimplicialMapSpec out;
    for (std::size_t v = 0; v < k_sd.original_simplex.size(); ++v)
        out.vertex_map.emplace(static_cast<int>(v), l_sd.vertex_for(l, k_sd.original_simplex[v]));
    return out;
}

}  // namespace netpers
