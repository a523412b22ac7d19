#include "netpers/simplicial_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace netpers {

int SimplicialMapSpec::apply_vertex(int v) const {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end())
        throw std::logic_error("simplicial map undefined on vertex " + std::to_string(v));
    return it->second;
}

Simplex SimplicialMapSpec::apply(const Simplex& s) const {
    Simplex image;
    image.reserve(s.size());
    for (int v : s) image.push_back(apply_vertex(v));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

bool is_simplicial(const SimplicialMapSpec& f, const SimplicialComplex& k,
                   const SimplicialComplex& l) {
    for (const auto& s : k.simplices())
        if (!l.contains(f.apply(s))) return false;
    return true;
}

SimplicialMapSpec compose(const SimplicialMapSpec& g, const SimplicialMapSpec& f) {
    SimplicialMapSpec out;
    out.vertex_map.reserve(f.vertex_map.size());
    for (const auto& [v, w] : f.vertex_map) out.vertex_map.emplace(v, g.apply_vertex(w));
    return out;
}

SimplicialMapSpec identity_map(const SimplicialComplex& k) {
    SimplicialMapSpec out;
    for (int v : k.vertex_ids()) out.vertex_map.emplace(v, v);
    return out;
}

bool are_contiguous(const SimplicialMapSpec& f, const SimplicialMapSpec& g,
                    const SimplicialComplex& k, const SimplicialComplex& l) {
    if (!is_simplicial(f, k, l)) throw input_error("contiguity check: f is not simplicial");
    if (!is_simplicial(g, k, l)) throw input_error("contiguity check: g is not simplicial");
    for (const auto& s : k.simplices())
        if (!l.contains(simplex_union(f.apply(s), g.apply(s)))) return false;
    return true;
}

namespace {

struct DimSlice {
    std::vector<Simplex> simplices;
    std::unordered_map<Simplex, int, SimplexHash> pos;
};

DimSlice dim_slice(const SimplicialComplex& k, int dim) {
    DimSlice out;
    for (const auto& s : k.simplices())
        if (simplex_dim(s) == dim) {
            out.pos.emplace(s, static_cast<int>(out.simplices.size()));
            out.simplices.push_back(s);
        }
    return out;
}

Z2Vector boundary_vector(const Simplex& s, const DimSlice& faces) {
    Z2Vector col(faces.simplices.size());
    Simplex face;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t v = 0; v < s.size(); ++v)
            if (v != drop) face.push_back(s[v]);
        col.flip(static_cast<std::size_t>(faces.pos.at(face)));
    }
    return col;
}

// Kernel of the boundary map on dim-chains, as combination vectors over the
// dim-simplices (identity-augmented column reduction).
std::vector<Z2Vector> kernel_basis(const DimSlice& chains, const DimSlice& faces, int dim) {
    std::vector<Z2Vector> kernel;
    if (dim == 0) {  // every 0-chain is a cycle
        for (std::size_t i = 0; i < chains.simplices.size(); ++i) {
            Z2Vector e(chains.simplices.size());
            e.set(i);
            kernel.push_back(std::move(e));
        }
        return kernel;
    }
    std::vector<Z2Vector> echelon, echelon_combo;
    std::vector<int> pivots;
    for (std::size_t i = 0; i < chains.simplices.size(); ++i) {
        Z2Vector col = boundary_vector(chains.simplices[i], faces);
        Z2Vector combo(chains.simplices.size());
        combo.set(i);
        for (;;) {
            int low = col.lowest_set();
            if (low < 0) break;
            bool hit = false;
            for (std::size_t e = 0; e < echelon.size(); ++e)
                if (pivots[e] == low) {
                    col ^= echelon[e];
                    combo ^= echelon_combo[e];
                    hit = true;
                    break;
                }
            if (!hit) break;
        }
        if (col.is_zero()) {
            kernel.push_back(std::move(combo));
        } else {
            pivots.push_back(col.lowest_set());
            echelon.push_back(std::move(col));
            echelon_combo.push_back(std::move(combo));
        }
    }
    return kernel;
}

// Fixed homology basis at one dimension plus a coordinate solver for
// arbitrary cycles (coordinates modulo boundaries).
class HomologyBasis {
public:
    HomologyBasis(const SimplicialComplex& k, int dim)
        : chains_(dim_slice(k, dim)), faces_(dim_slice(k, dim - 1)), boundaries_(chains_.simplices.size()) {
        DimSlice cofaces = dim_slice(k, dim + 1);
        for (const auto& s : cofaces.simplices) boundaries_.insert(boundary_vector(s, chains_));
        for (auto& z : kernel_basis(chains_, faces_, dim)) {
            Z2Vector coords(max_rank());
            Z2Vector r = reduce_against(z, &coords);
            if (!r.is_zero()) {
                Z2Vector unit(max_rank());
                unit.set(entries_.size());
                entries_.push_back({std::move(r), std::move(unit)});
                reps_.push_back(std::move(z));
            }
        }
    }

    std::size_t rank() const { return reps_.size(); }
    const std::vector<Z2Vector>& representatives() const { return reps_; }
    const DimSlice& chains() const { return chains_; }

    /// Coordinates of a cycle in the homology basis.
    Z2Vector coordinates(const Z2Vector& cycle) const {
        Z2Vector coords(max_rank());
        Z2Vector r = reduce_against(cycle, &coords);
        if (!r.is_zero()) throw std::logic_error("chain is not a cycle of the target complex");
        return coords;
    }

private:
    std::size_t max_rank() const { return chains_.simplices.size(); }

    // Interleaves boundary reduction and class-entry reduction until the
    // lowest set bit matches neither pivot set.
    Z2Vector reduce_against(Z2Vector r, Z2Vector* coords) const {
        for (;;) {
            r = boundaries_.reduce(std::move(r));
            int low = r.lowest_set();
            if (low < 0) return r;
            bool hit = false;
            for (const auto& e : entries_)
                if (e.residue.lowest_set() == low) {
                    r ^= e.residue;
                    if (coords) *coords ^= e.coords;
                    hit = true;
                    break;
                }
            if (!hit) return r;
        }
    }

    struct Entry {
        Z2Vector residue;
        Z2Vector coords;
    };

    DimSlice chains_;
    DimSlice faces_;
    Z2ColumnSpace boundaries_;
    std::vector<Entry> entries_;
    std::vector<Z2Vector> reps_;
};

}  // namespace

std::vector<Z2Vector> induced_homology_matrix(const SimplicialMapSpec& f,
                                              const SimplicialComplex& k,
                                              const SimplicialComplex& l, int hom_dim) {
    if (!is_simplicial(f, k, l))
        throw input_error("induced homology matrix: map is not simplicial");
    HomologyBasis source(k, hom_dim);
    HomologyBasis target(l, hom_dim);

    std::vector<Z2Vector> matrix;
    matrix.reserve(source.rank());
    const auto& k_chains = source.chains();
    const auto& l_chains = target.chains();
    for (const auto& z : source.representatives()) {
        // Push the cycle forward: degenerate images vanish over Z2.
        Z2Vector image(l_chains.simplices.size());
        for (std::size_t i = 0; i < k_chains.simplices.size(); ++i) {
            if (!z.get(i)) continue;
            Simplex im = f.apply(k_chains.simplices[i]);
            if (im.size() != k_chains.simplices[i].size()) continue;
            image.flip(static_cast<std::size_t>(l_chains.pos.at(im)));
        }
        matrix.push_back(target.coordinates(image));
    }
    return matrix;
}

}  // namespace netpers
