#include "netpers/persistence.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "netpers/z2_algebra.hpp"

namespace netpers {

const std::vector<DiagramPoint> PersistenceDiagram::empty_{};

void PersistenceDiagram::add(int dim, DiagramPoint p) {
    if (p.birth > p.death) throw std::logic_error("diagram point with birth > death");
    if (p.birth == p.death) return;  // zero persistence, invisible
    points_[dim].push_back(p);
}

void PersistenceDiagram::sort_points() {
    for (auto& [dim, pts] : points_) std::sort(pts.begin(), pts.end());
}

int PersistenceDiagram::max_dim() const {
    int m = -1;
    for (const auto& [dim, pts] : points_)
        if (!pts.empty()) m = std::max(m, dim);
    return m;
}

const std::vector<DiagramPoint>& PersistenceDiagram::at_dim(int dim) const {
    auto it = points_.find(dim);
    return it == points_.end() ? empty_ : it->second;
}

std::size_t PersistenceDiagram::total_points() const {
    std::size_t n = 0;
    for (const auto& [dim, pts] : points_) n += pts.size();
    return n;
}

BoundaryMatrixZ2::BoundaryMatrixZ2(const FilteredComplex& f) {
    const auto& simplices = f.simplices();
    std::unordered_map<Simplex, int, SimplexHash> position;
    position.reserve(simplices.size());
    for (std::size_t i = 0; i < simplices.size(); ++i)
        position.emplace(simplices[i].vertices, static_cast<int>(i));

    cols_.resize(simplices.size());
    dims_.resize(simplices.size());
    births_.resize(simplices.size());
    for (std::size_t j = 0; j < simplices.size(); ++j) {
        const auto& s = simplices[j].vertices;
        dims_[j] = simplex_dim(s);
        births_[j] = simplices[j].birth;
        if (s.size() == 1) continue;
        Simplex face;
        std::vector<int>& col = cols_[j];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (std::size_t v = 0; v < s.size(); ++v)
                if (v != drop) face.push_back(s[v]);
            auto it = position.find(face);
            if (it == position.end()) throw std::logic_error("boundary face missing from filtration");
            col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
    }
}

bool BoundaryMatrixZ2::boundary_squared_is_zero() const {
    // The boundary of a column is the Z2 sum of its faces' columns.
    for (const auto& col : cols_) {
        std::vector<int> acc;
        std::vector<int> tmp;
        for (int row : col) {
            tmp.clear();
            std::set_symmetric_difference(acc.begin(), acc.end(), cols_[row].begin(),
                                          cols_[row].end(), std::back_inserter(tmp));
            acc.swap(tmp);
        }
        if (!acc.empty()) return false;
    }
    return true;
}

PersistenceDiagram compute_persistence(const FilteredComplex& f, int max_hom_dim) {
    if (max_hom_dim < 0) throw input_error("max_hom_dim must be nonnegative");
    if (f.dimension_cap() && *f.dimension_cap() < max_hom_dim + 1)
        throw input_error("complex was built with dimension cap " +
                          std::to_string(*f.dimension_cap()) + "; homology at dimension " +
                          std::to_string(max_hom_dim) +
                          " needs simplices up to dimension " + std::to_string(max_hom_dim + 1));

    // Keep only the simplices that can affect H_0..H_max_hom_dim.
    std::vector<FilteredSimplex> kept;
    kept.reserve(f.size());
    for (const auto& s : f.simplices())
        if (simplex_dim(s.vertices) <= max_hom_dim + 1) kept.push_back(s);
    FilteredComplex g(std::move(kept), f.dimension_cap());

    BoundaryMatrixZ2 boundary(g);
    const std::size_t m = boundary.columns();

    // Left-to-right column reduction with lowest-one pivoting.
    std::vector<std::vector<int>> reduced(m);
    std::vector<int> pivot_owner(m, -1);
    std::vector<char> is_destroyer(m, 0);
    PersistenceDiagram diagram;
    std::vector<int> tmp;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<int> col = boundary.column(j);
        while (!col.empty()) {
            int low = col.back();
            int owner = pivot_owner[low];
            if (owner < 0) break;
            tmp.clear();
            std::set_symmetric_difference(col.begin(), col.end(), reduced[owner].begin(),
                                          reduced[owner].end(), std::back_inserter(tmp));
            col.swap(tmp);
        }
        if (!col.empty()) {
            int low = col.back();
            pivot_owner[low] = static_cast<int>(j);
            is_destroyer[j] = 1;
            int dim = boundary.dim_of(low);
            if (dim <= max_hom_dim)
                diagram.add(dim, {boundary.birth_of(low), boundary.birth_of(j)});
        }
        reduced[j] = std::move(col);
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (is_destroyer[j] || pivot_owner[j] >= 0) continue;  // paired one way or the other
        int dim = boundary.dim_of(j);
        if (dim <= max_hom_dim) diagram.add(dim, {boundary.birth_of(j), kInfiniteDeath});
    }
    diagram.sort_points();
    return diagram;
}

namespace {

// Rank of the boundary map from (dim)-chains to (dim-1)-chains.
std::size_t boundary_rank(const SimplicialComplex& k, int dim,
                          const std::unordered_map<Simplex, int, SimplexHash>& index_in_dim,
                          std::size_t n_faces) {
    Z2ColumnSpace space(n_faces);
    Simplex face;
    for (const auto& s : k.simplices()) {
        if (simplex_dim(s) != dim) continue;
        Z2Vector col(n_faces);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (std::size_t v = 0; v < s.size(); ++v)
                if (v != drop) face.push_back(s[v]);
            col.flip(static_cast<std::size_t>(index_in_dim.at(face)));
        }
        space.insert(std::move(col));
    }
    return space.rank();
}

}  // namespace

std::vector<int> betti_numbers(const SimplicialComplex& k, int up_to) {
    if (up_to < 0) throw input_error("up_to must be nonnegative");
    std::vector<std::size_t> count(up_to + 3, 0);
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_in_dim(up_to + 2);
    for (const auto& s : k.simplices()) {
        int d = simplex_dim(s);
        if (d <= up_to + 1) {
            if (d <= up_to) index_in_dim[d].emplace(s, static_cast<int>(index_in_dim[d].size()));
            ++count[d];
        }
    }
    std::vector<std::size_t> ranks(up_to + 2, 0);  // ranks[d] = rank of d-boundary map
    for (int d = 1; d <= up_to + 1; ++d)
        if (count[d] > 0 && count[d - 1] > 0 && d - 1 <= up_to)
            ranks[d] = boundary_rank(k, d, index_in_dim[d - 1], count[d - 1]);

    std::vector<int> betti(up_to + 1, 0);
    for (int d = 0; d <= up_to; ++d) {
        long long b = static_cast<long long>(count[d]) - static_cast<long long>(ranks[d]) -
                      static_cast<long long>(ranks[d + 1]);
        betti[d] = static_cast<int>(b);
    }
    return betti;
}

FilteredComplex two_step_filtration(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (!k.is_subcomplex_of(l)) throw input_error("K is not a subcomplex of L");
    std::vector<FilteredSimplex> simplices;
    simplices.reserve(l.size());
    for (const auto& s : l.simplices()) simplices.push_back({s, k.contains(s) ? 0.0 : 1.0});
    return FilteredComplex(std::move(simplices));
}

int induced_map_rank(const SimplicialComplex& k, const SimplicialComplex& l, int hom_dim) {
    FilteredComplex two_step = two_step_filtration(k, l);
    PersistenceDiagram diagram = compute_persistence(two_step, hom_dim);
    int rank = 0;
    for (const auto& p : diagram.at_dim(hom_dim))
        if (p.birth == 0.0 && p.death > 1.0) ++rank;  // bars covering [0, 1]
    return rank;
}

}  // namespace netpers
