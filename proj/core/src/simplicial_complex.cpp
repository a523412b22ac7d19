#include "netpers/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace netpers {

namespace {

bool dim_lex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

void SimplicialComplex::rebuild_index() {
    membership_.clear();
    index_.clear();
    membership_.reserve(simplices_.size());
    index_.reserve(simplices_.size());
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
        membership_.insert(simplices_[i]);
        index_.emplace(simplices_[i], static_cast<int>(i));
    }
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
    SimplicialComplex k;
    std::sort(simplices.begin(), simplices.end(), dim_lex_less);
    k.simplices_ = std::move(simplices);
    k.rebuild_index();
    if (k.index_.size() != k.simplices_.size())
        throw std::logic_error("simplex list contains duplicates");
    for (const auto& s : k.simplices_) {
        if (!is_valid_simplex(s)) throw std::logic_error("malformed simplex");
        if (s.size() == 1) continue;
        Simplex face;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (std::size_t v = 0; v < s.size(); ++v)
                if (v != drop) face.push_back(s[v]);
            if (!k.contains(face)) throw std::logic_error("simplex list is not face-closed");
        }
    }
    return k;
}

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& generators) {
    std::set<Simplex> closed;
    // Every nonempty subset of a generator; generators are small in practice.
    for (const auto& g : generators) {
        if (!is_valid_simplex(g)) throw std::logic_error("malformed generator simplex");
        if (g.size() > 25) throw std::logic_error("closure of a >25-vertex simplex refused");
        const std::size_t m = g.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t{1} << i)) s.push_back(g[i]);
            closed.insert(std::move(s));
        }
    }
    SimplicialComplex k;
    k.simplices_.assign(closed.begin(), closed.end());
    std::sort(k.simplices_.begin(), k.simplices_.end(), dim_lex_less);
    k.rebuild_index();
    return k;
}

int SimplicialComplex::dim() const {
    return simplices_.empty() ? -1 : simplex_dim(simplices_.back());
}

int SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> SimplicialComplex::vertex_ids() const {
    std::vector<int> out;
    for (const auto& s : simplices_) {
        if (s.size() != 1) break;  // vertices come first in (dim, lex) order
        out.push_back(s[0]);
    }
    return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& s : simplices_)
        if (!other.contains(s)) return false;
    return true;
}

}  // namespace netpers
