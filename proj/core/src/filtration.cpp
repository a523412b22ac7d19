#include "netpers/filtration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace netpers {

namespace {

bool canonical_less(const FilteredSimplex& a, const FilteredSimplex& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

}  // namespace

FilteredComplex::FilteredComplex(std::vector<FilteredSimplex> simplices,
                                 std::optional<int> dimension_cap)
    : simplices_(std::move(simplices)), dimension_cap_(dimension_cap) {
    std::sort(simplices_.begin(), simplices_.end(), canonical_less);
}

double FilteredComplex::max_birth() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& s : simplices_) m = std::max(m, s.birth);
    return m;
}

std::vector<Simplex> FilteredComplex::complex_at(double delta) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_) {
        if (s.birth > delta) break;  // canonical order is birth-ascending
        out.push_back(s.vertices);
    }
    return out;
}

void FilteredComplex::validate() const {
    std::unordered_map<Simplex, double, SimplexHash> birth_of;
    birth_of.reserve(simplices_.size());
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
        const auto& fs = simplices_[i];
        if (!is_valid_simplex(fs.vertices))
            throw std::logic_error("filtration holds a malformed simplex");
        if (i > 0 && !canonical_less(simplices_[i - 1], fs) &&
            !(simplices_[i - 1].vertices == fs.vertices && simplices_[i - 1].birth == fs.birth))
            throw std::logic_error("filtration is not in canonical order");
        if (!birth_of.emplace(fs.vertices, fs.birth).second)
            throw std::logic_error("filtration holds a duplicate simplex");
    }
    for (const auto& fs : simplices_) {
        if (fs.vertices.size() == 1) continue;
        Simplex face(fs.vertices.size() - 1);
        for (std::size_t drop = 0; drop < fs.vertices.size(); ++drop) {
            face.clear();
            for (std::size_t v = 0; v < fs.vertices.size(); ++v)
                if (v != drop) face.push_back(fs.vertices[v]);
            auto it = birth_of.find(face);
            if (it == birth_of.end()) throw std::logic_error("filtration is not face-closed");
            if (it->second > fs.birth)
                throw std::logic_error("face born after its coface (birth monotonicity violated)");
        }
    }
}

namespace {

// Shared subset enumeration: extends the current simplex one vertex at a
// time, carrying per-candidate running maxima so every birth is an exact
// min-max of input weights.
template <typename WeightToCandidate>
void enumerate_dowker(const Network& x, int max_dim, WeightToCandidate w,
                      std::vector<FilteredSimplex>& out) {
    const int n = x.size();
    std::vector<double> maxima(n);
    Simplex current;
    auto rec = [&](auto&& self, int first) -> void {
        for (int v = first; v < n; ++v) {
            std::vector<double> saved;
            if (static_cast<int>(current.size()) > 0) saved = maxima;
            for (int cand = 0; cand < n; ++cand) {
                double wv = w(v, cand);
                if (current.empty())
                    maxima[cand] = wv;
                else
                    maxima[cand] = std::max(maxima[cand], wv);
            }
            current.push_back(v);
            double birth = maxima[0];
            for (int cand = 1; cand < n; ++cand) birth = std::min(birth, maxima[cand]);
            out.push_back({current, birth});
            if (static_cast<int>(current.size()) <= max_dim) self(self, v + 1);
            current.pop_back();
            if (!current.empty()) maxima = std::move(saved);
        }
    };
    rec(rec, 0);
}

}  // namespace

FilteredComplex dowker_sink_filtration(const Network& x, int max_dim) {
    if (max_dim < 0) throw input_error("max_dim must be nonnegative");
    std::vector<FilteredSimplex> out;
    // member weight w(member, sink candidate)
    enumerate_dowker(x, max_dim, [&](int v, int cand) { return x.weight(v, cand); }, out);
    return FilteredComplex(std::move(out), max_dim);
}

FilteredComplex dowker_source_filtration(const Network& x, int max_dim) {
    if (max_dim < 0) throw input_error("max_dim must be nonnegative");
    std::vector<FilteredSimplex> out;
    // member weight w(source candidate, member)
    enumerate_dowker(x, max_dim, [&](int v, int cand) { return x.weight(cand, v); }, out);
    return FilteredComplex(std::move(out), max_dim);
}

FilteredComplex rips_filtration(const Network& x, int max_dim) {
    if (max_dim < 0) throw input_error("max_dim must be nonnegative");
    const int n = x.size();
    std::vector<FilteredSimplex> out;
    Simplex current;
    auto rec = [&](auto&& self, int first, double diam) -> void {
        for (int v = first; v < n; ++v) {
            double d = std::max(diam, x.weight(v, v));
            for (int u : current) d = std::max({d, x.weight(u, v), x.weight(v, u)});
            current.push_back(v);
            out.push_back({current, d});
            if (static_cast<int>(current.size()) <= max_dim) self(self, v + 1, d);
            current.pop_back();
        }
    };
    rec(rec, 0, -std::numeric_limits<double>::infinity());
    return FilteredComplex(std::move(out), max_dim);
}

}  // namespace netpers
