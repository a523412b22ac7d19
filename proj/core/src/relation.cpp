#include "netpers/relation.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace netpers {

Relation::Relation(int nrows, int ncols) : nrows_(nrows), ncols_(ncols) {
    if (nrows < 1 || ncols < 1) throw input_error("relation needs positive dimensions");
    bits_.assign(static_cast<std::size_t>(nrows) * ncols, 0);
}

bool Relation::empty() const {
    for (auto b : bits_)
        if (b) return false;
    return true;
}

std::size_t Relation::count() const {
    return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0});
}

Relation Relation::transposed() const {
    Relation t(ncols_, nrows_);
    for (int x = 0; x < nrows_; ++x)
        for (int y = 0; y < ncols_; ++y)
            if (at(x, y)) t.set(y, x);
    return t;
}

bool Relation::subset_of(const Relation& other) const {
    if (nrows_ != other.nrows_ || ncols_ != other.ncols_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i]) return false;
    return true;
}

SimplicialComplex dowker_e_complex(const Relation& r, int max_dim) {
    if (r.empty()) throw input_error("Dowker complexes need a nonempty relation");
    if (max_dim < 0) throw input_error("max_dim must be nonnegative");
    const int nx = r.nrows(), ny = r.ncols();

    // witnesses[x] = set of columns related to x; a simplex needs a common column.
    std::vector<std::vector<char>> witness(nx, std::vector<char>(ny, 0));
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) witness[x][y] = r.at(x, y) ? 1 : 0;

    std::vector<Simplex> simplices;
    Simplex current;
    std::vector<char> common(ny, 1);
    auto rec = [&](auto&& self, int first, const std::vector<char>& shared) -> void {
        for (int v = first; v < nx; ++v) {
            std::vector<char> next(ny);
            bool nonempty = false;
            for (int y = 0; y < ny; ++y) {
                next[y] = shared[y] && witness[v][y];
                nonempty |= next[y] != 0;
            }
            if (!nonempty) continue;
            current.push_back(v);
            simplices.push_back(current);
            if (static_cast<int>(current.size()) <= max_dim) self(self, v + 1, next);
            current.pop_back();
        }
    };
    rec(rec, 0, common);
    return SimplicialComplex::from_simplices(std::move(simplices));
}

DowkerPair dowker_pair_from_relation(const Relation& r, int max_dim) {
    return {dowker_e_complex(r, max_dim), dowker_e_complex(r.transposed(), max_dim)};
}

std::vector<Simplex> cech_circle_complex(int n, double r, int max_dim) {
    if (n < 3) throw input_error("circle complex needs n >= 3");
    if (r < 0.0 || r > 0.5) throw input_error("radius must lie in [0, 1/2]");
    if (max_dim < 0) max_dim = n - 1;

    // sigma fits in a closed arc of length 2r iff its circular span, measured
    // in grid steps of 1/n, is at most 2rn. Compare against the integer
    // exactly when 2rn is one; tolerate 1e-12 otherwise.
    const double scaled = 2.0 * r * n;
    const double rounded = std::round(scaled);
    const double threshold = std::fabs(scaled - rounded) <= 1e-9 ? rounded : scaled + 1e-12;

    // The minimal enclosing arc is n minus the largest circular gap.
    auto span_ok = [&](const Simplex& pts) {
        if (pts.size() <= 1) return true;
        int max_gap = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            int next = (i + 1 < pts.size()) ? pts[i + 1] : pts[0] + n;
            max_gap = std::max(max_gap, next - pts[i]);
        }
        return static_cast<double>(n - max_gap) <= threshold;
    };

    std::vector<Simplex> out;
    Simplex current;
    auto rec = [&](auto&& self, int first) -> void {
        for (int v = first; v < n; ++v) {
            current.push_back(v);
            if (span_ok(current)) {
                out.push_back(current);
                if (static_cast<int>(current.size()) <= max_dim) self(self, v + 1);
            }
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Relation read_relation(std::istream& in) {
    int nrows = 0, ncols = 0;
    if (!(in >> nrows >> ncols)) throw input_error("relation file: missing 'nrows ncols' header");
    if (nrows < 1 || ncols < 1) throw input_error("relation file: dimensions must be positive");
    Relation r(nrows, ncols);
    for (int x = 0; x < nrows; ++x)
        for (int y = 0; y < ncols; ++y) {
            int bit = 0;
            if (!(in >> bit)) throw input_error("relation file: truncated matrix");
            if (bit != 0 && bit != 1)
                throw input_error("relation file: entries must be 0 or 1, got " + std::to_string(bit));
            r.set(x, y, bit == 1);
        }
    return r;
}

Relation load_relation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open relation file '" + path + "'");
    return read_relation(in);
}

void write_relation(std::ostream& out, const Relation& r) {
    out << r.nrows() << ' ' << r.ncols() << '\n';
    for (int x = 0; x < r.nrows(); ++x) {
        for (int y = 0; y < r.ncols(); ++y) out << (y ? " " : "") << (r.at(x, y) ? 1 : 0);
        out << '\n';
    }
}

}  // namespace netpers
