#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netpers/simplicial_complex.hpp"
#include "netpers/types.hpp"

namespace netpers {

/// Binary incidence between two finite ordered sets X (rows) and Y (columns).
class Relation {
public:
    Relation(int nrows, int ncols);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }

    bool at(int x, int y) const { return bits_[static_cast<std::size_t>(x) * ncols_ + y] != 0; }
    void set(int x, int y, bool value = true) {
        bits_[static_cast<std::size_t>(x) * ncols_ + y] = value ? 1 : 0;
    }

    bool empty() const;
    std::size_t count() const;

    Relation transposed() const;

    /// Entrywise containment (same shape required).
    bool subset_of(const Relation& other) const;

    bool operator==(const Relation& other) const = default;

private:
    int nrows_, ncols_;
    std::vector<std::uint8_t> bits_;
};

/// The two Dowker complexes of a nonempty relation, truncated at max_dim:
///   E = { sigma subset of X : exists y with (x,y) in R for all x in sigma }
///   F = { tau  subset of Y : exists x with (x,y) in R for all y in tau }
/// Throws input_error on an empty relation.
struct DowkerPair {
    SimplicialComplex e;
    SimplicialComplex f;
};
DowkerPair dowker_pair_from_relation(const Relation& r, int max_dim);

/// E_R alone (same truncation rule).
SimplicialComplex dowker_e_complex(const Relation& r, int max_dim);

/// Nerve of closed arcs of radius r around n equally spaced points on the
/// circle of unit circumference: sigma is a simplex iff its points fit in a
/// closed arc of length 2r. Exact at radii k/(2n); 1e-12 slack otherwise.
/// Requires n >= 3 and r in [0, 1/2].
std::vector<Simplex> cech_circle_complex(int n, double r, int max_dim = -1);

/// Text format: "nrows ncols" header line, then nrows lines of 0/1 entries.
Relation read_relation(std::istream& in);
Relation load_relation(const std::string& path);
void write_relation(std::ostream& out, const Relation& r);

}  // namespace netpers
