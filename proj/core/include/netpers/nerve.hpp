#pragma once

#include <vector>

#include "netpers/relation.hpp"
#include "netpers/simplicial_complex.hpp"

namespace netpers {

/// A cover of a host complex by subcomplexes. member_labels carries the
/// external identity of each member (for covers built from a relation, the
/// row index x of E_R it came from).
struct Cover {
    SimplicialComplex host;
    std::vector<SimplicialComplex> members;
    std::vector<int> member_labels;

    /// Union of members equals the host and each member is face-closed.
    void validate() const;

    /// true when every member is the full power set of its vertex set.
    bool is_cover_of_simplices() const;
};

/// Nerve over member indices 0..m-1: sigma is a simplex iff the members it
/// names share a simplex (equivalently a vertex, members being face-closed).
SimplicialComplex nerve(const Cover& c);

/// Cover of F_R indexed by the vertices of E_R, member A_x = full simplex on
/// the columns related to x. Satisfies nerve(cover) = E_R (up to member
/// relabeling). Throws input_error on an empty relation.
Cover cover_from_relation(const Relation& r, int max_dim);

/// Relation on host vertices x member indices with (v, i) in R iff v is a
/// vertex of member i. Requires a cover of simplices (throws input_error
/// otherwise), so that E_R recovers the host and F_R the nerve.
Relation relation_from_cover(const Cover& c);

}  // namespace netpers
