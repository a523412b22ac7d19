#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netpers/network.hpp"

namespace netpers {

/// A relation between the node sets of two networks, stored as index pairs.
/// When used as a correspondence it must project onto all of X and all of Y.
struct CorrespondenceSet {
    std::vector<std::pair<int, int>> pairs;

    bool is_correspondence(int nx, int ny) const;
};

/// Limits on the exhaustive network-distance searches. Exceeding a budget is
/// an error, never a silent approximation.
struct SearchBudget {
    std::uint64_t max_map_pairs = 100'000'000;  // |Y|^|X| * |X|^|Y|
    int max_relation_bits = 16;                 // |X|*|Y| for 2^(|X||Y|) subset enumeration
};

/// max over (x,y),(x',y') in R of |w_X(x,x') - w_Y(y,y')|. Throws on empty R.
double distortion_of_relation(const Network& x, const Network& y, const CorrespondenceSet& r);

/// max over x,x' of |w_X(x,x') - w_Y(phi(x),phi(x'))|.
double map_distortion(const Network& x, const Network& y, const std::vector<int>& phi);

enum class CodistortionDirection { XY, YX };

/// XY: max |w_X(x, psi(y)) - w_Y(phi(x), y)|; YX: max |w_Y(y, phi(x)) - w_X(psi(y), x)|.
double codistortion(const Network& x, const Network& y, const std::vector<int>& phi,
                    const std::vector<int>& psi, CodistortionDirection dir);

struct MapPairResult {
    double distance = 0.0;        // half the minimal four-term max
    std::vector<int> phi;         // X -> Y, lexicographically first optimum
    std::vector<int> psi;         // Y -> X
};

/// Exact network distance by exhaustive search over all map pairs (phi, psi):
/// half the min over pairs of max(dis(phi), dis(psi), C_XY, C_YX). Ties are
/// broken by the lexicographically first (phi, psi) in enumeration order.
/// Throws budget_error when |Y|^|X| * |X|^|Y| exceeds the budget.
MapPairResult network_distance_maps(const Network& x, const Network& y,
                                    const SearchBudget& budget = {});

/// Exact network distance by enumerating every correspondence R in X x Y:
/// half the min of dis(R). Independent of the map formulation; serves as its
/// oracle. Throws budget_error when |X|*|Y| exceeds max_relation_bits.
double network_distance_correspondences(const Network& x, const Network& y,
                                        const SearchBudget& budget = {});

}  // namespace netpers
