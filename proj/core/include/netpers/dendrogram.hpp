#pragma once

#include <string>
#include <vector>

#include "netpers/diagram_distance.hpp"

namespace netpers {

struct DendrogramMerge {
    double height;
    int cluster_a;  // cluster ids: leaves are 0..n-1, merged clusters n, n+1, ...
    int cluster_b;  // cluster_a < cluster_b
    int new_id;
};

/// Single-linkage merge tree: n-1 merges at nondecreasing heights.
struct Dendrogram {
    std::vector<std::string> leaves;
    std::vector<DendrogramMerge> merges;

    /// Partition of the leaves into clusters after cutting at height h
    /// (merges with height <= h applied).
    std::vector<std::vector<int>> cut(double h) const;
};

/// Single-linkage clustering. Merge heights equal the minimum inter-cluster
/// distance at each step; ties broken by the smallest (cluster_a, cluster_b)
/// pair. Rejects matrices containing +infinity.
Dendrogram single_linkage(const DistanceMatrix& dist);

}  // namespace netpers
