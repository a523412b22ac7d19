#include "netpers/dendrogram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netpers {

std::vector<std::vector<int>> Dendrogram::cut(double h) const {
    const int n = static_cast<int>(leaves.size());
    // cluster id -> member leaves; merged ids appear as merges are applied
    std::vector<std::vector<int>> members(n + merges.size());
    std::vector<char> active(n + merges.size(), 0);
    for (int i = 0; i < n; ++i) {
        members[i] = {i};
        active[i] = 1;
    }
    for (const auto& m : merges) {
        if (m.height > h) break;
        auto& dst = members[m.new_id];
        dst = std::move(members[m.cluster_a]);
        dst.insert(dst.end(), members[m.cluster_b].begin(), members[m.cluster_b].end());
        std::sort(dst.begin(), dst.end());
        active[m.cluster_a] = active[m.cluster_b] = 0;
        active[m.new_id] = 1;
    }
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < members.size(); ++c)
        if (active[c]) out.push_back(members[c]);
    std::sort(out.begin(), out.end());
    return out;
}

Dendrogram single_linkage(const DistanceMatrix& dist) {
    dist.validate();
    const int n = dist.size();
    Dendrogram out;
    out.leaves = dist.labels;
    if (n <= 1) return out;

    // Active clusters with their ids; inter-cluster distances maintained by
    // the single-linkage min rule.
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<double>> d = dist.d;
    std::vector<char> alive(n, 1);
    int next_id = n;

    for (int step = 0; step < n - 1; ++step) {
        double best = std::numeric_limits<double>::infinity();
        int best_a = -1, best_b = -1;
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (int j = i + 1; j < n; ++j) {
                if (!alive[j]) continue;
                int a = std::min(id[i], id[j]), b = std::max(id[i], id[j]);
                if (d[i][j] < best ||
                    (d[i][j] == best && std::pair(a, b) < std::pair(best_a, best_b))) {
                    best = d[i][j];
                    best_a = a;
                    best_b = b;
                }
            }
        }
        // locate the slots holding the chosen ids
        int si = -1, sj = -1;
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            if (id[i] == best_a) si = i;
            if (id[i] == best_b) sj = i;
        }
        out.merges.push_back({best, best_a, best_b, next_id});
        id[si] = next_id++;
        alive[sj] = 0;
        for (int k = 0; k < n; ++k) {
            if (!alive[k] || k == si) continue;
            double m = std::min(d[si][k], d[sj][k]);
            d[si][k] = d[k][si] = m;
        }
    }
    return out;
}

}  // namespace netpers
