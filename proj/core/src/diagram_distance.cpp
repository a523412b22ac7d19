#include "netpers/diagram_distance.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "netpers/parallel.hpp"

namespace netpers {

namespace {

double linf(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max(std::fabs(a.birth - b.birth), std::fabs(a.death - b.death));
}

double diagonal_cost(const DiagramPoint& p) { return (p.death - p.birth) / 2.0; }

/// Hopcroft-Karp maximum matching on an explicit bipartite adjacency list.
class BipartiteMatcher {
public:
    BipartiteMatcher(int n_left, int n_right) : n_left_(n_left), n_right_(n_right), adj_(n_left) {}

    void add_edge(int l, int r) { adj_[l].push_back(r); }

    int max_matching() {
        match_left_.assign(n_left_, -1);
        match_right_.assign(n_right_, -1);
        int matched = 0;
        while (bfs()) {
            for (int l = 0; l < n_left_; ++l)
                if (match_left_[l] < 0 && dfs(l)) ++matched;
        }
        return matched;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::queue<int> q;
        layer_.assign(n_left_, kInf);
        for (int l = 0; l < n_left_; ++l)
            if (match_left_[l] < 0) {
                layer_[l] = 0;
                q.push(l);
            }
        bool reachable_free = false;
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj_[l]) {
                int l2 = match_right_[r];
                if (l2 < 0)
                    reachable_free = true;
                else if (layer_[l2] == kInf) {
                    layer_[l2] = layer_[l] + 1;
                    q.push(l2);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int l) {
        for (int r : adj_[l]) {
            int l2 = match_right_[r];
            if (l2 < 0 || (layer_[l2] == layer_[l] + 1 && dfs(l2))) {
                match_left_[l] = r;
                match_right_[r] = l;
                return true;
            }
        }
        layer_[l] = kInf;
        return false;
    }

    int n_left_, n_right_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_, match_right_, layer_;
};

/// Perfect matching feasibility at threshold t in the diagonal-augmented
/// graph: left = A + proxies(B), right = B + proxies(A). Point i of A may use
/// its own proxy when its diagonal cost is within t; proxies pair freely with
/// each other.
bool feasible(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b, double t) {
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    BipartiteMatcher matcher(na + nb, nb + na);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j)
            if (linf(a[i], b[j]) <= t) matcher.add_edge(i, j);
        if (diagonal_cost(a[i]) <= t) matcher.add_edge(i, nb + i);
    }
    for (int j = 0; j < nb; ++j) {
        if (diagonal_cost(b[j]) <= t) matcher.add_edge(na + j, j);
        for (int i = 0; i < na; ++i) matcher.add_edge(na + j, nb + i);  // proxy-proxy, free
    }
    return matcher.max_matching() == na + nb;
}

}  // namespace

double bottleneck_distance(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b) {
    std::vector<double> essential_a, essential_b;
    std::vector<DiagramPoint> finite_a, finite_b;
    for (const auto& p : a)
        p.essential() ? essential_a.push_back(p.birth) : finite_a.push_back(p);
    for (const auto& p : b)
        p.essential() ? essential_b.push_back(p.birth) : finite_b.push_back(p);

    // Essential points can only match essential points.
    if (essential_a.size() != essential_b.size()) return kInfiniteDeath;
    std::sort(essential_a.begin(), essential_a.end());
    std::sort(essential_b.begin(), essential_b.end());
    double essential_cost = 0.0;
    for (std::size_t i = 0; i < essential_a.size(); ++i)
        essential_cost = std::max(essential_cost, std::fabs(essential_a[i] - essential_b[i]));

    if (finite_a.empty() && finite_b.empty()) return essential_cost;

    // The optimum is attained at a pairwise or diagonal cost.
    std::vector<double> candidates;
    candidates.reserve(finite_a.size() * finite_b.size() + finite_a.size() + finite_b.size());
    for (const auto& p : finite_a) candidates.push_back(diagonal_cost(p));
    for (const auto& q : finite_b) candidates.push_back(diagonal_cost(q));
    for (const auto& p : finite_a)
        for (const auto& q : finite_b) candidates.push_back(linf(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(finite_a, finite_b, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(essential_cost, candidates[lo]);
}

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
    return bottleneck_distance(a.at_dim(dim), b.at_dim(dim));
}

bool diagram_equal(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    int top = std::max(a.max_dim(), b.max_dim());
    for (int d = 0; d <= top; ++d)
        if (a.at_dim(d) != b.at_dim(d)) return false;  // both sides sorted multisets
    return true;
}

void DistanceMatrix::validate() const {
    const int n = size();
    if (static_cast<int>(d.size()) != n) throw input_error("distance matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(d[i].size()) != n) throw input_error("distance matrix is not square");
        if (d[i][i] != 0.0) throw input_error("distance matrix has a nonzero diagonal entry");
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(d[i][j]))
                throw input_error("distance matrix has a non-finite entry");
            if (d[i][j] < 0.0) throw input_error("distance matrix has a negative entry");
            if (d[i][j] != d[j][i]) throw input_error("distance matrix is not symmetric");
        }
    }
}

DistanceMatrix bottleneck_matrix(const std::vector<PersistenceDiagram>& diagrams, int dim,
                                 const std::vector<std::string>& labels, int jobs) {
    const int n = static_cast<int>(diagrams.size());
    if (static_cast<int>(labels.size()) != n)
        throw input_error("bottleneck matrix: label count does not match diagram count");
    DistanceMatrix m;
    m.labels = labels;
    m.d.assign(n, std::vector<double>(n, 0.0));

    std::vector<std::pair<int, int>> work;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) work.emplace_back(i, j);
    parallel_for(work.size(), jobs, [&](std::size_t w) {
        auto [i, j] = work[w];
        m.d[i][j] = bottleneck_distance(diagrams[i], diagrams[j], dim);
    });
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.d[j][i] = m.d[i][j];
    return m;
}

}  // namespace netpers
