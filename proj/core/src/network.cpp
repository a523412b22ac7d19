#include "netpers/network.hpp"

#include <cmath>
#include <unordered_set>

#include "netpers/rng.hpp"

namespace netpers {

Network::Network(std::vector<std::string> labels, std::vector<std::vector<double>> weights)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
    if (n_ < 1) throw input_error("network needs at least one node");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw input_error("duplicate node label '" + l + "'");
    if (static_cast<int>(weights.size()) != n_)
        throw input_error("weight matrix has " + std::to_string(weights.size()) + " rows, expected " +
                          std::to_string(n_));
    w_.resize(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(weights[i].size()) != n_)
            throw input_error("weight matrix row " + std::to_string(i) + " has " +
                              std::to_string(weights[i].size()) + " entries, expected " +
                              std::to_string(n_));
        for (int j = 0; j < n_; ++j) {
            double v = weights[i][j];
            if (!std::isfinite(v))
                throw input_error("non-finite weight at (" + labels_[i] + ", " + labels_[j] + ")");
            w_[static_cast<std::size_t>(i) * n_ + j] = v;
        }
    }
}

int Network::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    throw input_error("unknown node label '" + label + "'");
}

std::vector<std::vector<double>> Network::weight_rows() const {
    std::vector<std::vector<double>> rows(n_, std::vector<double>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[i][j] = weight(i, j);
    return rows;
}

Network transpose(const Network& x) {
    auto rows = x.weight_rows();
    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size(); ++j) std::swap(rows[i][j], rows[j][i]);
    return Network(x.labels(), std::move(rows));
}

Network max_symmetrize(const Network& x) {
    auto rows = x.weight_rows();
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) rows[i][j] = std::max(x.weight(i, j), x.weight(j, i));
    return Network(x.labels(), std::move(rows));
}

Network pair_swap(const Network& x, int i, int j) {
    if (i == j) throw input_error("pair swap needs two distinct nodes");
    if (i < 0 || j < 0 || i >= x.size() || j >= x.size())
        throw input_error("pair swap index out of range");
    auto rows = x.weight_rows();
    std::swap(rows[i][j], rows[j][i]);
    return Network(x.labels(), std::move(rows));
}

Network pair_swap(const Network& x, const std::string& z, const std::string& z_prime) {
    return pair_swap(x, x.index_of(z), x.index_of(z_prime));
}

Network cycle_network(int n) {
    if (n < 3) throw input_error("cycle network needs n >= 3");
    std::vector<std::string> labels(n);
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        labels[i] = "x" + std::to_string(i + 1);
        for (int j = 0; j < n; ++j) rows[i][j] = static_cast<double>(((j - i) % n + n) % n);
    }
    return Network(std::move(labels), std::move(rows));
}

Network random_network(Rng& rng, int n, double lo, double hi) {
    std::vector<std::string> labels(n);
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        labels[i] = "n" + std::to_string(i);
        for (int j = 0; j < n; ++j) rows[i][j] = rng.next_real(lo, hi);
    }
    return Network(std::move(labels), std::move(rows));
}

}  // namespace netpers
