#pragma once

#include <string>
#include <vector>

#include "netpers/types.hpp"

namespace netpers {

/// A finite weighted directed network: an ordered node set together with an
/// arbitrary real weight matrix. No symmetry, nonnegativity or zero-diagonal
/// assumptions; the label order fixes the total order on nodes used by every
/// downstream construction.
class Network {
public:
    /// Validates: n >= 1, labels distinct, weights n x n and finite.
    Network(std::vector<std::string> labels, std::vector<std::vector<double>> weights);

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    double weight(int from, int to) const { return w_[static_cast<std::size_t>(from) * n_ + to]; }
    double& weight(int from, int to) { return w_[static_cast<std::size_t>(from) * n_ + to]; }

    int index_of(const std::string& label) const;  // throws input_error on unknown label

    std::vector<std::vector<double>> weight_rows() const;

    bool operator==(const Network& other) const {
        return labels_ == other.labels_ && w_ == other.w_;
    }

private:
    int n_;
    std::vector<std::string> labels_;
    std::vector<double> w_;  // row-major, w_[i*n+j] = weight from node i to node j
};

/// weights'[i][j] = weights[j][i]. Involution.
Network transpose(const Network& x);

/// weights'[i][j] = max(weights[i][j], weights[j][i]). Idempotent, symmetric output.
Network max_symmetrize(const Network& x);

/// Exchanges the two directed weights between z and z'; everything else
/// (including diagonals) unchanged. Involution. Throws input_error if z == z'
/// or a label is unknown.
Network pair_swap(const Network& x, const std::string& z, const std::string& z_prime);
Network pair_swap(const Network& x, int i, int j);

/// Directed n-cycle with unit edges and shortest-path weights:
/// weight(x_i, x_j) = (j - i) mod n. Requires n >= 3.
Network cycle_network(int n);

/// Uniformly random network: n nodes labelled n0..n{n-1}, weights uniform in [lo, hi].
class Rng;
Network random_network(Rng& rng, int n, double lo, double hi);

}  // namespace netpers
