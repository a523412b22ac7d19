#include "netpers/network_distance.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace netpers {

bool CorrespondenceSet::is_correspondence(int nx, int ny) const {
    std::vector<char> covered_x(nx, 0), covered_y(ny, 0);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= nx || j < 0 || j >= ny) return false;
        covered_x[i] = 1;
        covered_y[j] = 1;
    }
    for (char c : covered_x)
        if (!c) return false;
    for (char c : covered_y)
        if (!c) return false;
    return !pairs.empty();
}

double distortion_of_relation(const Network& x, const Network& y, const CorrespondenceSet& r) {
    if (r.pairs.empty()) throw input_error("distortion of an empty relation is undefined");
    double dis = 0.0;
    for (auto [i, j] : r.pairs)
        for (auto [i2, j2] : r.pairs)
            dis = std::max(dis, std::fabs(x.weight(i, i2) - y.weight(j, j2)));
    return dis;
}

double map_distortion(const Network& x, const Network& y, const std::vector<int>& phi) {
    double dis = 0.0;
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b)
            dis = std::max(dis, std::fabs(x.weight(a, b) - y.weight(phi[a], phi[b])));
    return dis;
}

double codistortion(const Network& x, const Network& y, const std::vector<int>& phi,
                    const std::vector<int>& psi, CodistortionDirection dir) {
    double c = 0.0;
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < y.size(); ++b) {
            double term = dir == CodistortionDirection::XY
                              ? std::fabs(x.weight(a, psi[b]) - y.weight(phi[a], b))
                              : std::fabs(y.weight(b, phi[a]) - x.weight(psi[b], a));
            c = std::max(c, term);
        }
    return c;
}

namespace {

// Advances a base-`radix` counter stored most-significant-first, so that
// successive states enumerate maps in lexicographic order.
bool advance_map(std::vector<int>& map, int radix) {
    for (int i = static_cast<int>(map.size()) - 1; i >= 0; --i) {
        if (++map[i] < radix) return true;
        map[i] = 0;
    }
    return false;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

MapPairResult network_distance_maps(const Network& x, const Network& y,
                                    const SearchBudget& budget) {
    const auto nx = static_cast<std::uint64_t>(x.size());
    const auto ny = static_cast<std::uint64_t>(y.size());
    const std::uint64_t n_phi = checked_pow(ny, nx, budget.max_map_pairs);
    const std::uint64_t n_psi = checked_pow(nx, ny, budget.max_map_pairs);
    if (n_phi > budget.max_map_pairs || n_psi > budget.max_map_pairs / n_phi)
        throw budget_error("instance too large for exact search: " + std::to_string(x.size()) +
                           "x" + std::to_string(y.size()) + " nodes exceeds the map-pair budget");

    MapPairResult best;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> phi(x.size(), 0);
    do {
        const double dis_phi = map_distortion(x, y, phi);
        if (dis_phi >= best_cost) continue;  // the four-term max cannot beat the best
        std::vector<int> psi(y.size(), 0);
        do {
            double cost = std::max(dis_phi, map_distortion(y, x, psi));
            cost = std::max(cost, codistortion(x, y, phi, psi, CodistortionDirection::XY));
            cost = std::max(cost, codistortion(x, y, phi, psi, CodistortionDirection::YX));
            if (cost < best_cost) {  // strict: keeps the lexicographically first optimum
                best_cost = cost;
                best.phi = phi;
                best.psi = psi;
            }
        } while (advance_map(psi, x.size()));
    } while (advance_map(phi, y.size()));
    best.distance = best_cost / 2.0;
    return best;
}

double network_distance_correspondences(const Network& x, const Network& y,
                                        const SearchBudget& budget) {
    const int nx = x.size(), ny = y.size();
    const int bits = nx * ny;
    if (budget.max_relation_bits > 30)
        throw input_error("relation-bit budget is capped at 30 (2^30 subsets)");
    if (bits > budget.max_relation_bits)
        throw budget_error("instance too large for exact search: " + std::to_string(nx) + "x" +
                           std::to_string(ny) + " nodes needs " + std::to_string(bits) +
                           " relation bits, budget is " + std::to_string(budget.max_relation_bits));

    // Cell k = (i, j) with i = k / ny, j = k % ny.
    std::vector<std::uint64_t> row_mask(nx, 0), col_mask(ny, 0);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            row_mask[i] |= std::uint64_t{1} << (i * ny + j);
            col_mask[j] |= std::uint64_t{1} << (i * ny + j);
        }

    double best = std::numeric_limits<double>::infinity();
    const std::uint64_t n_subsets = std::uint64_t{1} << bits;
    for (std::uint64_t mask = 1; mask < n_subsets; ++mask) {
        bool correspondence = true;
        for (int i = 0; i < nx && correspondence; ++i) correspondence = (mask & row_mask[i]) != 0;
        for (int j = 0; j < ny && correspondence; ++j) correspondence = (mask & col_mask[j]) != 0;
        if (!correspondence) continue;

        double dis = 0.0;
        for (std::uint64_t rest = mask; rest != 0 && dis < best; rest &= rest - 1) {
            const int k = std::countr_zero(rest);
            const int i = k / ny, j = k % ny;
            for (std::uint64_t rest2 = mask; rest2 != 0; rest2 &= rest2 - 1) {
                const int k2 = std::countr_zero(rest2);
                const int i2 = k2 / ny, j2 = k2 % ny;
                dis = std::max(dis, std::fabs(x.weight(i, i2) - y.weight(j, j2)));
            }
        }
        best = std::min(best, dis);
    }
    return best / 2.0;
}

}  // namespace netpers
