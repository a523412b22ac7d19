#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netpers/dendrogram.hpp"
#include "netpers/diagram_distance.hpp"
#include "netpers/network.hpp"
#include "netpers/rng.hpp"

namespace netpers {

struct Disk {
    double cx, cy, radius;
};

struct GridPoint {
    int ix, iy;

    bool operator==(const GridPoint&) const = default;
};

/// A square arena with circular forbidden zones, discretized to a g x g grid
/// of cell centers (spacing side/g). Validation checks that the holes lie in
/// the box and that the allowed grid cells form one connected component.
class Arena {
public:
    Arena(double side, std::vector<Disk> holes, int grid_points);

    double side() const { return side_; }
    int grid_points() const { return grid_; }
    double step() const { return side_ / grid_; }
    const std::vector<Disk>& holes() const { return holes_; }

    double coord(int index) const { return (index + 0.5) * step(); }
    bool in_hole(double x, double y) const;  // strictly inside a forbidden zone
    bool allowed(const GridPoint& p) const;
    int allowed_cell_count() const;

private:
    double side_;
    int grid_;
    std::vector<Disk> holes_;
};

struct PlaceField {
    double cx, cy, radius;
};

/// Binary firing matrix: rows are cells, columns are time steps.
struct Raster {
    int n_cells = 0;
    int n_steps = 0;
    std::vector<std::uint8_t> fired;  // row-major

    bool at(int cell, int t) const { return fired[static_cast<std::size_t>(cell) * n_steps + t] != 0; }
};

/// Grid random walk: the four axis moves get equal probability and the
/// probability mass of disallowed moves (outside the box or inside a hole) is
/// redistributed uniformly over the allowed ones. Starts from the allowed
/// grid cell nearest the arena center. Throws input_error when that start
/// lies in a hole.
std::vector<GridPoint> simulate_trajectory(const Arena& arena, int steps, std::uint64_t seed);

/// Fraction of allowed grid cells visited by the trajectory.
double coverage_fraction(const Arena& arena, const std::vector<GridPoint>& traj);

/// n place-field centers uniform over the allowed region (rejection sampling
/// against the holes), fixed radius.
std::vector<PlaceField> scatter_place_fields(const Arena& arena, int n, double radius,
                                             std::uint64_t seed);

/// fired[i][t] = 1 iff the trajectory point at time t lies within field i
/// (closed disk).
Raster compute_rasters(const Arena& arena, const std::vector<GridPoint>& traj,
                       const std::vector<PlaceField>& fields);

/// Directed network induced from delayed co-firing counts:
///   N[i][j] = #{(s,t) : t in [2,T], t-s in [1,w], cell j fires at t, cell i fires at s}
///   w[i][j] = 1 - N[i][j] / colsum(j).
/// Columns with colsum 0 get w[i][j] = 1 for all i.
Network induce_network(const Raster& raster, int window);

struct ExperimentConfig {
    double arena_side = 10.0;
    int grid_points = 20;
    double hole_radius_factor = 0.2;   // radius = factor * side
    std::vector<int> classes = {0, 1, 2, 3, 4};  // holes per arena class
    int trials_per_class = 4;
    int steps = 2000;
    int fields_min = 40;
    int fields_max = 60;
    double field_radius_factor = 0.05;
    int delay_window = 5;
    std::uint64_t master_seed = 2;
    double snap_grid = 0.0;            // 0 = exact births; 0.01 = coarse grid
    double coverage_threshold = 0.5;   // reported, not enforced
    int max_dim = 2;
    int diagram_dim = 1;
    int jobs = 1;
};

/// Hole layout for a class: the first n_holes entries of the canonical 2x2
/// arrangement at (1/4, 3/4) fractions of the side.
std::vector<Disk> hole_layout(const ExperimentConfig& cfg, int n_holes);

struct TrialResult {
    std::string label;          // env-<holes>-<fields>
    int arena_class = 0;
    int trial_index = 0;
    std::uint64_t seed = 0;
    int n_fields = 0;
    double coverage = 0.0;
    bool coverage_flagged = false;
    Network network{{"?"}, {{0.0}}};
    PersistenceDiagram diagram;
};

struct ExperimentResult {
    std::vector<TrialResult> trials;
    DistanceMatrix matrix;
    Dendrogram dendrogram;
    double within_mean = 0.0;   // mean bottleneck inside the first and last classes
    double between_mean = 0.0;  // mean bottleneck across the first/last class pair
};

/// Full pipeline: simulate -> rasters -> network -> normalize to [0,1] ->
/// Dowker sink diagram -> bottleneck matrix -> single-linkage dendrogram.
/// Deterministic function of the config (trial streams derive from
/// (master_seed, class, trial)). Throws on +infinity bottleneck entries.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Min-max rescaling of all weights (diagonal included) onto [0,1].
Network normalize_weights(const Network& x);

/// Smallest grid multiple >= value (snap_grid > 0).
double snap_up(double value, double grid);

}  // namespace netpers
