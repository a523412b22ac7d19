#include "netpers/hippocampus.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "netpers/filtration.hpp"
#include "netpers/parallel.hpp"
#include "netpers/persistence.hpp"

namespace netpers {

Arena::Arena(double side, std::vector<Disk> holes, int grid_points)
    : side_(side), grid_(grid_points), holes_(std::move(holes)) {
    if (side <= 0.0) throw input_error("arena side must be positive");
    if (grid_points < 2) throw input_error("arena grid needs at least 2 points per side");
    for (const auto& h : holes_) {
        if (h.radius <= 0.0) throw input_error("hole radius must be positive");
        if (h.cx - h.radius < 0.0 || h.cx + h.radius > side_ || h.cy - h.radius < 0.0 ||
            h.cy + h.radius > side_)
            throw input_error("hole does not fit inside the arena");
    }
    // The allowed cells must form one connected component, otherwise a
    // trajectory cannot cover the arena.
    int n_allowed = allowed_cell_count();
    if (n_allowed == 0) throw input_error("arena has no allowed grid cells");
    GridPoint start{-1, -1};
    for (int ix = 0; ix < grid_ && start.ix < 0; ++ix)
        for (int iy = 0; iy < grid_ && start.ix < 0; ++iy)
            if (allowed({ix, iy})) start = {ix, iy};
    std::vector<char> seen(static_cast<std::size_t>(grid_) * grid_, 0);
    std::queue<GridPoint> queue;
    queue.push(start);
    seen[static_cast<std::size_t>(start.ix) * grid_ + start.iy] = 1;
    int reached = 0;
    while (!queue.empty()) {
        GridPoint p = queue.front();
        queue.pop();
        ++reached;
        const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            GridPoint q{p.ix + dx[d], p.iy + dy[d]};
            if (q.ix < 0 || q.iy < 0 || q.ix >= grid_ || q.iy >= grid_) continue;
            auto& mark = seen[static_cast<std::size_t>(q.ix) * grid_ + q.iy];
            if (mark || !allowed(q)) continue;
            mark = 1;
            queue.push(q);
        }
    }
    if (reached != n_allowed)
        throw input_error("allowed grid region is disconnected; adjust holes or grid");
}

bool Arena::in_hole(double x, double y) const {
    for (const auto& h : holes_) {
        double dx = x - h.cx, dy = y - h.cy;
        if (dx * dx + dy * dy < h.radius * h.radius) return true;
    }
    return false;
}

bool Arena::allowed(const GridPoint& p) const {
    if (p.ix < 0 || p.iy < 0 || p.ix >= grid_ || p.iy >= grid_) return false;
    return !in_hole(coord(p.ix), coord(p.iy));
}

int Arena::allowed_cell_count() const {
    int n = 0;
    for (int ix = 0; ix < grid_; ++ix)
        for (int iy = 0; iy < grid_; ++iy)
            if (allowed({ix, iy})) ++n;
    return n;
}

std::vector<GridPoint> simulate_trajectory(const Arena& arena, int steps, std::uint64_t seed) {
    if (steps < 1) throw input_error("trajectory needs at least one step");
    const int g = arena.grid_points();
    GridPoint pos{g / 2, g / 2};  // walks start from the central grid cell
    if (!arena.allowed(pos))
        throw input_error("trajectory start position lies inside a forbidden zone");

    // The walk is a sequence of `steps` grid positions; the start cell is time
    // step one.
    Rng rng(seed);
    std::vector<GridPoint> traj;
    traj.reserve(steps);
    traj.push_back(pos);
    const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
    GridPoint options[4];
    for (int t = 1; t < steps; ++t) {
        int n_allowed = 0;
        for (int d = 0; d < 4; ++d) {
            GridPoint q{pos.ix + dx[d], pos.iy + dy[d]};
            if (arena.allowed(q)) options[n_allowed++] = q;
        }
        if (n_allowed == 0) throw input_error("trajectory is stuck; arena too constrained");
        pos = options[rng.next_below(static_cast<std::uint64_t>(n_allowed))];
        traj.push_back(pos);
    }
    return traj;
}

double coverage_fraction(const Arena& arena, const std::vector<GridPoint>& traj) {
    const int g = arena.grid_points();
    std::vector<char> visited(static_cast<std::size_t>(g) * g, 0);
    for (const auto& p : traj) visited[static_cast<std::size_t>(p.ix) * g + p.iy] = 1;
    int n_visited = 0;
    for (char v : visited) n_visited += v;
    return static_cast<double>(n_visited) / arena.allowed_cell_count();
}

std::vector<PlaceField> scatter_place_fields(const Arena& arena, int n, double radius,
                                             std::uint64_t seed) {
    if (n <= 0) throw input_error("place field count must be positive");
    Rng rng(seed);
    std::vector<PlaceField> fields;
    fields.reserve(n);
    while (static_cast<int>(fields.size()) < n) {
        double x = rng.next_real(0.0, arena.side());
        double y = rng.next_real(0.0, arena.side());
        if (arena.in_hole(x, y)) continue;
        fields.push_back({x, y, radius});
    }
    return fields;
}

Raster compute_rasters(const Arena& arena, const std::vector<GridPoint>& traj,
                       const std::vector<PlaceField>& fields) {
    Raster r;
    r.n_cells = static_cast<int>(fields.size());
    r.n_steps = static_cast<int>(traj.size());
    r.fired.assign(static_cast<std::size_t>(r.n_cells) * r.n_steps, 0);
    for (int i = 0; i < r.n_cells; ++i) {
        const auto& f = fields[i];
        const double r2 = f.radius * f.radius;
        for (int t = 0; t < r.n_steps; ++t) {
            double dx = arena.coord(traj[t].ix) - f.cx;
            double dy = arena.coord(traj[t].iy) - f.cy;
            if (dx * dx + dy * dy <= r2)
                r.fired[static_cast<std::size_t>(i) * r.n_steps + t] = 1;
        }
    }
    return r;
}

Network induce_network(const Raster& raster, int window) {
    if (window < 1) throw input_error("delay window must be >= 1");
    const int n = raster.n_cells, t_max = raster.n_steps;
    std::vector<std::vector<double>> counts(n, std::vector<double>(n, 0.0));
    for (int t = 1; t < t_max; ++t)  // t ranges over the 2nd..last step
        for (int d = 1; d <= window && d <= t; ++d)
            for (int j = 0; j < n; ++j) {
                if (!raster.at(j, t)) continue;
                for (int i = 0; i < n; ++i)
                    if (raster.at(i, t - d)) counts[i][j] += 1.0;
            }

    std::vector<std::string> labels(n);
    std::vector<std::vector<double>> w(n, std::vector<double>(n));
    for (int j = 0; j < n; ++j) {
        double colsum = 0.0;
        for (int i = 0; i < n; ++i) colsum += counts[i][j];
        for (int i = 0; i < n; ++i)
            w[i][j] = colsum == 0.0 ? 1.0 : 1.0 - counts[i][j] / colsum;
    }
    for (int i = 0; i < n; ++i) labels[i] = "cell" + std::to_string(i);
    return Network(std::move(labels), std::move(w));
}

Network normalize_weights(const Network& x) {
    double lo = x.weight(0, 0), hi = lo;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) {
            lo = std::min(lo, x.weight(i, j));
            hi = std::max(hi, x.weight(i, j));
        }
    auto rows = x.weight_rows();
    for (auto& row : rows)
        for (double& v : row) v = hi == lo ? 0.0 : (v - lo) / (hi - lo);
    return Network(x.labels(), std::move(rows));
}

double snap_up(double value, double grid) {
    if (grid <= 0.0) return value;
    return std::ceil(value / grid - 1e-12) * grid;
}

std::vector<Disk> hole_layout(const ExperimentConfig& cfg, int n_holes) {
    const double l = cfg.arena_side, r = cfg.hole_radius_factor * cfg.arena_side;
    const std::vector<Disk> all = {{0.25 * l, 0.25 * l, r},
                                   {0.25 * l, 0.75 * l, r},
                                   {0.75 * l, 0.25 * l, r},
                                   {0.75 * l, 0.75 * l, r}};
    if (n_holes < 0 || n_holes > static_cast<int>(all.size()))
        throw input_error("hole count must lie in [0, 4]");
    return {all.begin(), all.begin() + n_holes};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials_per_class < 1) throw input_error("need at least one trial per class");
    if (cfg.fields_min < 1 || cfg.fields_max < cfg.fields_min)
        throw input_error("invalid place-field count range");

    struct Job {
        int arena_class;
        int trial;
    };
    std::vector<Job> jobs;
    for (int c : cfg.classes)
        for (int t = 0; t < cfg.trials_per_class; ++t) jobs.push_back({c, t});

    ExperimentResult result;
    result.trials.resize(jobs.size());
    parallel_for(jobs.size(), cfg.jobs, [&](std::size_t idx) {
        const auto [arena_class, trial] = jobs[idx];
        Arena arena(cfg.arena_side, hole_layout(cfg, arena_class), cfg.grid_points);
        const std::uint64_t seed =
            derive_seed(cfg.master_seed, static_cast<std::uint64_t>(arena_class) + 1,
                        static_cast<std::uint64_t>(trial) + 1);

        Rng trial_rng(seed);
        const int n_fields = trial_rng.next_int(cfg.fields_min, cfg.fields_max);
        auto traj = simulate_trajectory(arena, cfg.steps, derive_seed(seed, 1));
        auto fields = scatter_place_fields(arena, n_fields,
                                           cfg.field_radius_factor * cfg.arena_side,
                                           derive_seed(seed, 2));
        Raster raster = compute_rasters(arena, traj, fields);
        Network net = normalize_weights(induce_network(raster, cfg.delay_window));
        if (cfg.snap_grid > 0.0) {
            auto rows = net.weight_rows();
            for (auto& row : rows)
                for (double& v : row) v = snap_up(v, cfg.snap_grid);
            net = Network(net.labels(), std::move(rows));
        }

        TrialResult& out = result.trials[idx];
        out.arena_class = arena_class;
        out.trial_index = trial;
        out.seed = seed;
        out.n_fields = n_fields;
        out.coverage = coverage_fraction(arena, traj);
        out.coverage_flagged = out.coverage < cfg.coverage_threshold;
        out.label = "env-" + std::to_string(arena_class) + "-" + std::to_string(n_fields);
        out.diagram = compute_persistence(dowker_sink_filtration(net, cfg.max_dim),
                                          cfg.diagram_dim);
        out.network = std::move(net);
    });

    std::vector<PersistenceDiagram> diagrams;
    std::vector<std::string> labels;
    for (const auto& t : result.trials) {
        diagrams.push_back(t.diagram);
        labels.push_back(t.label);
    }
    result.matrix = bottleneck_matrix(diagrams, cfg.diagram_dim, labels, cfg.jobs);
    for (const auto& row : result.matrix.d)
        for (double v : row)
            if (!std::isfinite(v))
                throw input_error("bottleneck matrix has an infinite entry; diagrams have "
                                  "mismatched essential classes");
    result.dendrogram = single_linkage(result.matrix);

    // Separation statistic for the first/last configured classes.
    if (cfg.classes.size() >= 2) {
        const int class_a = cfg.classes.front(), class_b = cfg.classes.back();
        double within_sum = 0.0, between_sum = 0.0;
        int within_n = 0, between_n = 0;
        for (std::size_t i = 0; i < result.trials.size(); ++i)
            for (std::size_t j = i + 1; j < result.trials.size(); ++j) {
                int ci = result.trials[i].arena_class, cj = result.trials[j].arena_class;
                double d = result.matrix.d[i][j];
                if ((ci == class_a && cj == class_a) || (ci == class_b && cj == class_b)) {
                    within_sum += d;
                    ++within_n;
                } else if ((ci == class_a && cj == class_b) || (ci == class_b && cj == class_a)) {
                    between_sum += d;
                    ++between_n;
                }
            }
        result.within_mean = within_n ? within_sum / within_n : 0.0;
        result.between_mean = between_n ? between_sum / between_n : 0.0;
    }
    return result;
}

}  // namespace netpers
