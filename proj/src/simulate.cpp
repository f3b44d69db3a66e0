#include "walklen/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "walklen/rng.hpp"

namespace walklen {

namespace {

struct Grid {
    int g;                        // grid index range is [0, g] per axis
    std::vector<char> free_cell;  // (g+1) x (g+1)

    bool is_free(int x, int y) const {
        return x >= 0 && x <= g && y >= 0 && y <= g &&
               free_cell[static_cast<std::size_t>(x) * (g + 1) + y];
    }
};

void check_config(const ArenaConfig& cfg) {
    if (!(cfg.side_length > 0)) throw DomainError("arena side length must be positive");
    if (!(cfg.step_fraction > 0 && cfg.step_fraction < 1))
        throw DomainError("step fraction must lie in (0, 1)");
    if (!(cfg.place_field_radius_fraction > 0 && cfg.place_field_radius_fraction < 1))
        throw DomainError("place field radius fraction must lie in (0, 1)");
    if (cfg.n_holes < 0 || cfg.n_holes > 4) throw DomainError("hole count must be between 0 and 4");
    if (cfg.time_window < 1) throw DomainError("time window must be at least 1");
    if (cfg.n_steps < cfg.time_window + 1) throw DomainError("n_steps must be at least time_window + 1");
    if (cfg.n_cells_min < 1 || cfg.n_cells_max < cfg.n_cells_min)
        throw DomainError("invalid place cell count range");
}

} // namespace

TrialRecord simulate_trial(const ArenaConfig& cfg) {
    check_config(cfg);
    const int G = static_cast<int>(std::lround(1.0 / cfg.step_fraction));
    if (G < 8) throw DomainError("grid is too coarse for hole placement");
    const double step = cfg.side_length / G;

    Rng rng(cfg.rng_seed);
    TrialRecord trial;
    trial.label = cfg.n_holes;
    trial.n_steps = cfg.n_steps;

    // Square holes of side 0.2L on a jittered 2x2 slot grid; integer grid
    // arithmetic keeps placement exact and the free region connected.
    const int half = static_cast<int>(std::lround(0.1 * G));
    const int q1 = static_cast<int>(std::lround(0.3 * G));
    const int q3 = static_cast<int>(std::lround(0.7 * G));
    const std::array<std::array<int, 2>, 4> slots{{{q1, q1}, {q3, q1}, {q1, q3}, {q3, q3}}};
    std::vector<std::array<int, 2>> holes;
    for (int h = 0; h < cfg.n_holes; ++h) {
        const int jx = rng.uniform_int(-1, 1);
        const int jy = rng.uniform_int(-1, 1);
        holes.push_back({slots[static_cast<std::size_t>(h)][0] + jx, slots[static_cast<std::size_t>(h)][1] + jy});
    }
    trial.hole_half_side = half * step;
    for (const auto& h : holes) trial.hole_centers.push_back({h[0] * step, h[1] * step});

    Grid grid;
    grid.g = G;
    grid.free_cell.assign(static_cast<std::size_t>(G + 1) * (G + 1), 1);
    for (int x = 0; x <= G; ++x)
        for (int y = 0; y <= G; ++y)
            for (const auto& h : holes)
                if (std::abs(x - h[0]) <= half && std::abs(y - h[1]) <= half)
                    grid.free_cell[static_cast<std::size_t>(x) * (G + 1) + y] = 0;

    std::vector<std::array<int, 2>> free_points;
    for (int x = 0; x <= G; ++x)
        for (int y = 0; y <= G; ++y)
            if (grid.is_free(x, y)) free_points.push_back({x, y});
    if (free_points.empty()) throw InfeasibleArenaError("holes cover the whole arena");

    // The free region must be one connected component.
    {
        std::vector<char> seen(grid.free_cell.size(), 0);
        std::vector<std::array<int, 2>> stack{free_points[0]};
        seen[static_cast<std::size_t>(free_points[0][0]) * (G + 1) + free_points[0][1]] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto [x, y] = stack.back();
            stack.pop_back();
            const std::array<std::array<int, 2>, 4> nbrs{{{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}}};
            for (const auto& [nx, ny] : nbrs) {
                if (!grid.is_free(nx, ny)) continue;
                auto& s = seen[static_cast<std::size_t>(nx) * (G + 1) + ny];
                if (!s) {
                    s = 1;
                    ++reached;
                    stack.push_back({nx, ny});
                }
            }
        }
        if (reached != free_points.size())
            throw InfeasibleArenaError("holes disconnect the free region");
    }

    // Random walk: uniform over the allowed axis directions at each step.
    std::array<int, 2> pos = free_points[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(free_points.size()) - 1))];
    trial.trajectory.reserve(static_cast<std::size_t>(cfg.n_steps));
    trial.trajectory.push_back({pos[0] * step, pos[1] * step});
    for (int t = 1; t < cfg.n_steps; ++t) {
        std::array<std::array<int, 2>, 4> moves{
            {{pos[0] + 1, pos[1]}, {pos[0] - 1, pos[1]}, {pos[0], pos[1] + 1}, {pos[0], pos[1] - 1}}};
        std::array<int, 4> allowed{};
        int n_allowed = 0;
        for (int d = 0; d < 4; ++d)
            if (grid.is_free(moves[static_cast<std::size_t>(d)][0], moves[static_cast<std::size_t>(d)][1]))
                allowed[static_cast<std::size_t>(n_allowed++)] = d;
        if (n_allowed > 0)
            pos = moves[static_cast<std::size_t>(allowed[static_cast<std::size_t>(rng.uniform_int(0, n_allowed - 1))])];
        trial.trajectory.push_back({pos[0] * step, pos[1] * step});
    }

    // Place field centers: uniform over the free region by rejection.
    trial.n_cells = rng.uniform_int(cfg.n_cells_min, cfg.n_cells_max);
    const double hole_half = trial.hole_half_side;
    const auto in_hole = [&](double x, double y) {
        for (const auto& h : trial.hole_centers)
            if (std::abs(x - h[0]) <= hole_half && std::abs(y - h[1]) <= hole_half) return true;
        return false;
    };
    for (int i = 0; i < trial.n_cells; ++i) {
        double x, y;
        do {
            x = rng.uniform(0.0, cfg.side_length);
            y = rng.uniform(0.0, cfg.side_length);
        } while (in_hole(x, y));
        trial.place_field_centers.push_back({x, y});
    }

    // Spike trains: cell i fires at time t when the walker is inside field i.
    const double radius = cfg.place_field_radius_fraction * cfg.side_length;
    const double r2 = radius * radius;
    trial.spikes.assign(static_cast<std::size_t>(trial.n_cells) * cfg.n_steps, 0);
    std::vector<std::vector<int>> active(static_cast<std::size_t>(cfg.n_steps));
    for (int t = 0; t < cfg.n_steps; ++t) {
        const auto [px, py] = trial.trajectory[static_cast<std::size_t>(t)];
        for (int i = 0; i < trial.n_cells; ++i) {
            const double dx = px - trial.place_field_centers[static_cast<std::size_t>(i)][0];
            const double dy = py - trial.place_field_centers[static_cast<std::size_t>(i)][1];
            if (dx * dx + dy * dy <= r2) {
                trial.spikes[static_cast<std::size_t>(i) * cfg.n_steps + t] = 1;
                active[static_cast<std::size_t>(t)].push_back(i);
            }
        }
    }

    // N[i][j] counts ordered firing pairs r_i(s) = r_j(t) = 1 with t >= 2 and
    // 1 <= t - s <= tau (times are 1-based in that convention).
    const int n = trial.n_cells;
    std::vector<std::int64_t> N(static_cast<std::size_t>(n) * n, 0);
    for (int t = 1; t < cfg.n_steps; ++t)
        for (int s = std::max(0, t - cfg.time_window); s < t; ++s)
            for (const int i : active[static_cast<std::size_t>(s)])
                for (const int j : active[static_cast<std::size_t>(t)])
                    ++N[static_cast<std::size_t>(i) * n + j];

    // Column-normalized complement: w(x_i, x_j) = 1 - N_ij / sum_i N_ij,
    // with never-preceded columns defaulting to weight 1.
    WeightedDigraph net(n);
    for (int j = 0; j < n; ++j) {
        std::int64_t colsum = 0;
        for (int i = 0; i < n; ++i) colsum += N[static_cast<std::size_t>(i) * n + j];
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            const double w =
                colsum > 0
                    ? 1.0 - static_cast<double>(N[static_cast<std::size_t>(i) * n + j]) / static_cast<double>(colsum)
                    : 1.0;
            net.set(i, j, w);
        }
    }
    trial.network = std::move(net);
    return trial;
}

std::string to_string(PreprocessMode mode) {
    switch (mode) {
        case PreprocessMode::raw: return "raw";
        case PreprocessMode::min1: return "min1";
        case PreprocessMode::min_purge: return "min_purge";
        case PreprocessMode::purge: return "purge";
    }
    return "?";
}

PreprocessMode preprocess_mode_from_string(const std::string& s) {
    if (s == "raw") return PreprocessMode::raw;
    if (s == "min1") return PreprocessMode::min1;
    if (s == "min_purge") return PreprocessMode::min_purge;
    if (s == "purge") return PreprocessMode::purge;
    throw DomainError("unknown preprocessing mode: " + s);
}

WeightedDigraph preprocess(const WeightedDigraph& net, PreprocessMode mode) {
    if (mode == PreprocessMode::raw) return net;
    const int n = net.size();
    double m = kInf;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m = std::min(m, net(i, j));

    WeightedDigraph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double w = net(i, j);
            double v = w;
            switch (mode) {
                case PreprocessMode::raw: break;
                case PreprocessMode::min1:
                    if (w < 1.0) v = w - m;
                    break;
                case PreprocessMode::min_purge:
                    v = w < 1.0 ? w - m : (w == 1.0 ? kInf : w);
                    break;
                case PreprocessMode::purge:
                    if (w == 1.0) v = kInf;
                    break;
            }
            out.set(i, j, v);
        }
    return out;
}

} // namespace walklen
