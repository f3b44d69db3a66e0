#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "walklen/digraph.hpp"

namespace walklen {

// Parameters of one simulated hippocampal trial: a random walk on a square
// grid arena with optional square holes, place fields sampled in the free
// region, and the co-firing network induced from the spike trains.
struct ArenaConfig {
    double side_length = 10.0;                // L
    double step_fraction = 0.05;              // grid step = step_fraction * L
    int n_steps = 5000;
    int n_holes = 0;                          // 0..4
    double place_field_radius_fraction = 0.05;
    int n_cells_min = 150;
    int n_cells_max = 200;
    int time_window = 5;                      // tau
    std::uint64_t rng_seed = 0;
};

struct TrialRecord {
    int label = 0;     // hole count
    int n_cells = 0;
    int n_steps = 0;
    std::vector<std::uint8_t> spikes;                  // n_cells x n_steps, row-major
    WeightedDigraph network;                           // co-firing weights in [0, 1]
    std::vector<std::array<double, 2>> place_field_centers;
    std::vector<std::array<double, 2>> trajectory;     // physical coordinates
    std::vector<std::array<double, 2>> hole_centers;   // physical coordinates
    double hole_half_side = 0.0;                       // physical half side length

    std::uint8_t spike(int cell, int t) const {
        return spikes[static_cast<std::size_t>(cell) * static_cast<std::size_t>(n_steps) +
                      static_cast<std::size_t>(t)];
    }
};

// Deterministic given cfg.rng_seed. Throws InfeasibleArenaError when the
// holes leave no connected free region.
TrialRecord simulate_trial(const ArenaConfig& cfg);

enum class PreprocessMode { raw, min1, min_purge, purge };

std::string to_string(PreprocessMode mode);
PreprocessMode preprocess_mode_from_string(const std::string& s);

// Weight preprocessing ahead of the filtrations. With m = min off-diagonal
// weight: raw keeps the network; min1 shifts entries < 1 down by m and keeps
// the 1s; min_purge shifts and sends 1s to +inf; purge sends 1s to +inf.
// The diagonal is untouched.
WeightedDigraph preprocess(const WeightedDigraph& net, PreprocessMode mode);

} // namespace walklen
