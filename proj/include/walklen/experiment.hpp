#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "walklen/classify.hpp"
#include "walklen/persistence.hpp"
#include "walklen/simulate.hpp"

namespace walklen {

enum class Backend { walk_length, dowker, dowker_shortest, rips_min, rips_max };

std::string to_string(Backend backend);
Backend backend_from_string(const std::string& s);

// Full Table-1-style experiment: simulated trials per hole count, one
// filtration backend x preprocessing mode grid, leave-one-out knn on
// bottleneck distances.
struct ExperimentConfig {
    ArenaConfig arena;        // per-trial parameters (n_holes and rng_seed are set per trial)
    int n_arenas = 5;         // hole counts 0 .. n_arenas-1
    int trials_per_arena = 5;
    std::vector<Backend> backends{Backend::walk_length, Backend::dowker, Backend::dowker_shortest,
                                  Backend::rips_min, Backend::rips_max};
    std::vector<PreprocessMode> modes{PreprocessMode::raw, PreprocessMode::min1, PreprocessMode::min_purge,
                                      PreprocessMode::purge};
    int hom_dim = 1;
    int knn_k = 4;
    std::string profile = "desk";
    std::uint64_t root_seed = 0;
};

ExperimentConfig desk_profile();
ExperimentConfig full_profile();

// Parses the experiment JSON: a `profile` key selects the preset, any other
// key overrides it (L, step_fraction, n_steps, n_cells_range, time_window,
// place_field_radius_fraction, trials_per_arena, n_arenas, modes, backends,
// hom_dim, knn_k, seed).
ExperimentConfig parse_experiment_config(const std::string& json_text);
std::string experiment_config_json(const ExperimentConfig& cfg);

// Diagram of one trial network under a backend/mode combination.
PersistenceDiagram trial_diagram(const WeightedDigraph& network, Backend backend, PreprocessMode mode,
                                 int hom_dim);

// Simulates all trials and persists one directory per trial under out_dir:
// spikes.csv, network.csv, metadata.json and diagram_<backend>_<mode>.csv,
// plus a top-level config.json. Trials run on the worker pool; outputs are
// bit-reproducible from cfg.root_seed.
void run_simulate(const ExperimentConfig& cfg, const std::string& out_dir);

struct ComboReport {
    Backend backend;
    PreprocessMode mode;
    KnnReport knn;
};

struct ClassifyReport {
    std::vector<std::string> trial_names;
    std::vector<int> labels;
    int hom_dim = 1;
    std::vector<ComboReport> combos;
};

// Reads the trial directories written by run_simulate, computes per-combo
// bottleneck distance matrices (written as distances_<backend>_<mode>.csv)
// and the leave-one-out knn report (written as report.json).
ClassifyReport run_classify(const std::string& dir);

std::string classify_report_json(const ClassifyReport& report);

} // namespace walklen
