#include "walklen/experiment.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "walklen/bottleneck.hpp"
#include "walklen/filtration.hpp"
#include "walklen/io.hpp"
#include "walklen/network_distance.hpp"
#include "walklen/parallel.hpp"
#include "walklen/rng.hpp"

namespace walklen {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(Backend backend) {
    switch (backend) {
        case Backend::walk_length: return "walk_length";
        case Backend::dowker: return "dowker";
        case Backend::dowker_shortest: return "dowker_shortest";
        case Backend::rips_min: return "rips_min";
        case Backend::rips_max: return "rips_max";
    }
    return "?";
}

Backend backend_from_string(const std::string& s) {
    if (s == "walk_length") return Backend::walk_length;
    if (s == "dowker") return Backend::dowker;
    if (s == "dowker_shortest") return Backend::dowker_shortest;
    if (s == "rips_min") return Backend::rips_min;
    if (s == "rips_max") return Backend::rips_max;
    throw DomainError("unknown backend: " + s);
}

ExperimentConfig desk_profile() {
    ExperimentConfig cfg;
    cfg.profile = "desk";
    cfg.arena.n_steps = 2000;
    cfg.arena.n_cells_min = 40;
    cfg.arena.n_cells_max = 60;
    cfg.trials_per_arena = 5;
    return cfg;
}

ExperimentConfig full_profile() {
    ExperimentConfig cfg;
    cfg.profile = "full";
    cfg.arena.n_steps = 5000;
    cfg.arena.n_cells_min = 150;
    cfg.arena.n_cells_max = 200;
    cfg.trials_per_arena = 20;
    return cfg;
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw IoError(std::string("bad experiment config JSON: ") + e.what());
    }
    ExperimentConfig cfg = j.value("profile", "desk") == "full" ? full_profile() : desk_profile();
    if (j.contains("L")) cfg.arena.side_length = j["L"].get<double>();
    if (j.contains("step_fraction")) cfg.arena.step_fraction = j["step_fraction"].get<double>();
    if (j.contains("n_steps")) cfg.arena.n_steps = j["n_steps"].get<int>();
    if (j.contains("place_field_radius_fraction"))
        cfg.arena.place_field_radius_fraction = j["place_field_radius_fraction"].get<double>();
    if (j.contains("n_cells_range")) {
        cfg.arena.n_cells_min = j["n_cells_range"].at(0).get<int>();
        cfg.arena.n_cells_max = j["n_cells_range"].at(1).get<int>();
    }
    if (j.contains("time_window")) cfg.arena.time_window = j["time_window"].get<int>();
    if (j.contains("n_arenas")) cfg.n_arenas = j["n_arenas"].get<int>();
    if (j.contains("trials_per_arena")) cfg.trials_per_arena = j["trials_per_arena"].get<int>();
    if (j.contains("hom_dim")) cfg.hom_dim = j["hom_dim"].get<int>();
    if (j.contains("knn_k")) cfg.knn_k = j["knn_k"].get<int>();
    if (j.contains("seed")) cfg.root_seed = j["seed"].get<std::uint64_t>();
    if (j.contains("modes")) {
        cfg.modes.clear();
        for (const auto& m : j["modes"]) cfg.modes.push_back(preprocess_mode_from_string(m.get<std::string>()));
    }
    if (j.contains("backends")) {
        cfg.backends.clear();
        for (const auto& b : j["backends"]) cfg.backends.push_back(backend_from_string(b.get<std::string>()));
    }
    if (cfg.n_arenas < 1 || cfg.n_arenas > 5) throw DomainError("n_arenas must lie in 1..5");
    return cfg;
}

std::string experiment_config_json(const ExperimentConfig& cfg) {
    json j;
    j["profile"] = cfg.profile;
    j["L"] = cfg.arena.side_length;
    j["step_fraction"] = cfg.arena.step_fraction;
    j["n_steps"] = cfg.arena.n_steps;
    j["place_field_radius_fraction"] = cfg.arena.place_field_radius_fraction;
    j["n_cells_range"] = {cfg.arena.n_cells_min, cfg.arena.n_cells_max};
    j["time_window"] = cfg.arena.time_window;
    j["n_arenas"] = cfg.n_arenas;
    j["trials_per_arena"] = cfg.trials_per_arena;
    j["hom_dim"] = cfg.hom_dim;
    j["knn_k"] = cfg.knn_k;
    j["seed"] = cfg.root_seed;
    j["modes"] = json::array();
    for (const auto m : cfg.modes) j["modes"].push_back(to_string(m));
    j["backends"] = json::array();
    for (const auto b : cfg.backends) j["backends"].push_back(to_string(b));
    return j.dump(2) + "\n";
}

PersistenceDiagram trial_diagram(const WeightedDigraph& network, Backend backend, PreprocessMode mode,
                                 int hom_dim) {
    const WeightedDigraph net = preprocess(network, mode);
    FilteredComplex fc;
    switch (backend) {
        case Backend::walk_length:
            fc = walk_length_filtration(shortest_distance_digraph(net, /*allow_infinite=*/true), hom_dim);
            break;
        case Backend::dowker: fc = dowker_sink_filtration(net, hom_dim); break;
        case Backend::dowker_shortest:
            fc = dowker_sink_filtration(shortest_distance_digraph(net, /*allow_infinite=*/true), hom_dim);
            break;
        case Backend::rips_min: fc = rips_filtration(symmetrize(net, SymmetrizeMode::min), hom_dim); break;
        case Backend::rips_max: fc = rips_filtration(symmetrize(net, SymmetrizeMode::max), hom_dim); break;
    }
    return compute_persistence(fc, hom_dim);
}

namespace {

std::string trial_dir_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "trial_%03d", index);
    return buf;
}

std::string diagram_file_name(Backend backend, PreprocessMode mode) {
    return "diagram_" + to_string(backend) + "_" + to_string(mode) + ".csv";
}

void write_spikes_csv(const std::string& path, const TrialRecord& trial) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write file: " + path);
    for (int i = 0; i < trial.n_cells; ++i) {
        for (int t = 0; t < trial.n_steps; ++t) {
            if (t) os << ',';
            os << static_cast<int>(trial.spike(i, t));
        }
        os << '\n';
    }
}

} // namespace

void run_simulate(const ExperimentConfig& cfg, const std::string& out_dir) {
    fs::create_directories(out_dir);
    write_text_file((fs::path(out_dir) / "config.json").string(), experiment_config_json(cfg));

    const int n_trials = cfg.n_arenas * cfg.trials_per_arena;
    parallel_for(static_cast<std::size_t>(n_trials), [&](std::size_t t) {
        const int index = static_cast<int>(t);
        ArenaConfig arena = cfg.arena;
        arena.n_holes = index / cfg.trials_per_arena;
        arena.rng_seed = derive_seed(cfg.root_seed, static_cast<std::uint64_t>(index));
        const TrialRecord trial = simulate_trial(arena);

        const fs::path dir = fs::path(out_dir) / trial_dir_name(index);
        fs::create_directories(dir);
        write_spikes_csv((dir / "spikes.csv").string(), trial);
        {
            std::ofstream os(dir / "network.csv");
            if (!os) throw IoError("cannot write network.csv");
            write_graph_csv(os, trial.network);
        }
        {
            json meta;
            meta["label"] = trial.label;
            meta["seed"] = arena.rng_seed;
            meta["trial_index"] = index;
            meta["n_cells"] = trial.n_cells;
            meta["n_steps"] = trial.n_steps;
            write_text_file((dir / "metadata.json").string(), meta.dump(2) + "\n");
        }
        for (const auto backend : cfg.backends)
            for (const auto mode : cfg.modes) {
                const PersistenceDiagram dgm = trial_diagram(trial.network, backend, mode, cfg.hom_dim);
                std::ofstream os(dir / diagram_file_name(backend, mode));
                if (!os) throw IoError("cannot write diagram CSV");
                write_diagram_csv(os, dgm);
            }
    });
}

ClassifyReport run_classify(const std::string& dir) {
    const ExperimentConfig cfg = parse_experiment_config(read_text_file((fs::path(dir) / "config.json").string()));

    ClassifyReport report;
    report.hom_dim = cfg.hom_dim;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_directory() && entry.path().filename().string().rfind("trial_", 0) == 0)
            report.trial_names.push_back(entry.path().filename().string());
    }
    std::sort(report.trial_names.begin(), report.trial_names.end());
    if (report.trial_names.empty()) throw IoError("no trial directories under " + dir);

    for (const auto& name : report.trial_names) {
        const json meta = json::parse(read_text_file((fs::path(dir) / name / "metadata.json").string()));
        report.labels.push_back(meta.at("label").get<int>());
    }

    for (const auto backend : cfg.backends)
        for (const auto mode : cfg.modes) {
            std::vector<PersistenceDiagram> diagrams;
            diagrams.reserve(report.trial_names.size());
            for (const auto& name : report.trial_names)
                diagrams.push_back(
                    read_diagram_file((fs::path(dir) / name / diagram_file_name(backend, mode)).string()));
            const auto dm = distance_matrix(diagrams, cfg.hom_dim);
            {
                std::ofstream os(fs::path(dir) / ("distances_" + to_string(backend) + "_" + to_string(mode) + ".csv"));
                if (!os) throw IoError("cannot write distance matrix CSV");
                write_matrix_csv(os, dm);
            }
            report.combos.push_back({backend, mode, knn_classify(dm, report.labels, cfg.knn_k)});
        }

    write_text_file((fs::path(dir) / "report.json").string(), classify_report_json(report));
    return report;
}

std::string classify_report_json(const ClassifyReport& report) {
    json j;
    j["hom_dim"] = report.hom_dim;
    j["trials"] = report.trial_names;
    j["labels"] = report.labels;
    j["results"] = json::object();
    for (const auto& combo : report.combos) {
        json r;
        r["accuracy"] = combo.knn.accuracy;
        r["confusion"] = json::array();
        for (const auto& row : combo.knn.confusion) r["confusion"].push_back(row);
        r["per_trial_predictions"] = combo.knn.predictions;
        j["results"][to_string(combo.backend) + "+" + to_string(combo.mode)] = std::move(r);
    }
    return j.dump(2) + "\n";
}

} // namespace walklen
