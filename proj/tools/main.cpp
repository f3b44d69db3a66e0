// walklen: walk-length persistence toolkit for weighted directed graphs.
//
// Subcommands cover every pipeline stage: shortest-distance closure,
// filtration construction, persistent homology, diagram and network
// distances, exact generators, the hippocampal simulation, classification,
// and single-linkage clustering. Exit codes: 0 success, 1 domain error,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "walklen/bottleneck.hpp"
#include "walklen/classify.hpp"
#include "walklen/experiment.hpp"
#include "walklen/filtration.hpp"
#include "walklen/generators.hpp"
#include "walklen/io.hpp"
#include "walklen/network_distance.hpp"
#include "walklen/persistence.hpp"

namespace {

using namespace walklen;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_text_file(path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    write_text_file(out_path, content);
}

WeightedDigraph load_graph(const std::string& path) {
    std::stringstream ss(slurp(path));
    return read_graph_csv(ss);
}

enum class Method { walk_length, dowker_sink, dowker_source, rips };

Method method_from_string(const std::string& s) {
    if (s == "walk-length") return Method::walk_length;
    if (s == "dowker-sink") return Method::dowker_sink;
    if (s == "dowker-source") return Method::dowker_source;
    if (s == "rips") return Method::rips;
    throw UsageError("unknown method: " + s + " (expected walk-length|dowker-sink|dowker-source|rips)");
}

// Build a filtration the way the pipelines do: walk-length closes the input
// first (the filtration is invariant under closure), Rips optionally
// symmetrizes, Dowker uses the weights as given.
FilteredComplex build_filtration(const WeightedDigraph& g, Method method, int max_dim,
                                 const std::string& symmetrize_mode) {
    switch (method) {
        case Method::walk_length:
            return walk_length_filtration(shortest_distance_digraph(g, /*allow_infinite=*/true), max_dim - 1);
        case Method::dowker_sink: return dowker_sink_filtration(g, max_dim - 1);
        case Method::dowker_source: return dowker_source_filtration(g, max_dim - 1);
        case Method::rips: {
            if (symmetrize_mode == "min") return rips_filtration(symmetrize(g, SymmetrizeMode::min), max_dim - 1);
            if (symmetrize_mode == "max") return rips_filtration(symmetrize(g, SymmetrizeMode::max), max_dim - 1);
            if (symmetrize_mode.empty()) return rips_filtration(g, max_dim - 1);
            throw UsageError("unknown --symmetrize mode: " + symmetrize_mode);
        }
    }
    throw std::logic_error("unreachable");
}

int run(int argc, char** argv) {
    CLI::App app{"walk-length persistence toolkit for weighted directed graphs"};
    app.require_subcommand(1);

    // shortest
    auto* shortest = app.add_subcommand("shortest", "shortest-distance closure of a graph");
    std::string shortest_in, shortest_out;
    bool allow_infinite = false;
    shortest->add_option("input", shortest_in, "graph CSV (matrix or edge list); - for stdin");
    shortest->add_option("-o,--output", shortest_out, "output file (default stdout)");
    shortest->add_flag("--allow-infinite", allow_infinite, "keep +inf entries for unreachable pairs");

    // filtration
    auto* filtration = app.add_subcommand("filtration", "build a filtered complex from a graph");
    std::string filt_in, filt_out, filt_method = "walk-length", filt_sym;
    int filt_max_dim = 2;
    filtration->add_option("input", filt_in, "graph CSV; - for stdin");
    filtration->add_option("-o,--output", filt_out, "output file (default stdout)");
    filtration->add_option("--method", filt_method, "walk-length|dowker-sink|dowker-source|rips");
    filtration->add_option("--max-dim", filt_max_dim, "top simplex dimension K (default 2)");
    filtration->add_option("--symmetrize", filt_sym, "min|max symmetrization before rips");

    // persistence
    auto* persistence = app.add_subcommand("persistence", "persistence diagram of a graph or filtration dump");
    std::string pers_in, pers_out, pers_method = "walk-length", pers_sym;
    int hom_dim = 1;
    persistence->add_option("input", pers_in, "graph CSV or filtration dump; - for stdin");
    persistence->add_option("-o,--output", pers_out, "output file (default stdout)");
    persistence->add_option("--method", pers_method, "filtration method for graph input");
    persistence->add_option("--hom-dim", hom_dim, "max homology dimension (default 1)");
    persistence->add_option("--symmetrize", pers_sym, "min|max symmetrization before rips");

    // distance
    auto* distance = app.add_subcommand("distance", "distance between diagrams or networks");
    std::string dist_kind = "bottleneck", dist_a, dist_b, dist_out;
    int dist_dim = 1;
    bool raw_objective = false;
    distance->add_option("--kind", dist_kind, "bottleneck|dnet-inf|dnet-l1|dnet-l1-map|dnet-l1-bij");
    distance->add_option("a", dist_a, "first input file")->required();
    distance->add_option("b", dist_b, "second input file")->required();
    distance->add_option("--dim", dist_dim, "diagram dimension for bottleneck (default 1)");
    distance->add_flag("--raw-objective", raw_objective, "print the unhalved minimized objective");
    distance->add_option("-o,--output", dist_out, "output file (default stdout)");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a generated network as matrix CSV");
    std::vector<std::string> gen_args;
    std::string gen_out;
    double gen_eps = 0.1;
    generate->add_option("spec", gen_args, "cycle N | modified-cycle N [W] | fixture NAME")
        ->expected(-1)
        ->required();
    generate->add_option("--eps", gen_eps, "epsilon for fixture fig2_Xeps (default 0.1)");
    generate->add_option("-o,--output", gen_out, "output file (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run the hippocampal experiment simulation");
    std::string sim_config, sim_out_dir;
    std::uint64_t sim_seed = 0;
    bool sim_seed_set = false;
    simulate->add_option("config", sim_config, "experiment config JSON; - for stdin")->required();
    simulate->add_option("--out", sim_out_dir, "output directory for trial artifacts")->required();
    simulate->add_option("--seed", sim_seed, "root seed override")->each([&](const std::string&) {
        sim_seed_set = true;
    });

    // classify
    auto* classify = app.add_subcommand("classify", "leave-one-out knn report over trial directories");
    std::string cls_dir, cls_out;
    classify->add_option("dir", cls_dir, "directory produced by simulate")->required();
    classify->add_option("-o,--output", cls_out, "also write the report JSON here");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "single-linkage clustering of a distance matrix");
    std::string clu_in, clu_out, clu_labels_out;
    double clu_threshold = 0.0;
    bool clu_threshold_set = false;
    cluster->add_option("input", clu_in, "distance matrix CSV; - for stdin");
    cluster->add_option("-o,--output", clu_out, "linkage CSV output (default stdout)");
    cluster->add_option("--threshold", clu_threshold, "cut height for cluster labels")->each([&](const std::string&) {
        clu_threshold_set = true;
    });
    cluster->add_option("--labels-out", clu_labels_out, "labels CSV output (requires --threshold)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (shortest->parsed()) {
        const auto g = validate(load_graph(shortest_in), Validation::lenient);
        std::stringstream out;
        write_graph_csv(out, shortest_distance_digraph(g, allow_infinite));
        emit(shortest_out, out.str());
        return 0;
    }

    if (filtration->parsed()) {
        if (filt_max_dim < 1) throw UsageError("--max-dim must be at least 1");
        const auto g = validate(load_graph(filt_in), Validation::lenient);
        std::stringstream out;
        write_filtration_csv(out, build_filtration(g, method_from_string(filt_method), filt_max_dim, filt_sym));
        emit(filt_out, out.str());
        return 0;
    }

    if (persistence->parsed()) {
        if (hom_dim < 0) throw UsageError("--hom-dim must be non-negative");
        const std::string text = slurp(pers_in);
        const std::string first_line = text.substr(0, text.find('\n'));
        FilteredComplex fc;
        if (looks_like_filtration_csv(first_line)) {
            std::stringstream ss(text);
            fc = read_filtration_csv(ss);
        } else {
            std::stringstream ss(text);
            const auto g = validate(read_graph_csv(ss), Validation::lenient);
            fc = build_filtration(g, method_from_string(pers_method), hom_dim + 1, pers_sym);
        }
        std::stringstream out;
        write_diagram_csv(out, compute_persistence(fc, hom_dim));
        emit(pers_out, out.str());
        return 0;
    }

    if (distance->parsed()) {
        std::stringstream out;
        if (dist_kind == "bottleneck") {
            const auto a = read_diagram_file(dist_a);
            const auto b = read_diagram_file(dist_b);
            out << format_value(bottleneck_distance(a, b, dist_dim)) << '\n';
        } else {
            NetworkDistanceKind kind;
            if (dist_kind == "dnet-inf") kind = NetworkDistanceKind::inf;
            else if (dist_kind == "dnet-l1") kind = NetworkDistanceKind::l1;
            else if (dist_kind == "dnet-l1-map") kind = NetworkDistanceKind::l1_map;
            else if (dist_kind == "dnet-l1-bij") kind = NetworkDistanceKind::l1_bij;
            else throw UsageError("unknown --kind: " + dist_kind);
            const auto X = validate(load_graph(dist_a), Validation::lenient);
            const auto Y = validate(load_graph(dist_b), Validation::lenient);
            const auto res = network_distance(X, Y, kind);
            if (raw_objective) {
                out << format_value(res.raw_objective) << '\n';
            } else {
                nlohmann::json j;
                j["kind"] = to_string(res.kind);
                j["value"] = res.value;
                j["raw_objective"] = res.raw_objective;
                j["argmin_pairs"] = nlohmann::json::array();
                for (const auto& [x, y] : res.argmin_pairs) j["argmin_pairs"].push_back({x, y});
                if (!res.phi.empty()) {
                    j["phi"] = res.phi;
                    j["psi"] = res.psi;
                }
                out << j.dump(2) << '\n';
            }
        }
        emit(dist_out, out.str());
        return 0;
    }

    if (generate->parsed()) {
        WeightedDigraph g;
        const auto& kind = gen_args.at(0);
        if (kind == "cycle") {
            if (gen_args.size() != 2) throw UsageError("usage: generate cycle N");
            g = make_cycle_network(std::stoi(gen_args[1]));
        } else if (kind == "modified-cycle") {
            if (gen_args.size() == 2)
                g = make_modified_cycle_network(std::stoi(gen_args[1]));
            else if (gen_args.size() == 3)
                g = make_modified_cycle_network(std::stoi(gen_args[1]), parse_value(gen_args[2]));
            else
                throw UsageError("usage: generate modified-cycle N [W]");
        } else if (kind == "fixture") {
            if (gen_args.size() != 2) throw UsageError("usage: generate fixture NAME");
            g = make_paper_fixture(gen_args[1], gen_eps);
        } else {
            throw UsageError("unknown generator: " + kind);
        }
        std::stringstream out;
        write_graph_csv(out, g);
        emit(gen_out, out.str());
        return 0;
    }

    if (simulate->parsed()) {
        auto cfg = parse_experiment_config(slurp(sim_config));
        if (sim_seed_set) cfg.root_seed = sim_seed;
        run_simulate(cfg, sim_out_dir);
        return 0;
    }

    if (classify->parsed()) {
        const auto report = run_classify(cls_dir);
        const std::string json_text = classify_report_json(report);
        if (!cls_out.empty()) write_text_file(cls_out, json_text);
        std::cout << json_text;
        return 0;
    }

    if (cluster->parsed()) {
        if (!clu_labels_out.empty() && !clu_threshold_set)
            throw UsageError("--labels-out requires --threshold");
        std::stringstream ss(slurp(clu_in));
        const auto dm = read_matrix_csv(ss);
        const auto res = single_linkage(dm, clu_threshold_set ? clu_threshold : 0.0);
        std::stringstream out;
        write_linkage_csv(out, res.merges);
        emit(clu_out, out.str());
        if (!clu_labels_out.empty()) {
            std::stringstream labels;
            labels << "index,label\n";
            for (std::size_t i = 0; i < res.labels.size(); ++i) labels << i << ',' << res.labels[i] << '\n';
            write_text_file(clu_labels_out, labels.str());
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
