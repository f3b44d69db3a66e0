// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "walklen/bottleneck.hpp"
#include "walklen/experiment.hpp"
#include "walklen/filtration.hpp"
#include "walklen/generators.hpp"
#include "walklen/io.hpp"
#include "walklen/network_distance.hpp"
#include "walklen/persistence.hpp"

using namespace walklen;
using namespace walklen::test;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kExperimentSeed = 4;

struct Criterion {
    int number;
    std::string description;
    double time_limit_seconds;
    std::function<bool(std::string&)> body;
};

std::multiset<std::pair<double, double>> points_at(const PersistenceDiagram& dgm, int dim) {
    std::multiset<std::pair<double, double>> s;
    for (const auto& p : dgm.at_dim(dim)) s.insert({p.birth, p.death});
    return s;
}

PersistenceDiagram wl_diagram(const WeightedDigraph& net, int hom_dim) {
    return compute_persistence(walk_length_filtration(shortest_distance_digraph(net, true), hom_dim), hom_dim);
}

bool check(bool ok, std::string& why, const std::string& message) {
    if (!ok && why.empty()) why = message;
    return ok;
}

// --- criterion 1: cycle golden tests ---------------------------------------

bool cycle_golden(std::string& why) {
    bool ok = true;
    for (int n = 3; n <= 10; ++n) {
        const auto g = make_cycle_network(n);
        const auto expected =
            std::multiset<std::pair<double, double>>{{1.0, static_cast<double>((n + 1) / 2)}};
        const auto wl = points_at(compute_persistence(walk_length_filtration(g, 1), 1), 1);
        const auto dk = points_at(compute_persistence(dowker_sink_filtration(g, 1), 1), 1);
        ok &= check(wl == expected, why, "walk-length Dgm1(G_" + std::to_string(n) + ") is off");
        ok &= check(dk == wl, why, "Dowker Dgm1(G_" + std::to_string(n) + ") differs from walk-length");
    }
    return ok;
}

// --- criterion 2: modified-cycle golden tests -------------------------------

bool modified_cycle_golden(std::string& why) {
    bool ok = true;
    for (int n = 3; n <= 10; ++n) {
        const auto g = make_modified_cycle_network(n, static_cast<double>(n - 2));
        const auto wl = points_at(compute_persistence(walk_length_filtration(g, 1), 1), 1);
        const auto dk = points_at(compute_persistence(dowker_sink_filtration(g, 1), 1), 1);
        const auto wl_expected =
            std::multiset<std::pair<double, double>>{{1.0, static_cast<double>(n - 1)}};
        std::multiset<std::pair<double, double>> dk_expected;
        if (n > 3) dk_expected.insert({1.0, static_cast<double>(n / 2)}); // ceil((n-1)/2); empty at n=3
        ok &= check(wl == wl_expected, why, "walk-length Dgm1 of modified cycle n=" + std::to_string(n));
        ok &= check(dk == dk_expected, why, "Dowker Dgm1 of modified cycle n=" + std::to_string(n));
    }
    return ok;
}

// --- criterion 3: oracle equivalence ----------------------------------------

bool oracle_equivalence(std::string& why) {
    Rng rng(314159);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(3, 7);
        const auto g = random_strongly_connected(rng, n, trial % 2 == 0);
        const auto x = shortest_distance_digraph(g);
        const auto fc = walk_length_filtration(x, 2); // all simplices of dimension <= 3
        for (const auto& cell : fc.cells) {
            const double want = walk_length_oracle(x, cell.simplex.vertices());
            if (cell.value != want) {
                why = "dynamic program disagrees with the permutation oracle on trial " + std::to_string(trial);
                return false;
            }
        }
    }
    return true;
}

// --- criterion 4: counterexample reproduction -------------------------------

bool counterexamples(std::string& why) {
    const auto X = make_paper_fixture("fig3_X");
    const auto Y = make_paper_fixture("fig3_Y");
    const auto Z = make_paper_fixture("fig3_Z");
    const double xy = network_distance(X, Y, NetworkDistanceKind::l1).raw_objective;
    const double yz = network_distance(Y, Z, NetworkDistanceKind::l1).raw_objective;
    const double xz = network_distance(X, Z, NetworkDistanceKind::l1).raw_objective;
    bool ok = true;
    ok &= check(approx(xy, 5.0), why, "dis1 minimum for (X, Y) is not 5");
    ok &= check(approx(yz, 0.2), why, "dis1 minimum for (Y, Z) is not 0.2");
    ok &= check(approx(xz, 10.2), why, "dis1 minimum for (X, Z) is not 10.2");
    ok &= check(xy + yz < xz, why, "triangle-inequality violation not certified");

    const auto A = make_paper_fixture("fig4_X");
    const auto B = make_paper_fixture("fig4_Y");
    const double map_raw = network_distance(A, B, NetworkDistanceKind::l1_map).raw_objective;
    const double rel_raw = network_distance(A, B, NetworkDistanceKind::l1).raw_objective;
    ok &= check(approx(map_raw, 2.7), why, "l1_map raw objective is not 2.7");
    ok &= check(approx(rel_raw, 4.4), why, "l1 raw objective is not 4.4");
    ok &= check(map_raw < rel_raw, why, "strictness of the map-vs-relation inequality not certified");
    return ok;
}

// --- criterion 5: non-stability witness -------------------------------------

bool non_stability(std::string& why) {
    const auto x = make_paper_fixture("fig2_X");
    bool ok = true;
    for (const double eps : {0.1, 0.2}) {
        const auto xe = make_paper_fixture("fig2_Xeps", eps);
        const double dn = network_distance(x, xe, NetworkDistanceKind::inf).value;
        const double db = bottleneck_distance(wl_diagram(x, 1), wl_diagram(xe, 1), 1);
        ok &= check(approx(dn, eps / 2), why, "inf-network distance is not eps/2");
        ok &= check(approx(db, std::min(2 * eps, (1 + eps) / 2)), why, "bottleneck distance is off");
        ok &= check(db > dn, why, "bottleneck does not exceed the network distance");
    }
    return ok;
}

// --- criterion 6: stability property suites ---------------------------------

bool stability_suites(std::string& why) {
    Rng rng(271828);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform_int(2, 6);
        const auto X = shortest_distance_digraph(random_complete_network(rng, n));
        WeightedDigraph pert = X;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) pert.set(u, v, std::max(1e-3, X(u, v) + rng.uniform(-0.1, 0.1)));
        const auto Y = shortest_distance_digraph(pert);
        const double d = network_distance(X, Y, NetworkDistanceKind::l1_bij).value;
        const auto dx = wl_diagram(X, 1);
        const auto dy = wl_diagram(Y, 1);
        for (int k = 0; k <= 1; ++k)
            if (!(bottleneck_distance(dx, dy, k) <= 2 * d + 1e-9)) {
                why = "bijective stability bound violated on trial " + std::to_string(trial);
                return false;
            }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int nx = rng.uniform_int(2, 5);
        const int ny = rng.uniform_int(2, 5);
        const auto X = random_complete_network(rng, nx);
        const auto Y = random_complete_network(rng, ny);
        const double d = network_distance(X, Y, NetworkDistanceKind::l1_map).value;
        const double M = std::max(nx, ny);
        const auto dx = wl_diagram(X, 1);
        const auto dy = wl_diagram(Y, 1);
        for (int k = 0; k <= 1; ++k)
            if (!(bottleneck_distance(dx, dy, k) <= 2 * M * d + 1e-9)) {
                why = "size-factor stability bound violated on trial " + std::to_string(trial);
                return false;
            }
    }
    return true;
}

// --- criterion 7: persistence correctness -----------------------------------

FilteredComplex random_monotone_complex(Rng& rng, int n) {
    WeightedDigraph net(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) net.set(u, v, rng.uniform(0.05, 2.0));
    auto fc = dowker_sink_filtration(net, 1);
    std::set<std::pair<std::uint32_t, std::uint32_t>> dropped;
    for (auto& cell : fc.cells) {
        if (cell.simplex.dim() == 1 && rng.uniform01() < 0.15) {
            dropped.insert({cell.simplex[0], cell.simplex[1]});
            cell.value = kInf;
        }
        if (cell.simplex.dim() == 2) {
            bool gone = false;
            for (int a = 0; a < 3 && !gone; ++a)
                for (int b = a + 1; b < 3 && !gone; ++b)
                    gone = dropped.count({cell.simplex[a], cell.simplex[b]}) > 0;
            cell.value = gone ? kInf : cell.value + rng.uniform(0.0, 0.5);
        }
    }
    return fc;
}

bool persistence_correctness(std::string& why) {
    Rng rng(161803);
    for (int trial = 0; trial < 100; ++trial) {
        const auto fc = random_monotone_complex(rng, rng.uniform_int(3, 8));
        const auto dgm = compute_persistence(fc, 1);
        std::set<double> deltas;
        for (const auto& cell : fc.cells)
            if (std::isfinite(cell.value)) deltas.insert(cell.value);
        for (const double delta : deltas)
            for (int dim = 0; dim <= 1; ++dim) {
                int alive = 0;
                for (const auto& p : dgm.at_dim(dim))
                    if (p.birth <= delta && delta < p.death) ++alive;
                if (betti_oracle(fc, delta, dim) != alive) {
                    why = "diagram does not match the betti oracle on trial " + std::to_string(trial);
                    return false;
                }
            }
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto net = random_complete_network(rng, rng.uniform_int(3, 7));
        const auto sink = compute_persistence(dowker_sink_filtration(net, 1), 1);
        const auto source = compute_persistence(dowker_source_filtration(net, 1), 1);
        for (int dim = 0; dim <= 1; ++dim)
            if (points_at(sink, dim) != points_at(source, dim)) {
                why = "Dowker sink and source diagrams differ on trial " + std::to_string(trial);
                return false;
            }
    }
    return true;
}

// --- criteria 8 and 10: desk-scale experiment and determinism ---------------

double combo_accuracy(const ClassifyReport& report, Backend backend, PreprocessMode mode) {
    for (const auto& combo : report.combos)
        if (combo.backend == backend && combo.mode == mode) return combo.knn.accuracy;
    throw std::runtime_error("combination missing from the report");
}

ExperimentConfig acceptance_config() {
    ExperimentConfig cfg = desk_profile();
    cfg.root_seed = kExperimentSeed;
    return cfg;
}

fs::path run_dir(int which) {
    return fs::temp_directory_path() / ("walklen_acceptance_run" + std::to_string(which));
}

ClassifyReport g_report_run1; // reused by criterion 10

bool desk_experiment(std::string& why) {
    const auto dir = run_dir(1);
    fs::remove_all(dir);
    const auto cfg = acceptance_config();
    run_simulate(cfg, dir.string());
    g_report_run1 = run_classify(dir.string());

    bool ok = check(g_report_run1.combos.size() == cfg.backends.size() * cfg.modes.size(), why,
                    "not all backend x mode combinations completed");
    const double wl_purge = combo_accuracy(g_report_run1, Backend::walk_length, PreprocessMode::purge);
    const double rips_raw = combo_accuracy(g_report_run1, Backend::rips_min, PreprocessMode::raw);
    ok &= check(wl_purge > 0.2, why,
                "walk-length+purge accuracy " + std::to_string(wl_purge) + " does not beat chance");
    ok &= check(wl_purge >= rips_raw, why, "walk-length+purge accuracy " + std::to_string(wl_purge) +
                                               " below rips_min+raw " + std::to_string(rips_raw));
    return ok;
}

std::string file_bytes(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool determinism(std::string& why) {
    const auto dir1 = run_dir(1);
    const auto dir2 = run_dir(2);
    fs::remove_all(dir2);
    const auto cfg = acceptance_config();
    run_simulate(cfg, dir2.string());
    const auto report2 = run_classify(dir2.string());

    // diagrams and distance matrices must agree byte for byte
    std::vector<fs::path> rel;
    for (const auto& entry : fs::recursive_directory_iterator(dir1)) {
        if (!entry.is_regular_file()) continue;
        const auto name = entry.path().filename().string();
        if (name.rfind("diagram_", 0) == 0 || name.rfind("distances_", 0) == 0)
            rel.push_back(fs::relative(entry.path(), dir1));
    }
    if (rel.empty()) {
        why = "first run produced no artifacts";
        return false;
    }
    for (const auto& r : rel)
        if (file_bytes(dir1 / r) != file_bytes(dir2 / r)) {
            why = "artifact differs between runs: " + r.string();
            return false;
        }
    for (const auto& combo : g_report_run1.combos) {
        const double again = combo_accuracy(report2, combo.backend, combo.mode);
        if (again != combo.knn.accuracy) {
            why = "accuracy differs between runs for " + to_string(combo.backend) + "+" + to_string(combo.mode);
            return false;
        }
    }
    return true;
}

// --- criterion 9: binomial-sum bound ----------------------------------------

bool binomial_bound(std::string& why) {
    const int N_MAX = 60;
    const BinomialTable binom(N_MAX, N_MAX);
    for (int N = 1; N <= N_MAX; ++N)
        for (int K = 0; 2 * K < N + 1; ++K) {
            unsigned __int128 lhs = 0;
            for (int i = 0; i <= K; ++i) lhs += binom(N, i);
            const unsigned __int128 rhs = binom(N, K);
            if (!(lhs * static_cast<unsigned>(N - 2 * K + 1) <= rhs * static_cast<unsigned>(N - K + 1))) {
                why = "bound fails at N=" + std::to_string(N) + ", K=" + std::to_string(K);
                return false;
            }
        }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "cycle golden tests (n = 3..10)", 1.0, cycle_golden},
        {2, "modified-cycle golden tests (n = 3..10)", 1.0, modified_cycle_golden},
        {3, "oracle equivalence on 200 random digraphs", 30.0, oracle_equivalence},
        {4, "counterexample reproduction (fig3/fig4 fixtures)", 60.0, counterexamples},
        {5, "non-stability witness (fig2 fixtures)", 60.0, non_stability},
        {6, "stability bounds, 100 random trials each", 300.0, stability_suites},
        {7, "persistence matches betti oracle; Dowker duality", 300.0, persistence_correctness},
        {8, "hippocampal experiment at desk scale", 1800.0, desk_experiment},
        {9, "binomial-sum running-time bound (N <= 60)", 60.0, binomial_bound},
        {10, "experiment determinism, bit-for-bit", 1800.0, determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = criterion.body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > criterion.time_limit_seconds) {
            ok = false;
            why = "exceeded the time limit of " + std::to_string(criterion.time_limit_seconds) + " s";
        }
        std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.number,
                    criterion.description.c_str(), seconds, why.empty() ? "" : " -- ", why.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
