#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walklen/bottleneck.hpp"
#include "walklen/classify.hpp"
#include "walklen/experiment.hpp"
#include "walklen/filtration.hpp"
#include "walklen/generators.hpp"
#include "walklen/network_distance.hpp"
#include "walklen/persistence.hpp"
#include "walklen/simulate.hpp"

namespace py = pybind11;
using namespace walklen;

namespace {

WeightedDigraph graph_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw std::invalid_argument("expected a square 2D weight matrix");
    const int n = static_cast<int>(a.shape(0));
    std::vector<double> w(a.data(), a.data() + static_cast<std::size_t>(n) * n);
    return WeightedDigraph(n, std::move(w));
}

py::array_t<double> graph_to_array(const WeightedDigraph& g) {
    const int n = g.size();
    py::array_t<double> a({n, n});
    std::copy(g.data().begin(), g.data().end(), a.mutable_data());
    return a;
}

py::array_t<double> matrix_to_array(const std::vector<std::vector<double>>& m) {
    const int n = static_cast<int>(m.size());
    py::array_t<double> a({n, n});
    auto r = a.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return a;
}

std::vector<std::vector<double>> matrix_from_array(
    const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw std::invalid_argument("expected a square 2D matrix");
    const auto n = static_cast<std::size_t>(a.shape(0));
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    auto r = a.unchecked<2>();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = r(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
    return m;
}

// Diagrams cross the boundary as (m, 3) float arrays: dim, birth, death.
py::array_t<double> diagram_to_array(const PersistenceDiagram& dgm) {
    py::array_t<double> a({static_cast<py::ssize_t>(dgm.points.size()), py::ssize_t{3}});
    auto r = a.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < static_cast<py::ssize_t>(dgm.points.size()); ++i) {
        const auto& p = dgm.points[static_cast<std::size_t>(i)];
        r(i, 0) = p.dim;
        r(i, 1) = p.birth;
        r(i, 2) = p.death;
    }
    return a;
}

PersistenceDiagram diagram_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(1) != 3) throw std::invalid_argument("expected an (m, 3) diagram array");
    PersistenceDiagram dgm;
    auto r = a.unchecked<2>();
    for (py::ssize_t i = 0; i < a.shape(0); ++i)
        dgm.points.push_back({static_cast<int>(r(i, 0)), r(i, 1), r(i, 2)});
    return dgm;
}

SymmetrizeMode sym_mode(const std::string& s) {
    if (s == "min") return SymmetrizeMode::min;
    if (s == "max") return SymmetrizeMode::max;
    throw std::invalid_argument("mode must be 'min' or 'max'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Walk-length persistence for weighted directed graphs";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<FilteredComplex>(m, "FilteredComplex")
        .def_readonly("n_vertices", &FilteredComplex::n_vertices)
        .def_readonly("max_dim", &FilteredComplex::max_dim)
        .def("__len__", [](const FilteredComplex& fc) { return fc.cells.size(); })
        .def("cells",
             [](const FilteredComplex& fc) {
                 py::list out;
                 for (const auto& cell : fc.cells) {
                     py::tuple verts(cell.simplex.n_vertices);
                     for (int i = 0; i < cell.simplex.n_vertices; ++i) verts[i] = cell.simplex[i];
                     out.append(py::make_tuple(verts, cell.value));
                 }
                 return out;
             })
        .def("walk_endpoints", [](const FilteredComplex& fc) {
            py::list out;
            for (const auto& cell : fc.cells) out.append(py::make_tuple(cell.walk_start, cell.walk_end));
            return out;
        });

    m.def(
        "validate",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, bool strict) {
            const auto g = graph_from_array(a);
            validate(g, strict ? Validation::strict : Validation::lenient);
            return a;
        },
        py::arg("weights"), py::arg("strict") = true);

    m.def("is_strongly_connected",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
              return is_strongly_connected(graph_from_array(a));
          });

    m.def(
        "shortest_distance",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, bool allow_infinite) {
            return graph_to_array(shortest_distance_digraph(graph_from_array(a), allow_infinite));
        },
        py::arg("weights"), py::arg("allow_infinite") = false);

    m.def(
        "symmetrize",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, const std::string& mode) {
            return graph_to_array(symmetrize(graph_from_array(a), sym_mode(mode)));
        },
        py::arg("weights"), py::arg("mode") = "min");

    m.def(
        "walk_length_filtration",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, int k) {
            return walk_length_filtration(graph_from_array(a), k);
        },
        py::arg("weights"), py::arg("k") = 1,
        "Walk-length filtration of a shortest-distance matrix up to dimension k+1");

    m.def(
        "walk_length_oracle",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
           const std::vector<std::uint32_t>& simplex) {
            return walk_length_oracle(graph_from_array(a), simplex);
        },
        py::arg("weights"), py::arg("simplex"));

    m.def(
        "dowker_sink_filtration",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, int k) {
            return dowker_sink_filtration(graph_from_array(a), k);
        },
        py::arg("weights"), py::arg("k") = 1);

    m.def(
        "dowker_source_filtration",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, int k) {
            return dowker_source_filtration(graph_from_array(a), k);
        },
        py::arg("weights"), py::arg("k") = 1);

    m.def(
        "rips_filtration",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, int k) {
            return rips_filtration(graph_from_array(a), k);
        },
        py::arg("weights"), py::arg("k") = 1);

    m.def(
        "persistence",
        [](const FilteredComplex& fc, int max_hom_dim) {
            return diagram_to_array(compute_persistence(fc, max_hom_dim));
        },
        py::arg("complex"), py::arg("max_hom_dim") = 1,
        "Persistence diagram as an (m, 3) array of (dim, birth, death)");

    m.def(
        "betti",
        [](const FilteredComplex& fc, double delta, int dim) { return betti_oracle(fc, delta, dim); },
        py::arg("complex"), py::arg("delta"), py::arg("dim"));

    m.def(
        "bottleneck_distance",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& b, int dim) {
            return bottleneck_distance(diagram_from_array(a), diagram_from_array(b), dim);
        },
        py::arg("diagram_a"), py::arg("diagram_b"), py::arg("dim") = 1);

    m.def(
        "network_distance",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& x,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& y, const std::string& kind) {
            const auto res =
                network_distance(graph_from_array(x), graph_from_array(y), network_distance_kind_from_string(kind));
            py::dict out;
            out["kind"] = to_string(res.kind);
            out["value"] = res.value;
            out["raw_objective"] = res.raw_objective;
            out["argmin_pairs"] = res.argmin_pairs;
            if (!res.phi.empty()) {
                out["phi"] = res.phi;
                out["psi"] = res.psi;
            }
            return out;
        },
        py::arg("x"), py::arg("y"), py::arg("kind") = "l1",
        "Exact network distance: kind is one of inf, l1, l1_map, l1_bij");

    m.def(
        "distance_matrix",
        [](const std::vector<py::array_t<double, py::array::c_style | py::array::forcecast>>& diagrams, int dim) {
            std::vector<PersistenceDiagram> ds;
            ds.reserve(diagrams.size());
            for (const auto& d : diagrams) ds.push_back(diagram_from_array(d));
            return matrix_to_array(distance_matrix(ds, dim));
        },
        py::arg("diagrams"), py::arg("dim") = 1);

    m.def("cycle_network", [](int n) { return graph_to_array(make_cycle_network(n)); }, py::arg("n"));

    m.def(
        "modified_cycle_network",
        [](int n, std::optional<double> back_weight) {
            return graph_to_array(back_weight ? make_modified_cycle_network(n, *back_weight)
                                              : make_modified_cycle_network(n));
        },
        py::arg("n"), py::arg("back_weight") = py::none());

    m.def(
        "paper_fixture",
        [](const std::string& name, double eps) { return graph_to_array(make_paper_fixture(name, eps)); },
        py::arg("name"), py::arg("eps") = 0.1);

    m.def(
        "preprocess",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, const std::string& mode) {
            return graph_to_array(preprocess(graph_from_array(a), preprocess_mode_from_string(mode)));
        },
        py::arg("weights"), py::arg("mode"));

    m.def(
        "simulate_trial",
        [](double L, double step_fraction, int n_steps, int n_holes, double place_field_radius_fraction,
           int n_cells_min, int n_cells_max, int time_window, std::uint64_t seed) {
            ArenaConfig cfg;
            cfg.side_length = L;
            cfg.step_fraction = step_fraction;
            cfg.n_steps = n_steps;
            cfg.n_holes = n_holes;
            cfg.place_field_radius_fraction = place_field_radius_fraction;
            cfg.n_cells_min = n_cells_min;
            cfg.n_cells_max = n_cells_max;
            cfg.time_window = time_window;
            cfg.rng_seed = seed;
            const auto trial = simulate_trial(cfg);

            py::dict out;
            out["label"] = trial.label;
            py::array_t<std::uint8_t> spikes({trial.n_cells, trial.n_steps});
            std::copy(trial.spikes.begin(), trial.spikes.end(), spikes.mutable_data());
            out["spikes"] = spikes;
            out["network"] = graph_to_array(trial.network);
            py::array_t<double> centers({static_cast<py::ssize_t>(trial.place_field_centers.size()), py::ssize_t{2}});
            auto c = centers.mutable_unchecked<2>();
            for (py::ssize_t i = 0; i < centers.shape(0); ++i) {
                c(i, 0) = trial.place_field_centers[static_cast<std::size_t>(i)][0];
                c(i, 1) = trial.place_field_centers[static_cast<std::size_t>(i)][1];
            }
            out["place_field_centers"] = centers;
            return out;
        },
        py::arg("L") = 10.0, py::arg("step_fraction") = 0.05, py::arg("n_steps") = 5000, py::arg("n_holes") = 0,
        py::arg("place_field_radius_fraction") = 0.05, py::arg("n_cells_min") = 150, py::arg("n_cells_max") = 200,
        py::arg("time_window") = 5, py::arg("seed") = 0);

    m.def(
        "knn_classify",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& dm, const std::vector<int>& labels,
           int k) {
            const auto report = knn_classify(matrix_from_array(dm), labels, k);
            py::array_t<int> confusion({py::ssize_t{5}, py::ssize_t{5}});
            auto c = confusion.mutable_unchecked<2>();
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    c(i, j) = report.confusion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            return py::make_tuple(report.accuracy, confusion, report.predictions);
        },
        py::arg("distance_matrix"), py::arg("labels"), py::arg("k") = 4,
        "Leave-one-out knn; returns (accuracy, confusion, predictions)");

    m.def(
        "single_linkage",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& dm, double threshold) {
            const auto res = single_linkage(matrix_from_array(dm), threshold);
            py::list merges;
            for (const auto& mg : res.merges)
                merges.append(py::make_tuple(mg.step, mg.cluster_a, mg.cluster_b, mg.distance));
            return py::make_tuple(res.labels, merges);
        },
        py::arg("distance_matrix"), py::arg("threshold"),
        "Single-linkage clustering; returns (labels, merges)");
}
