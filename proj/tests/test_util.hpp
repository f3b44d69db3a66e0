#pragma once

#include <cmath>
#include <vector>

#include "walklen/digraph.hpp"
#include "walklen/rng.hpp"

namespace walklen::test {

inline constexpr double kTol = 1e-9;

// Absolute-tolerance comparison; all float assertions in the suites use 1e-9
// unless a tighter bound is exact.
inline bool approx(double a, double b, double tol = kTol) { return std::abs(a - b) <= tol; }

// Three-vertex strongly connected digraph: a->b=1, b->c=1, c->a=1, b->a=10.
inline WeightedDigraph triangle_digraph() {
    WeightedDigraph g(3);
    g.set(0, 1, 1.0);
    g.set(1, 2, 1.0);
    g.set(2, 0, 1.0);
    g.set(1, 0, 10.0);
    return g;
}

// Its shortest-distance closure: cyclic direction 1, reverse direction 2.
inline WeightedDigraph triangle_closure() {
    WeightedDigraph g(3);
    g.set(0, 1, 1.0);
    g.set(1, 2, 1.0);
    g.set(2, 0, 1.0);
    g.set(1, 0, 2.0);
    g.set(2, 1, 2.0);
    g.set(0, 2, 2.0);
    return g;
}

// Random strongly connected digraph: a random ring plus extra random edges.
// Integer weights exercise ties; fractional ones exercise generic values.
inline WeightedDigraph random_strongly_connected(Rng& rng, int n, bool integer_weights) {
    WeightedDigraph g(n);
    std::vector<int> ring(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ring[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(ring[static_cast<std::size_t>(i)],
                                              ring[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    const auto weight = [&] {
        return integer_weights ? static_cast<double>(rng.uniform_int(1, 6)) : rng.uniform(0.1, 6.0);
    };
    for (int i = 0; i < n; ++i)
        g.set(ring[static_cast<std::size_t>(i)], ring[static_cast<std::size_t>((i + 1) % n)], weight());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.uniform01() < 0.5) {
                const double w = weight();
                if (w < g(u, v)) g.set(u, v, w);
            }
    return g;
}

// Random complete network with continuous weights.
inline WeightedDigraph random_complete_network(Rng& rng, int n, double lo = 0.1, double hi = 3.0) {
    WeightedDigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.set(u, v, rng.uniform(lo, hi));
    return g;
}

// Bellman-Ford all-pairs oracle, independent of the Floyd-Warshall path.
inline std::vector<std::vector<double>> bellman_ford_all_pairs(const WeightedDigraph& g) {
    const int n = g.size();
    std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), kInf));
    for (int s = 0; s < n; ++s) {
        auto& row = d[static_cast<std::size_t>(s)];
        row[static_cast<std::size_t>(s)] = 0.0;
        for (int round = 0; round < n; ++round)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v || !std::isfinite(g(u, v))) continue;
                    const double cand = row[static_cast<std::size_t>(u)] + g(u, v);
                    if (cand < row[static_cast<std::size_t>(v)]) row[static_cast<std::size_t>(v)] = cand;
                }
    }
    return d;
}

} // namespace walklen::test
