#include "walklen/digraph.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace walklen {

WeightedDigraph::WeightedDigraph(int n, std::vector<double> weights) : n_(n), w_(std::move(weights)) {
    if (w_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("weight matrix size does not match vertex count");
}

bool WeightedDigraph::is_symmetric() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (w_[idx(u, v)] != w_[idx(v, u)]) return false;
    return true;
}

bool WeightedDigraph::is_complete() const {
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v && !std::isfinite(w_[idx(u, v)])) return false;
    return true;
}

namespace {

std::string entry(int u, int v, double w) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ") = " + std::to_string(w);
}

} // namespace

const WeightedDigraph& validate(const WeightedDigraph& g, Validation mode) {
    const int n = g.size();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const double w = g(u, v);
            if (std::isnan(w)) throw DomainError("weight is NaN at " + entry(u, v, w));
            if (u == v) {
                if (w != 0.0) throw NonzeroDiagonalError("nonzero diagonal weight at " + entry(u, v, w));
            } else {
                if (w < 0.0) throw NegativeWeightError("negative weight at " + entry(u, v, w));
                if (w == 0.0) {
                    if (mode == Validation::strict)
                        throw ZeroOffDiagonalError("zero off-diagonal weight at " + entry(u, v, w));
                    std::cerr << "walklen: warning: zero off-diagonal weight at " << entry(u, v, w) << "\n";
                }
            }
        }
    }
    return g;
}

double walk_weight(const WeightedDigraph& g, const Walk& walk) {
    if (walk.vertices.empty()) throw InvalidWalkError("walk is empty");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
        const double w = g(walk.vertices[i], walk.vertices[i + 1]);
        if (!std::isfinite(w))
            throw InvalidWalkError("walk uses absent edge (" + std::to_string(walk.vertices[i]) + "," +
                                   std::to_string(walk.vertices[i + 1]) + ")");
        total += w;
    }
    return total;
}

namespace {

// Reachability over finite-weight edges from a start vertex, optionally on
// the transposed graph.
std::vector<char> reach(const WeightedDigraph& g, int start, bool reversed) {
    const int n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            const double w = reversed ? g(v, u) : g(u, v);
            if (std::isfinite(w)) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

} // namespace

bool is_strongly_connected(const WeightedDigraph& g) {
    const int n = g.size();
    if (n <= 1) return true;
    const auto fwd = reach(g, 0, false);
    const auto bwd = reach(g, 0, true);
    for (int v = 0; v < n; ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

WeightedDigraph shortest_distance_digraph(const WeightedDigraph& g, bool allow_infinite) {
    const int n = g.size();
    std::vector<double> d = g.data();
    const auto at = [&](int u, int v) -> double& { return d[static_cast<std::size_t>(u) * n + v]; };
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const double dik = at(i, k);
            if (!std::isfinite(dik)) continue;
            for (int j = 0; j < n; ++j) {
                const double via = dik + at(k, j);
                if (via < at(i, j)) at(i, j) = via;
            }
        }
    if (!allow_infinite) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (!std::isfinite(at(u, v)))
                    throw NotStronglyConnectedError("no walk from vertex " + std::to_string(u) + " to vertex " +
                                                    std::to_string(v));
    }
    return WeightedDigraph(n, std::move(d));
}

WeightedDigraph symmetrize(const WeightedDigraph& g, SymmetrizeMode mode) {
    const int n = g.size();
    WeightedDigraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double w =
                mode == SymmetrizeMode::min ? std::min(g(u, v), g(v, u)) : std::max(g(u, v), g(v, u));
            out.set(u, v, w);
            out.set(v, u, w);
        }
    return out;
}

WeightedDigraph transpose(const WeightedDigraph& g) {
    const int n = g.size();
    WeightedDigraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) out.set(u, v, g(v, u));
    return out;
}

} // namespace walklen
