#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "walklen/errors.hpp"

namespace walklen {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Weighted digraph on vertices 0..n-1 stored as a dense n-by-n matrix of
// extended non-negative reals. Absent edges are +inf, the diagonal is 0.
// A "network" is the special case where every off-diagonal entry is finite.
class WeightedDigraph {
public:
    WeightedDigraph() = default;

    // Edgeless digraph: diagonal 0, all off-diagonal entries +inf.
    explicit WeightedDigraph(int n) : n_(n), w_(static_cast<std::size_t>(n) * n, kInf) {
        for (int v = 0; v < n; ++v) w_[idx(v, v)] = 0.0;
    }

    // Row-major weight matrix; weights.size() must equal n*n.
    WeightedDigraph(int n, std::vector<double> weights);

    int size() const { return n_; }

    double operator()(int u, int v) const { return w_[idx(u, v)]; }
    void set(int u, int v, double w) { w_[idx(u, v)] = w; }

    const std::vector<double>& data() const { return w_; }

    bool is_symmetric() const;

    // True iff every off-diagonal entry is finite.
    bool is_complete() const;

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<double> w_;
};

// Vertex sequence where every consecutive pair must be a finite-weight edge.
struct Walk {
    std::vector<int> vertices;
};

enum class Validation {
    strict,  // off-diagonal weights must be strictly positive
    lenient, // zero off-diagonal weights emit a warning on stderr (experiment data)
};

// Checks the digraph invariants and returns the input unchanged.
// Throws NegativeWeightError / NonzeroDiagonalError / ZeroOffDiagonalError
// naming the offending entry.
const WeightedDigraph& validate(const WeightedDigraph& g, Validation mode = Validation::strict);

// Sum of edge weights along the walk; a single-vertex walk has weight 0.
// Throws InvalidWalkError if a consecutive pair is not an edge.
double walk_weight(const WeightedDigraph& g, const Walk& walk);

bool is_strongly_connected(const WeightedDigraph& g);

// All-pairs minimal walk weights (Floyd-Warshall). In strict mode an
// unreachable pair raises NotStronglyConnectedError; with allow_infinite the
// output keeps +inf entries (purged experiment networks need this).
WeightedDigraph shortest_distance_digraph(const WeightedDigraph& g, bool allow_infinite = false);

enum class SymmetrizeMode { min, max };

WeightedDigraph symmetrize(const WeightedDigraph& g, SymmetrizeMode mode);

WeightedDigraph transpose(const WeightedDigraph& g);

} // namespace walklen
