#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "walklen/combinatorics.hpp"
#include "walklen/digraph.hpp"

namespace walklen {

// Simplicial complex on vertices 0..n-1 with real filtration values, holding
// all simplices up to max_dim. Cells are grouped by ascending dimension and
// listed in colexicographic order within each dimension. +inf values are kept
// for diagnostics but excluded from persistence input.
struct FilteredComplex {
    struct Cell {
        Simplex simplex;
        double value = 0.0;
        std::uint64_t colex_rank = 0;       // rank within its dimension
        std::int32_t walk_start = -1;       // start/end of a realizing minimal
        std::int32_t walk_end = -1;         // walk (walk-length only)
    };

    int n_vertices = 0;
    int max_dim = 0;
    bool has_walk_endpoints = false;
    std::vector<Cell> cells;
};

// Walk-length filtration of a shortest-distance digraph, all simplices up to
// dimension k+1. The caller applies shortest_distance_digraph first (the
// filtration is invariant under that closure, so this loses no generality);
// +inf entries are allowed and propagate to +inf filtration values.
//
// The value of a simplex is the minimum total weight of a walk visiting all
// of its vertices, which for a shortest-distance digraph is realized by an
// ordering of the vertices themselves. Computed by a dynamic program over
// faces that keeps, per simplex, the minimal walk weight for every ordered
// (start, end) vertex pair: extending only a single recorded minimal walk per
// face can miss the optimum when a face has several co-minimal walks with
// different endpoints.
FilteredComplex walk_length_filtration(const WeightedDigraph& g, int k);

// Brute-force reference for the walk-length value of one simplex: minimum
// over all orderings of the vertex set of the left-to-right weight sum.
double walk_length_oracle(const WeightedDigraph& g, std::span<const std::uint32_t> simplex);

// Dowker delta-sink filtration: a simplex enters when some witness vertex x'
// satisfies w(v, x') <= delta for every member v.
FilteredComplex dowker_sink_filtration(const WeightedDigraph& g, int k);

// Dual construction with w(x', v) in place of w(v, x').
FilteredComplex dowker_source_filtration(const WeightedDigraph& g, int k);

// Vietoris-Rips filtration of a symmetric digraph: max pairwise weight.
// Throws NotSymmetricError.
FilteredComplex rips_filtration(const WeightedDigraph& g, int k);

} // namespace walklen
