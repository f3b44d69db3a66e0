#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "walklen/digraph.hpp"
#include "walklen/persistence.hpp"

namespace walklen {

// Nonempty set of vertex-index pairs between two networks X and Y.
struct Relation {
    std::vector<std::pair<int, int>> pairs;
};

bool is_correspondence(const Relation& r, int nx, int ny);
bool is_bijection(const Relation& r, int nx, int ny);

// Pair of total maps phi: X -> Y and psi: Y -> X on vertex indices.
struct VertexMapPair {
    std::vector<int> phi;
    std::vector<int> psi;
};

// max over ordered pairs of relation elements of |w_X(x,x') - w_Y(y,y')|.
double dis_inf(const Relation& r, const WeightedDigraph& X, const WeightedDigraph& Y);
// sum over ordered pairs of relation elements (self-pairs contribute 0).
double dis_1(const Relation& r, const WeightedDigraph& X, const WeightedDigraph& Y);

// Distortion of a single map phi: X -> Y over ordered vertex pairs of X.
double dis_inf(const std::vector<int>& phi, const WeightedDigraph& X, const WeightedDigraph& Y);
double dis_1(const std::vector<int>& phi, const WeightedDigraph& X, const WeightedDigraph& Y);

// Codistortion over X x Y: |w_X(x, psi(y)) - w_Y(phi(x), y)|.
double codis_inf(const VertexMapPair& m, const WeightedDigraph& X, const WeightedDigraph& Y);
double codis_1(const VertexMapPair& m, const WeightedDigraph& X, const WeightedDigraph& Y);

enum class NetworkDistanceKind { inf, l1, l1_map, l1_bij };

std::string to_string(NetworkDistanceKind kind);
NetworkDistanceKind network_distance_kind_from_string(const std::string& s);

struct NetworkDistanceResult {
    NetworkDistanceKind kind;
    double value;         // half of the minimized objective
    double raw_objective; // the minimized objective itself
    std::vector<std::pair<int, int>> argmin_pairs;
    // For l1_map only: the minimizing maps (phi[x] in Y, psi[y] in X).
    std::vector<int> phi, psi;
};

// Exact minimization of the respective distortion objective by exhaustive
// search. Search spaces: all correspondences (inf, l1; |X|*|Y| <= 16), all
// map pairs (l1_map; |Y|^|X| * |X|^|Y| <= 1e7), all bijections (l1_bij;
// |X| = |Y| <= 8). Throws SizeMismatchError / SearchSpaceTooLargeError.
NetworkDistanceResult network_distance(const WeightedDigraph& X, const WeightedDigraph& Y,
                                       NetworkDistanceKind kind);

// Symmetric matrix of pairwise bottleneck distances at the given dimension.
std::vector<std::vector<double>> distance_matrix(const std::vector<PersistenceDiagram>& diagrams, int dim);

} // namespace walklen
