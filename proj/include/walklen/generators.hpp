#pragma once

#include <string>

#include "walklen/digraph.hpp"

namespace walklen {

// Shortest-distance closure of the unit-weight directed n-cycle:
// w(x_i, x_j) = (j - i) mod n. Requires n >= 3.
WeightedDigraph make_cycle_network(int n);

// Closure of the modified cycle: edge (x_{n-1}, x_0) carries back_weight
// (>= n-2) and the extra edge (x_0, x_{n-1}) carries weight 1.
WeightedDigraph make_modified_cycle_network(int n, double back_weight);
WeightedDigraph make_modified_cycle_network(int n); // back_weight = n - 2

// Small fixed networks used by the distance counterexamples and the
// non-stability example; graphs given by figure are closed first.
// Names: fig2_X, fig2_Xeps (uses eps), fig3_X, fig3_Y, fig3_Z, fig4_X, fig4_Y.
WeightedDigraph make_paper_fixture(const std::string& name, double eps = 0.1);

} // namespace walklen
