#pragma once

#include "walklen/persistence.hpp"

namespace walklen {

// Exact bottleneck distance between the dim-restricted diagrams: minimum over
// diagonal-augmented bijections of the max L-infinity displacement. Returns
// +inf iff the two diagrams have different numbers of points at infinity;
// differences of infinite coordinates count as 0. Computed by binary search
// over the candidate costs with bipartite-matching feasibility tests.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

} // namespace walklen
