#pragma once

#include <vector>

#include "walklen/filtration.hpp"

namespace walklen {

// Multiset of (dimension, birth, death) with death possibly +inf. Births are
// finite and birth < death for every stored point (zero-persistence pairs are
// dropped). Intervals carry half-open [birth, death) semantics.
struct PersistenceDiagram {
    struct Point {
        int dim;
        double birth;
        double death;
    };

    std::vector<Point> points;

    std::vector<Point> at_dim(int dim) const;
    int n_infinite(int dim) const;
};

// Persistent homology over the two-element field by boundary-matrix column
// reduction with the clearing optimization. Simplices with +inf filtration
// value are excluded from the matrix; unpaired positive simplices of
// dimension <= max_hom_dim become points at infinity.
// Requires max_hom_dim + 1 <= fc.max_dim and a monotone filtration
// (NonMonotoneFiltrationError otherwise).
PersistenceDiagram compute_persistence(const FilteredComplex& fc, int max_hom_dim);

// Betti number of the sublevel complex at delta, computed by dense GF(2) rank
// of the full boundary matrices. Independent of any reduction order; used to
// cross-check compute_persistence via
//   betti(delta, dim) == #{points with birth <= delta < death}.
int betti_oracle(const FilteredComplex& fc, double delta, int dim);

} // namespace walklen
