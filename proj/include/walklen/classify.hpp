#pragma once

#include <array>
#include <vector>

#include "walklen/errors.hpp"

namespace walklen {

struct KnnReport {
    double accuracy = 0.0;
    std::array<std::array<int, 5>, 5> confusion{}; // [true label][predicted]
    std::vector<int> predictions;
};

// Leave-one-out k-nearest-neighbor classification on a distance matrix.
// +inf entries sort after every finite distance; a vote tie falls back to the
// single nearest neighbor's label. Labels must lie in 0..4.
KnnReport knn_classify(const std::vector<std::vector<double>>& dm, const std::vector<int>& labels, int k = 4);

struct LinkageMerge {
    int step;
    int cluster_a; // clusters 0..n-1 are the original points; merge m creates n+m
    int cluster_b;
    double distance;
};

struct LinkageResult {
    std::vector<LinkageMerge> merges;
    std::vector<int> labels; // cluster index per point at the given threshold
};

// Single-linkage agglomeration; merges stop at +inf separation. Labels cut
// the dendrogram at distance <= threshold and are numbered by each cluster's
// smallest member.
LinkageResult single_linkage(const std::vector<std::vector<double>>& dm, double threshold);

} // namespace walklen
