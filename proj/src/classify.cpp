#include "walklen/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace walklen {

namespace {

void check_square(const std::vector<std::vector<double>>& dm, std::size_t n) {
    if (dm.size() != n) throw DomainError("distance matrix does not match label count");
    for (const auto& row : dm)
        if (row.size() != n) throw DomainError("distance matrix is not square");
}

} // namespace

KnnReport knn_classify(const std::vector<std::vector<double>>& dm, const std::vector<int>& labels, int k) {
    const std::size_t n = labels.size();
    check_square(dm, n);
    if (k < 1) throw DomainError("k must be positive");
    if (n < static_cast<std::size_t>(k) + 1)
        throw DomainError("need at least k + 1 trials for leave-one-out classification");
    for (const int l : labels)
        if (l < 0 || l > 4) throw DomainError("labels must lie in 0..4");

    KnnReport report;
    report.predictions.resize(n);
    int correct = 0;
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < n; ++i) {
        order.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) order.emplace_back(dm[i][j], j);
        std::sort(order.begin(), order.end());

        std::array<int, 5> votes{};
        for (int t = 0; t < k; ++t) ++votes[static_cast<std::size_t>(labels[order[static_cast<std::size_t>(t)].second])];
        int best_label = 0, best_votes = -1;
        bool tie = false;
        for (int l = 0; l < 5; ++l) {
            if (votes[static_cast<std::size_t>(l)] > best_votes) {
                best_votes = votes[static_cast<std::size_t>(l)];
                best_label = l;
                tie = false;
            } else if (votes[static_cast<std::size_t>(l)] == best_votes) {
                tie = true;
            }
        }
        const int pred = tie ? labels[order[0].second] : best_label;
        report.predictions[i] = pred;
        if (pred == labels[i]) ++correct;
        ++report.confusion[static_cast<std::size_t>(labels[i])][static_cast<std::size_t>(pred)];
    }
    report.accuracy = static_cast<double>(correct) / static_cast<double>(n);
    return report;
}

LinkageResult single_linkage(const std::vector<std::vector<double>>& dm, double threshold) {
    const std::size_t n = dm.size();
    check_square(dm, n);

    LinkageResult res;
    res.labels.assign(n, 0);
    if (n == 0) return res;

    // Active cluster list with single-linkage distance updates.
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<double>> d = dm;
    std::vector<char> alive(n, 1);
    std::vector<int> members_root(n); // union-find over original points for labels
    std::iota(members_root.begin(), members_root.end(), 0);
    const std::function<int(int)> find = [&](int x) {
        while (members_root[static_cast<std::size_t>(x)] != x) {
            members_root[static_cast<std::size_t>(x)] =
                members_root[static_cast<std::size_t>(members_root[static_cast<std::size_t>(x)])];
            x = members_root[static_cast<std::size_t>(x)];
        }
        return x;
    };

    for (int step = 0;; ++step) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t ba = 0, bb = 0;
        bool found = false;
        for (std::size_t a = 0; a < n; ++a) {
            if (!alive[a]) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (!alive[b]) continue;
                if (d[a][b] < best) {
                    best = d[a][b];
                    ba = a;
                    bb = b;
                    found = true;
                }
            }
        }
        if (!found || std::isinf(best)) break;

        const int ca = std::min(id[ba], id[bb]);
        const int cb = std::max(id[ba], id[bb]);
        res.merges.push_back({step, ca, cb, best});
        if (best <= threshold) {
            // record the cut: union the original-point components
            const int root_a = find(static_cast<int>(ba));
            const int root_b = find(static_cast<int>(bb));
            members_root[static_cast<std::size_t>(std::max(root_a, root_b))] = std::min(root_a, root_b);
        }
        // merged cluster lives in slot ba with a fresh id
        id[ba] = static_cast<int>(n) + step;
        alive[bb] = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!alive[c] || c == ba) continue;
            const double nd = std::min(d[ba][c], d[bb][c]);
            d[ba][c] = nd;
            d[c][ba] = nd;
        }
    }

    // Components at the threshold, numbered by smallest member.
    std::vector<int> canon(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int r = find(static_cast<int>(i));
        if (canon[static_cast<std::size_t>(r)] < 0) canon[static_cast<std::size_t>(r)] = next++;
        res.labels[i] = canon[static_cast<std::size_t>(r)];
    }
    return res;
}

} // namespace walklen
