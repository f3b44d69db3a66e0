#include "walklen/network_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "walklen/bottleneck.hpp"
#include "walklen/parallel.hpp"

namespace walklen {

bool is_correspondence(const Relation& r, int nx, int ny) {
    std::vector<char> sx(static_cast<std::size_t>(nx), 0), sy(static_cast<std::size_t>(ny), 0);
    for (const auto& [x, y] : r.pairs) {
        sx[static_cast<std::size_t>(x)] = 1;
        sy[static_cast<std::size_t>(y)] = 1;
    }
    return !r.pairs.empty() && std::find(sx.begin(), sx.end(), 0) == sx.end() &&
           std::find(sy.begin(), sy.end(), 0) == sy.end();
}

bool is_bijection(const Relation& r, int nx, int ny) {
    if (nx != ny || static_cast<int>(r.pairs.size()) != nx) return false;
    std::vector<int> cx(static_cast<std::size_t>(nx), 0), cy(static_cast<std::size_t>(ny), 0);
    for (const auto& [x, y] : r.pairs) {
        ++cx[static_cast<std::size_t>(x)];
        ++cy[static_cast<std::size_t>(y)];
    }
    return std::all_of(cx.begin(), cx.end(), [](int c) { return c == 1; }) &&
           std::all_of(cy.begin(), cy.end(), [](int c) { return c == 1; });
}

namespace {

void require_nonempty(const Relation& r) {
    if (r.pairs.empty()) throw EmptyRelationError("relation is empty");
}

} // namespace

double dis_inf(const Relation& r, const WeightedDigraph& X, const WeightedDigraph& Y) {
    require_nonempty(r);
    double m = 0.0;
    for (const auto& [x, y] : r.pairs)
        for (const auto& [x2, y2] : r.pairs) m = std::max(m, std::abs(X(x, x2) - Y(y, y2)));
    return m;
}

double dis_1(const Relation& r, const WeightedDigraph& X, const WeightedDigraph& Y) {
    require_nonempty(r);
    double s = 0.0;
    for (const auto& [x, y] : r.pairs)
        for (const auto& [x2, y2] : r.pairs) s += std::abs(X(x, x2) - Y(y, y2));
    return s;
}

double dis_inf(const std::vector<int>& phi, const WeightedDigraph& X, const WeightedDigraph& Y) {
    double m = 0.0;
    for (std::size_t x = 0; x < phi.size(); ++x)
        for (std::size_t x2 = 0; x2 < phi.size(); ++x2)
            m = std::max(m, std::abs(X(static_cast<int>(x), static_cast<int>(x2)) - Y(phi[x], phi[x2])));
    return m;
}

double dis_1(const std::vector<int>& phi, const WeightedDigraph& X, const WeightedDigraph& Y) {
    double s = 0.0;
    for (std::size_t x = 0; x < phi.size(); ++x)
        for (std::size_t x2 = 0; x2 < phi.size(); ++x2)
            s += std::abs(X(static_cast<int>(x), static_cast<int>(x2)) - Y(phi[x], phi[x2]));
    return s;
}

double codis_inf(const VertexMapPair& m, const WeightedDigraph& X, const WeightedDigraph& Y) {
    double v = 0.0;
    for (std::size_t x = 0; x < m.phi.size(); ++x)
        for (std::size_t y = 0; y < m.psi.size(); ++y)
            v = std::max(v, std::abs(X(static_cast<int>(x), m.psi[y]) - Y(m.phi[x], static_cast<int>(y))));
    return v;
}

double codis_1(const VertexMapPair& m, const WeightedDigraph& X, const WeightedDigraph& Y) {
    double s = 0.0;
    for (std::size_t x = 0; x < m.phi.size(); ++x)
        for (std::size_t y = 0; y < m.psi.size(); ++y)
            s += std::abs(X(static_cast<int>(x), m.psi[y]) - Y(m.phi[x], static_cast<int>(y)));
    return s;
}

std::string to_string(NetworkDistanceKind kind) {
    switch (kind) {
        case NetworkDistanceKind::inf: return "inf";
        case NetworkDistanceKind::l1: return "l1";
        case NetworkDistanceKind::l1_map: return "l1_map";
        case NetworkDistanceKind::l1_bij: return "l1_bij";
    }
    return "?";
}

NetworkDistanceKind network_distance_kind_from_string(const std::string& s) {
    if (s == "inf") return NetworkDistanceKind::inf;
    if (s == "l1") return NetworkDistanceKind::l1;
    if (s == "l1_map") return NetworkDistanceKind::l1_map;
    if (s == "l1_bij") return NetworkDistanceKind::l1_bij;
    throw DomainError("unknown network distance kind: " + s);
}

namespace {

// Exhaustive search over all correspondences as bitmasks over X x Y.
NetworkDistanceResult correspondence_search(const WeightedDigraph& X, const WeightedDigraph& Y, bool use_l1) {
    const int nx = X.size(), ny = Y.size();
    const int bits = nx * ny;
    if (bits > 16)
        throw SearchSpaceTooLargeError("correspondence enumeration needs |X|*|Y| <= 16, got " +
                                       std::to_string(bits));

    // Per ordered pair of candidate relation elements p=(x,y), q=(x2,y2):
    // cost contribution |w_X(x,x2) - w_Y(y,y2)|, pre-folded for unordered use.
    std::vector<double> sum_cost(static_cast<std::size_t>(bits) * bits, 0.0);
    std::vector<double> max_cost(static_cast<std::size_t>(bits) * bits, 0.0);
    for (int p = 0; p < bits; ++p)
        for (int q = 0; q < bits; ++q) {
            const int x = p / ny, y = p % ny, x2 = q / ny, y2 = q % ny;
            const double fwd = std::abs(X(x, x2) - Y(y, y2));
            const double bwd = std::abs(X(x2, x) - Y(y2, y));
            sum_cost[static_cast<std::size_t>(p) * bits + q] = fwd + bwd;
            max_cost[static_cast<std::size_t>(p) * bits + q] = std::max(fwd, bwd);
        }

    std::vector<std::uint32_t> row_mask(static_cast<std::size_t>(nx), 0), col_mask(static_cast<std::size_t>(ny), 0);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) row_mask[static_cast<std::size_t>(x)] |= std::uint32_t{1} << (x * ny + y);
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) col_mask[static_cast<std::size_t>(y)] |= std::uint32_t{1} << (x * ny + y);

    double best = kInf;
    std::uint32_t best_mask = 0;
    std::vector<int> members;
    const std::uint32_t limit = (std::uint32_t{1} << bits) - 1;
    for (std::uint32_t mask = 1; mask <= limit; ++mask) {
        bool surjective = true;
        for (int x = 0; x < nx && surjective; ++x) surjective = (mask & row_mask[static_cast<std::size_t>(x)]) != 0;
        for (int y = 0; y < ny && surjective; ++y) surjective = (mask & col_mask[static_cast<std::size_t>(y)]) != 0;
        if (!surjective) continue;

        members.clear();
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) members.push_back(b);

        double obj = 0.0;
        if (use_l1) {
            for (std::size_t i = 0; i < members.size() && obj < best; ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    obj += sum_cost[static_cast<std::size_t>(members[i]) * bits + members[j]];
        } else {
            for (std::size_t i = 0; i < members.size() && obj < best; ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    obj = std::max(obj, max_cost[static_cast<std::size_t>(members[i]) * bits + members[j]]);
        }
        if (obj < best) {
            best = obj;
            best_mask = mask;
        }
    }

    NetworkDistanceResult res;
    res.kind = use_l1 ? NetworkDistanceKind::l1 : NetworkDistanceKind::inf;
    res.raw_objective = best;
    res.value = best / 2.0;
    for (int b = 0; b < bits; ++b)
        if (best_mask >> b & 1) res.argmin_pairs.emplace_back(b / ny, b % ny);
    return res;
}

// All maps dom -> [0, range) as a mixed-radix counter; f(i) gives the image.
bool next_map(std::vector<int>& f, int range) {
    for (auto& v : f) {
        if (++v < range) return true;
        v = 0;
    }
    return false;
}

NetworkDistanceResult map_pair_search(const WeightedDigraph& X, const WeightedDigraph& Y) {
    const int nx = X.size(), ny = Y.size();
    const double n_pairs = std::pow(static_cast<double>(ny), nx) * std::pow(static_cast<double>(nx), ny);
    if (n_pairs > 1e7)
        throw SearchSpaceTooLargeError("map-pair enumeration needs |Y|^|X| * |X|^|Y| <= 1e7");

    // Precompute dis^1 for every candidate map on each side; sorting the phi
    // side lets the inner loop stop as soon as dis^1(phi) alone exceeds the
    // incumbent (the objective is a max of four nonnegative terms).
    std::vector<std::vector<int>> phis, psis;
    std::vector<double> dphi, dpsi;
    {
        std::vector<int> f(static_cast<std::size_t>(nx), 0);
        do {
            phis.push_back(f);
            dphi.push_back(dis_1(f, X, Y));
        } while (next_map(f, ny));
    }
    {
        std::vector<int> f(static_cast<std::size_t>(ny), 0);
        do {
            psis.push_back(f);
            dpsi.push_back(dis_1(f, Y, X));
        } while (next_map(f, nx));
    }
    std::vector<std::size_t> order(phis.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dphi[a] < dphi[b]; });

    double best = kInf;
    std::size_t best_phi = 0, best_psi = 0;
    VertexMapPair m;
    for (std::size_t pi = 0; pi < psis.size(); ++pi) {
        if (dpsi[pi] >= best) continue;
        for (const std::size_t fi : order) {
            const double base = std::max(dphi[fi], dpsi[pi]);
            if (base >= best) break; // phi side sorted ascending
            m.phi = phis[fi];
            m.psi = psis[pi];
            const double obj = std::max({base, codis_1(m, X, Y), codis_1({psis[pi], phis[fi]}, Y, X)});
            if (obj < best) {
                best = obj;
                best_phi = fi;
                best_psi = pi;
            }
        }
    }

    NetworkDistanceResult res;
    res.kind = NetworkDistanceKind::l1_map;
    res.raw_objective = best;
    res.value = best / 2.0;
    res.phi = phis[best_phi];
    res.psi = psis[best_psi];
    for (int x = 0; x < nx; ++x) res.argmin_pairs.emplace_back(x, res.phi[static_cast<std::size_t>(x)]);
    for (int y = 0; y < ny; ++y) res.argmin_pairs.emplace_back(res.psi[static_cast<std::size_t>(y)], y);
    std::sort(res.argmin_pairs.begin(), res.argmin_pairs.end());
    res.argmin_pairs.erase(std::unique(res.argmin_pairs.begin(), res.argmin_pairs.end()), res.argmin_pairs.end());
    return res;
}

// By the inverse-pair reduction, the bijective map objective collapses to
// dis^1 of a single bijection, so minimizing over permutations is exact.
NetworkDistanceResult bijection_search(const WeightedDigraph& X, const WeightedDigraph& Y) {
    const int n = X.size();
    if (n != Y.size())
        throw SizeMismatchError("bijective network distance needs |X| = |Y|, got " + std::to_string(n) + " and " +
                                std::to_string(Y.size()));
    if (n > 8) throw SearchSpaceTooLargeError("bijection enumeration needs |X| = |Y| <= 8");

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    double best = kInf;
    std::vector<int> best_perm = perm;
    do {
        const double d = dis_1(perm, X, Y);
        if (d < best) {
            best = d;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    NetworkDistanceResult res;
    res.kind = NetworkDistanceKind::l1_bij;
    res.raw_objective = best;
    res.value = best / 2.0;
    for (int x = 0; x < n; ++x) res.argmin_pairs.emplace_back(x, best_perm[static_cast<std::size_t>(x)]);
    return res;
}

} // namespace

NetworkDistanceResult network_distance(const WeightedDigraph& X, const WeightedDigraph& Y,
                                       NetworkDistanceKind kind) {
    switch (kind) {
        case NetworkDistanceKind::inf: return correspondence_search(X, Y, false);
        case NetworkDistanceKind::l1: return correspondence_search(X, Y, true);
        case NetworkDistanceKind::l1_map: return map_pair_search(X, Y);
        case NetworkDistanceKind::l1_bij: return bijection_search(X, Y);
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<double>> distance_matrix(const std::vector<PersistenceDiagram>& diagrams, int dim) {
    const std::size_t n = diagrams.size();
    std::vector<std::vector<double>> dm(n, std::vector<double>(n, 0.0));
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) jobs.emplace_back(i, j);
    parallel_for(jobs.size(), [&](std::size_t k) {
        const auto [i, j] = jobs[k];
        const double d = bottleneck_distance(diagrams[i], diagrams[j], dim);
        dm[i][j] = d;
        dm[j][i] = d;
    });
    return dm;
}

} // namespace walklen
