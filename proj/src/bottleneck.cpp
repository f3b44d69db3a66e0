#include "walklen/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace walklen {

namespace {

struct Pt {
    double birth, death;
};

double linf(const Pt& p, const Pt& q) {
    return std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death));
}

double half_persistence(const Pt& p) { return (p.death - p.birth) / 2.0; }

// Hopcroft-Karp maximum bipartite matching over adjacency lists.
class Matcher {
public:
    Matcher(int n_left, int n_right) : nl_(n_left), nr_(n_right), adj_(static_cast<std::size_t>(n_left)) {}

    void add_edge(int l, int r) { adj_[static_cast<std::size_t>(l)].push_back(r); }

    int max_matching() {
        match_l_.assign(static_cast<std::size_t>(nl_), -1);
        match_r_.assign(static_cast<std::size_t>(nr_), -1);
        int matching = 0;
        while (bfs()) {
            for (int l = 0; l < nl_; ++l)
                if (match_l_[static_cast<std::size_t>(l)] < 0 && dfs(l)) ++matching;
        }
        return matching;
    }

private:
    bool bfs() {
        std::queue<int> q;
        dist_.assign(static_cast<std::size_t>(nl_), -1);
        for (int l = 0; l < nl_; ++l)
            if (match_l_[static_cast<std::size_t>(l)] < 0) {
                dist_[static_cast<std::size_t>(l)] = 0;
                q.push(l);
            }
        bool found = false;
        while (!q.empty()) {
            const int l = q.front();
            q.pop();
            for (const int r : adj_[static_cast<std::size_t>(l)]) {
                const int l2 = match_r_[static_cast<std::size_t>(r)];
                if (l2 < 0) {
                    found = true;
                } else if (dist_[static_cast<std::size_t>(l2)] < 0) {
                    dist_[static_cast<std::size_t>(l2)] = dist_[static_cast<std::size_t>(l)] + 1;
                    q.push(l2);
                }
            }
        }
        return found;
    }

    bool dfs(int l) {
        for (const int r : adj_[static_cast<std::size_t>(l)]) {
            const int l2 = match_r_[static_cast<std::size_t>(r)];
            if (l2 < 0 || (dist_[static_cast<std::size_t>(l2)] == dist_[static_cast<std::size_t>(l)] + 1 && dfs(l2))) {
                match_l_[static_cast<std::size_t>(l)] = r;
                match_r_[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(l)] = -2;
        return false;
    }

    int nl_, nr_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_, dist_;
};

struct Side {
    std::vector<Pt> pts;     // sorted by birth
    std::vector<double> hp;  // half-persistences, aligned with pts
};

Side make_side(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.birth < b.birth; });
    Side s;
    s.hp.reserve(pts.size());
    for (const auto& p : pts) s.hp.push_back(half_persistence(p));
    s.pts = std::move(pts);
    return s;
}

// Can every point of `from` with half-persistence > c be matched to a
// distinct point of `to` at L-infinity cost <= c? Edge lists are generated
// through a birth-window scan over the birth-sorted `to` side.
bool saturates(const Side& from, const Side& to, double c) {
    std::vector<int> need;
    for (int i = 0; i < static_cast<int>(from.pts.size()); ++i)
        if (from.hp[static_cast<std::size_t>(i)] > c) need.push_back(i);
    if (need.empty()) return true;
    if (need.size() > to.pts.size()) return false;

    Matcher m(static_cast<int>(need.size()), static_cast<int>(to.pts.size()));
    for (std::size_t l = 0; l < need.size(); ++l) {
        const Pt& p = from.pts[static_cast<std::size_t>(need[l])];
        const auto lo = std::lower_bound(to.pts.begin(), to.pts.end(), p.birth - c,
                                         [](const Pt& q, double v) { return q.birth < v; });
        for (auto it = lo; it != to.pts.end() && it->birth <= p.birth + c; ++it)
            if (std::abs(p.death - it->death) <= c)
                m.add_edge(static_cast<int>(l), static_cast<int>(it - to.pts.begin()));
    }
    return m.max_matching() == static_cast<int>(need.size());
}

// A diagram matching of max cost <= c exists iff some real-real matching
// covers every point with half-persistence > c on both sides (everything
// else can take the diagonal). By the Mendelsohn-Dulmage theorem a matching
// covering both sides exists as soon as each side can be covered on its own.
bool feasible(const Side& A, const Side& B, double c) {
    return saturates(A, B, c) && saturates(B, A, c);
}

// Any matching sends p either to the diagonal or to some partner, so
// max_p min(hp(p), nearest-neighbor cost) bounds the value from below.
double matching_lower_bound(const Side& A, const Side& B) {
    double bound = 0.0;
    const auto one_side = [&](const Side& from, const Side& to) {
        for (std::size_t i = 0; i < from.pts.size(); ++i) {
            double cheapest = from.hp[i];
            for (const auto& q : to.pts) {
                const double c = linf(from.pts[i], q);
                if (c < cheapest) cheapest = c;
            }
            if (cheapest > bound) bound = cheapest;
        }
    };
    one_side(A, B);
    one_side(B, A);
    return bound;
}

double finite_bottleneck(const Side& A, const Side& B) {
    if (A.pts.empty() && B.pts.empty()) return 0.0;
    if (feasible(A, B, 0.0)) return 0.0;

    double hi = 0.0;
    for (const double h : A.hp) hi = std::max(hi, h);
    for (const double h : B.hp) hi = std::max(hi, h);
    double lo = matching_lower_bound(A, B);
    // Costs below the bound are infeasible, so if the bound itself works it
    // is the exact value (it is a half-persistence or a pairwise cost).
    if (feasible(A, B, lo)) return lo;
    while (hi - lo > 1e-13 * std::max(1.0, hi)) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break; // ran out of doubles
        if (feasible(A, B, mid))
            hi = mid;
        else
            lo = mid;
    }

    // The value is attained by a candidate cost: a half-persistence or a
    // pairwise L-infinity cost. Snap to the exact one inside (lo, hi].
    std::vector<double> candidates;
    const auto consider = [&](double c) {
        if (c > lo && c <= hi) candidates.push_back(c);
    };
    for (const double h : A.hp) consider(h);
    for (const double h : B.hp) consider(h);
    for (const auto& p : A.pts)
        for (const auto& q : B.pts) consider(linf(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const double c : candidates)
        if (feasible(A, B, c)) return c;
    return hi;
}

} // namespace

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
    std::vector<Pt> pa, pb;
    std::vector<double> ainf, binf;
    for (const auto& p : a.points) {
        if (p.dim != dim) continue;
        if (std::isinf(p.death))
            ainf.push_back(p.birth);
        else
            pa.push_back({p.birth, p.death});
    }
    for (const auto& p : b.points) {
        if (p.dim != dim) continue;
        if (std::isinf(p.death))
            binf.push_back(p.birth);
        else
            pb.push_back({p.birth, p.death});
    }

    if (ainf.size() != binf.size()) return kInf;

    // Infinite points must be matched to each other; the difference between
    // two infinite death coordinates is 0, so only births matter, and the
    // min-max assignment of values on a line pairs them in sorted order.
    double inf_cost = 0.0;
    std::sort(ainf.begin(), ainf.end());
    std::sort(binf.begin(), binf.end());
    for (std::size_t i = 0; i < ainf.size(); ++i) inf_cost = std::max(inf_cost, std::abs(ainf[i] - binf[i]));

    return std::max(inf_cost, finite_bottleneck(make_side(std::move(pa)), make_side(std::move(pb))));
}

} // namespace walklen
