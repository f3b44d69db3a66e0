#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "test_util.hpp"
#include "walklen/bottleneck.hpp"

using namespace walklen;
using namespace walklen::test;

namespace {

PersistenceDiagram make(std::initializer_list<PersistenceDiagram::Point> pts) {
    PersistenceDiagram d;
    d.points = pts;
    return d;
}

// Exhaustive matching oracle for small finite diagrams: every point matches a
// distinct partner or its own diagonal; minimize the max L-infinity cost.
double brute_force_bottleneck(const std::vector<std::pair<double, double>>& a,
                              const std::vector<std::pair<double, double>>& b) {
    const std::size_t na = a.size();
    double best = kInf;
    std::vector<int> assign(na, -1); // index into b or -1 for diagonal
    std::vector<char> used(b.size(), 0);
    const std::function<void(std::size_t, double)> rec = [&](std::size_t i, double cost) {
        if (cost >= best) return;
        if (i == na) {
            double total = cost;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!used[j]) total = std::max(total, (b[j].second - b[j].first) / 2.0);
            best = std::min(best, total);
            return;
        }
        rec(i + 1, std::max(cost, (a[i].second - a[i].first) / 2.0)); // to the diagonal
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            rec(i + 1, std::max({cost, std::abs(a[i].first - b[j].first), std::abs(a[i].second - b[j].second)}));
            used[j] = 0;
        }
    };
    rec(0, 0.0);
    return best;
}

PersistenceDiagram random_diagram(Rng& rng, int dim, int max_points, bool with_infinite) {
    PersistenceDiagram d;
    const int n = rng.uniform_int(0, max_points);
    for (int i = 0; i < n; ++i) {
        const double birth = rng.uniform(0.0, 3.0);
        d.points.push_back({dim, birth, birth + rng.uniform(0.01, 2.0)});
    }
    if (with_infinite)
        for (int i = rng.uniform_int(0, 2); i > 0; --i) d.points.push_back({dim, rng.uniform(0.0, 3.0), kInf});
    return d;
}

} // namespace

TEST_CASE("two one-point diagrams") {
    // matching the points costs 2*eps, both-to-diagonal costs (1+eps)/2
    const auto d1 = make({{1, 1.0, 2.0}});
    const auto d2 = make({{1, 1.1, 2.2}});
    CHECK(approx(bottleneck_distance(d1, d2, 1), 0.2));
    CHECK(bottleneck_distance(d1, d1, 1) == 0.0);
}

TEST_CASE("infinite point count mismatch gives +inf") {
    const auto d1 = make({{1, 1.0, kInf}});
    const PersistenceDiagram empty;
    CHECK(std::isinf(bottleneck_distance(d1, empty, 1)));
    CHECK(std::isinf(bottleneck_distance(empty, d1, 1)));
}

TEST_CASE("infinite points pair in sorted birth order") {
    const auto d1 = make({{1, 1.0, kInf}, {1, 2.0, kInf}});
    const auto d2 = make({{1, 2.5, kInf}, {1, 1.5, kInf}});
    CHECK(bottleneck_distance(d1, d2, 1) == 0.5);
}

TEST_CASE("diagrams of the plain and modified 6-cycles") {
    const auto d1 = make({{1, 1.0, 3.0}});
    const auto d2 = make({{1, 1.0, 5.0}});
    CHECK(bottleneck_distance(d1, d2, 1) == 2.0);
}

TEST_CASE("dimension restriction ignores other dimensions") {
    const auto d1 = make({{0, 0.0, kInf}, {1, 1.0, 2.0}});
    const auto d2 = make({{0, 0.0, 1.0}, {1, 1.0, 2.0}});
    CHECK(bottleneck_distance(d1, d2, 1) == 0.0);
    CHECK(std::isinf(bottleneck_distance(d1, d2, 0)));
}

TEST_CASE("matches an exhaustive matching oracle on small diagrams") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<double, double>> a, b;
        for (int i = rng.uniform_int(0, 4); i > 0; --i) {
            const double birth = rng.uniform(0.0, 3.0);
            a.push_back({birth, birth + rng.uniform(0.01, 2.0)});
        }
        for (int i = rng.uniform_int(0, 4); i > 0; --i) {
            const double birth = rng.uniform(0.0, 3.0);
            b.push_back({birth, birth + rng.uniform(0.01, 2.0)});
        }
        PersistenceDiagram da, db;
        for (const auto& [x, y] : a) da.points.push_back({1, x, y});
        for (const auto& [x, y] : b) db.points.push_back({1, x, y});
        CHECK(bottleneck_distance(da, db, 1) == brute_force_bottleneck(a, b));
    }
}

TEST_CASE("pseudometric properties") {
    Rng rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_diagram(rng, 1, 4, false);
        const auto b = random_diagram(rng, 1, 4, false);
        const auto c = random_diagram(rng, 1, 4, false);
        const double ab = bottleneck_distance(a, b, 1);
        const double ba = bottleneck_distance(b, a, 1);
        CHECK(ab == ba);
        CHECK(bottleneck_distance(a, a, 1) == 0.0);
        CHECK(ab <= bottleneck_distance(a, c, 1) + bottleneck_distance(c, b, 1) + 1e-12);
    }
    // with equal infinite-point counts the properties survive points at infinity
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_diagram(rng, 1, 4, false);
        auto b = random_diagram(rng, 1, 4, false);
        auto c = random_diagram(rng, 1, 4, false);
        const int n_inf = rng.uniform_int(1, 3);
        for (int i = 0; i < n_inf; ++i) {
            a.points.push_back({1, rng.uniform(0.0, 3.0), kInf});
            b.points.push_back({1, rng.uniform(0.0, 3.0), kInf});
            c.points.push_back({1, rng.uniform(0.0, 3.0), kInf});
        }
        const double ab = bottleneck_distance(a, b, 1);
        CHECK(std::isfinite(ab));
        CHECK(ab == bottleneck_distance(b, a, 1));
        CHECK(bottleneck_distance(a, a, 1) == 0.0);
        CHECK(ab <= bottleneck_distance(a, c, 1) + bottleneck_distance(c, b, 1) + 1e-12);
    }
}
