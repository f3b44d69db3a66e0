#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "walklen/generators.hpp"

using namespace walklen;
using namespace walklen::test;

TEST_CASE("cycle network weights") {
    const auto g3 = make_cycle_network(3);
    CHECK(g3(0, 1) == 1.0);
    CHECK(g3(1, 0) == 2.0);
    for (int n = 3; n <= 8; ++n) {
        const auto g = make_cycle_network(n);
        // matches the closure of the explicit unit-weight ring
        WeightedDigraph ring(n);
        for (int i = 0; i < n; ++i) ring.set(i, (i + 1) % n, 1.0);
        const auto oracle = bellman_ford_all_pairs(ring);
        for (int i = 0; i < n; ++i) {
            CHECK(g(i, i) == 0.0);
            for (int j = 0; j < n; ++j)
                CHECK(g(i, j) == oracle[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    CHECK_THROWS_AS(make_cycle_network(2), DomainError);
}

TEST_CASE("modified cycle network") {
    const auto g = make_modified_cycle_network(6);
    CHECK(g(5, 0) == 4.0);
    CHECK(g(0, 5) == 1.0); // the added edge is already shortest
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j)
            if (!(i == 0 && j == 5)) CHECK(g(i, j) == static_cast<double>(j - i));
    // closure matches a Bellman-Ford oracle on the defining graph
    WeightedDigraph d(6);
    for (int i = 0; i + 1 < 6; ++i) d.set(i, i + 1, 1.0);
    d.set(5, 0, 4.0);
    d.set(0, 5, 1.0);
    const auto oracle = bellman_ford_all_pairs(d);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(g(i, j) == oracle[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

    for (int n = 3; n <= 8; ++n) CHECK(make_modified_cycle_network(n)(0, n - 1) == 1.0);
    CHECK_THROWS_AS(make_modified_cycle_network(6, 3.0), DomainError); // below n - 2
    CHECK_THROWS_AS(make_modified_cycle_network(2), DomainError);
}

TEST_CASE("fixtures carry their defining weights") {
    const auto z = make_paper_fixture("fig3_Z");
    CHECK(z(0, 1) == 0.1);
    CHECK(z(1, 0) == 0.1);
    CHECK(z(1, 2) == 5.0);
    CHECK(z(2, 1) == 1.0);
    CHECK(z(2, 0) == 1.0);
    CHECK(z(0, 2) == 5.0);

    const auto y = make_paper_fixture("fig4_Y");
    CHECK(y(0, 1) == 1.5);
    CHECK(y(1, 0) == 10.5);
    CHECK(y(1, 2) == 0.1);
    CHECK(y(2, 1) == 0.1);
    CHECK(y(2, 0) == 10.5);
    CHECK(y(0, 2) == 1.5);

    const auto x0 = make_paper_fixture("fig2_Xeps", 0.0);
    const auto x = make_paper_fixture("fig2_X");
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(x0(u, v) == x(u, v));
    CHECK(x(0, 1) == 1.0);
    CHECK(x(1, 0) == 11.0);
    CHECK(x(2, 0) == 10.0);
    CHECK(x(2, 1) == 11.0);

    CHECK_THROWS_AS(make_paper_fixture("fig9_Q"), DomainError);
}

TEST_CASE("fixtures validate as networks") {
    for (const auto* name : {"fig2_X", "fig3_X", "fig3_Y", "fig3_Z", "fig4_X", "fig4_Y"}) {
        const auto g = make_paper_fixture(name);
        CHECK_NOTHROW(validate(g));
        CHECK(g.is_complete());
    }
}
