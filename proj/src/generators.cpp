#include "walklen/generators.hpp"

namespace walklen {

WeightedDigraph make_cycle_network(int n) {
    if (n < 3) throw DomainError("cycle network needs n >= 3");
    WeightedDigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.set(i, j, static_cast<double>((j - i + n) % n));
    return g;
}

WeightedDigraph make_modified_cycle_network(int n, double back_weight) {
    if (n < 3) throw DomainError("modified cycle network needs n >= 3");
    if (back_weight < n - 2)
        throw DomainError("modified cycle network needs back_weight >= n - 2");
    WeightedDigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set(i, i + 1, 1.0);
    g.set(n - 1, 0, back_weight);
    g.set(0, n - 1, 1.0);
    return shortest_distance_digraph(g);
}

WeightedDigraph make_modified_cycle_network(int n) {
    return make_modified_cycle_network(n, static_cast<double>(n - 2));
}

namespace {

WeightedDigraph fig2(double eps) {
    // Triangle a -> b -> c with a -> c, all 1 + eps, plus c -> a of weight 10.
    WeightedDigraph g(3);
    g.set(0, 1, 1.0 + eps);
    g.set(1, 2, 1.0 + eps);
    g.set(0, 2, 1.0 + eps);
    g.set(2, 0, 10.0);
    return shortest_distance_digraph(g);
}

} // namespace

WeightedDigraph make_paper_fixture(const std::string& name, double eps) {
    if (name == "fig2_X") return fig2(0.0);
    if (name == "fig2_Xeps") return fig2(eps);
    if (name == "fig3_X") {
        WeightedDigraph g(2);
        g.set(0, 1, 10.0);
        g.set(1, 0, 1.0);
        return g;
    }
    if (name == "fig3_Y") {
        WeightedDigraph g(2);
        g.set(0, 1, 5.0);
        g.set(1, 0, 1.0);
        return g;
    }
    if (name == "fig3_Z") {
        // Vertices z1, z1', z2.
        WeightedDigraph g(3);
        g.set(0, 1, 0.1);
        g.set(1, 0, 0.1);
        g.set(1, 2, 5.0);
        g.set(2, 1, 1.0);
        g.set(2, 0, 1.0);
        g.set(0, 2, 5.0);
        return g;
    }
    if (name == "fig4_X") {
        // Vertices a, b, c.
        WeightedDigraph g(3);
        g.set(0, 1, 0.1);
        g.set(1, 0, 0.1);
        g.set(1, 2, 1.0);
        g.set(2, 1, 10.0);
        g.set(2, 0, 10.0);
        g.set(0, 2, 1.0);
        return g;
    }
    if (name == "fig4_Y") {
        // Vertices alpha, beta, gamma.
        WeightedDigraph g(3);
        g.set(0, 1, 1.5);
        g.set(1, 0, 10.5);
        g.set(1, 2, 0.1);
        g.set(2, 1, 0.1);
        g.set(2, 0, 10.5);
        g.set(0, 2, 1.5);
        return g;
    }
    throw DomainError("unknown fixture name: " + name);
}

} // namespace walklen
