#include "walklen/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace walklen {

namespace {

constexpr std::uint64_t kMaxComplexCells = 50'000'000;

int top_dimension(int n, int k) {
    if (k < 0) throw std::invalid_argument("filtration dimension k must be non-negative");
    if (n < 1) throw std::invalid_argument("digraph has no vertices");
    const int top = std::min(k + 1, n - 1);
    if (top + 1 > Simplex::kMaxVertices)
        throw std::length_error("simplex dimension exceeds supported maximum");
    return top;
}

std::uint64_t checked_cell_count(int n, int top, const BinomialTable& binom) {
    std::uint64_t total = 0;
    for (int d = 0; d <= top; ++d) {
        const std::uint64_t c = binom(n, d + 1);
        if (c == BinomialTable::kOverflow || total + c > kMaxComplexCells)
            throw std::length_error("filtered complex is too large");
        total += c;
    }
    return total;
}

// Applies fn(simplex_vertices, colex_rank) to every d-simplex in colex order.
template <typename F>
void for_each_simplex(int n, int d, F&& fn) {
    std::array<std::uint32_t, Simplex::kMaxVertices> buf{};
    std::span<std::uint32_t> verts(buf.data(), static_cast<std::size_t>(d) + 1);
    first_combination(verts);
    std::uint64_t rank = 0;
    do {
        fn(std::span<const std::uint32_t>(verts.data(), verts.size()), rank);
        ++rank;
    } while (next_combination(verts, static_cast<std::uint32_t>(n)));
}

Simplex to_simplex(std::span<const std::uint32_t> verts) {
    Simplex s;
    s.n_vertices = static_cast<std::uint8_t>(verts.size());
    std::copy(verts.begin(), verts.end(), s.v.begin());
    return s;
}

void emit_vertices(FilteredComplex& fc, int n) {
    for (int v = 0; v < n; ++v) {
        FilteredComplex::Cell cell;
        cell.simplex = Simplex{static_cast<std::uint32_t>(v)};
        cell.value = 0.0;
        cell.colex_rank = static_cast<std::uint64_t>(v);
        fc.cells.push_back(cell);
    }
}

// Generic builder for the witness-style filtrations: vertices at value 0,
// higher simplices valued by `score(verts)`.
template <typename Score>
FilteredComplex build_pointwise(const WeightedDigraph& g, int k, Score&& score) {
    const int n = g.size();
    const int top = top_dimension(n, k);
    const BinomialTable binom(n, top + 2);
    checked_cell_count(n, top, binom);

    FilteredComplex fc;
    fc.n_vertices = n;
    fc.max_dim = k + 1;
    emit_vertices(fc, n);
    for (int d = 1; d <= top; ++d) {
        for_each_simplex(n, d, [&](std::span<const std::uint32_t> verts, std::uint64_t rank) {
            FilteredComplex::Cell cell;
            cell.simplex = to_simplex(verts);
            cell.value = score(verts);
            cell.colex_rank = rank;
            fc.cells.push_back(cell);
        });
    }
    return fc;
}

} // namespace

FilteredComplex walk_length_filtration(const WeightedDigraph& g, int k) {
    const int n = g.size();
    const int top = top_dimension(n, k);
    const BinomialTable binom(n, top + 2);
    checked_cell_count(n, top, binom);

    FilteredComplex fc;
    fc.n_vertices = n;
    fc.max_dim = k + 1;
    fc.has_walk_endpoints = true;
    emit_vertices(fc, n);
    for (auto& cell : fc.cells) {
        cell.walk_start = static_cast<std::int32_t>(cell.simplex[0]);
        cell.walk_end = cell.walk_start;
    }
    if (top < 1) return fc;

    // prev[rank * d^2 + a*d + c] = minimal weight of a walk through the
    // (d-1)-simplex of that colex rank, starting at local vertex a and ending
    // at local vertex c. Dimension d-1 has d vertices per simplex.
    std::vector<double> prev(static_cast<std::size_t>(n), 0.0); // vertices: a = c = 0, weight 0
    std::vector<double> cur;

    for (int d = 1; d <= top; ++d) {
        const int nv = d + 1;          // vertices per d-simplex
        const int states = nv * nv;
        const int fstates = d * d;     // states per face
        const std::uint64_t count = binom(n, nv);
        const bool keep = d < top;
        if (keep) {
            if (count > (std::uint64_t{1} << 31) / static_cast<std::uint64_t>(states))
                throw std::length_error("walk-length DP table is too large");
            cur.assign(static_cast<std::size_t>(count) * states, kInf);
        }

        std::array<double, Simplex::kMaxVertices * Simplex::kMaxVertices> gbuf{};
        std::array<std::uint64_t, Simplex::kMaxVertices + 1> prefix{};
        std::array<std::uint64_t, Simplex::kMaxVertices + 1> suffix{};

        for_each_simplex(n, d, [&](std::span<const std::uint32_t> verts, std::uint64_t rank) {
            // Face ranks: dropping position i leaves prefix terms C(v_j, j+1)
            // for j < i and shifted terms C(v_j, j) for j > i.
            prefix[0] = 0;
            for (int j = 0; j < nv; ++j)
                prefix[j + 1] = prefix[j] + binom(static_cast<int>(verts[j]), j + 1);
            suffix[nv] = 0;
            for (int j = nv - 1; j >= 0; --j)
                suffix[j] = suffix[j + 1] + binom(static_cast<int>(verts[j]), j);

            double* gcur = gbuf.data();
            std::fill(gcur, gcur + states, kInf);

            // A minimal walk for the simplex ends at some vertex b; removing b
            // leaves a minimal-to-that-endpoint walk of the face without b.
            for (int ib = 0; ib < nv; ++ib) {
                const std::uint64_t face_rank = prefix[ib] + suffix[ib + 1];
                const double* gface = prev.data() + face_rank * fstates;
                const std::uint32_t b = verts[ib];
                for (int a = 0; a < d; ++a) {
                    const int a_cur = a < ib ? a : a + 1;
                    for (int c = 0; c < d; ++c) {
                        const double w = gface[a * d + c];
                        if (!std::isfinite(w)) continue;
                        const int c_vert = c < ib ? c : c + 1;
                        const double cand = w + g(static_cast<int>(verts[c_vert]), static_cast<int>(b));
                        double& slot = gcur[a_cur * nv + ib];
                        if (cand < slot) slot = cand;
                    }
                }
            }

            double best = kInf;
            int best_a = -1, best_b = -1;
            for (int a = 0; a < nv; ++a)
                for (int b = 0; b < nv; ++b)
                    if (gcur[a * nv + b] < best) {
                        best = gcur[a * nv + b];
                        best_a = a;
                        best_b = b;
                    }

            FilteredComplex::Cell cell;
            cell.simplex = to_simplex(verts);
            cell.value = best;
            cell.colex_rank = rank;
            if (best_a >= 0) {
                cell.walk_start = static_cast<std::int32_t>(verts[best_a]);
                cell.walk_end = static_cast<std::int32_t>(verts[best_b]);
            }
            fc.cells.push_back(cell);

            if (keep) std::memcpy(cur.data() + rank * states, gcur, sizeof(double) * states);
        });

        if (keep) prev.swap(cur);
    }
    return fc;
}

double walk_length_oracle(const WeightedDigraph& g, std::span<const std::uint32_t> simplex) {
    std::vector<std::uint32_t> order(simplex.begin(), simplex.end());
    std::sort(order.begin(), order.end());
    double best = order.empty() ? kInf : (order.size() == 1 ? 0.0 : kInf);
    if (order.size() <= 1) return best;
    do {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            total += g(static_cast<int>(order[i]), static_cast<int>(order[i + 1]));
        if (total < best) best = total;
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

FilteredComplex dowker_sink_filtration(const WeightedDigraph& g, int k) {
    const int n = g.size();
    return build_pointwise(g, k, [&](std::span<const std::uint32_t> verts) {
        double best = kInf;
        for (int w = 0; w < n; ++w) {
            double m = 0.0;
            for (std::uint32_t v : verts) {
                const double x = g(static_cast<int>(v), w);
                if (x > m) m = x;
                if (m >= best) break;
            }
            if (m < best) best = m;
        }
        return best;
    });
}

FilteredComplex dowker_source_filtration(const WeightedDigraph& g, int k) {
    const int n = g.size();
    return build_pointwise(g, k, [&](std::span<const std::uint32_t> verts) {
        double best = kInf;
        for (int w = 0; w < n; ++w) {
            double m = 0.0;
            for (std::uint32_t v : verts) {
                const double x = g(w, static_cast<int>(v));
                if (x > m) m = x;
                if (m >= best) break;
            }
            if (m < best) best = m;
        }
        return best;
    });
}

FilteredComplex rips_filtration(const WeightedDigraph& g, int k) {
    if (!g.is_symmetric()) throw NotSymmetricError("Rips filtration requires a symmetric weight matrix");
    return build_pointwise(g, k, [&](std::span<const std::uint32_t> verts) {
        double m = 0.0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                m = std::max(m, g(static_cast<int>(verts[i]), static_cast<int>(verts[j])));
        return m;
    });
}

} // namespace walklen
