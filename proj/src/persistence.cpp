#include "walklen/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace walklen {

std::vector<PersistenceDiagram::Point> PersistenceDiagram::at_dim(int dim) const {
    std::vector<Point> out;
    for (const auto& p : points)
        if (p.dim == dim) out.push_back(p);
    return out;
}

int PersistenceDiagram::n_infinite(int dim) const {
    int k = 0;
    for (const auto& p : points)
        if (p.dim == dim && std::isinf(p.death)) ++k;
    return k;
}

namespace {

struct SortedComplex {
    // Finite-valued cells in filtration order, with values possibly snapped
    // upward onto a face value to absorb closure round-off (see below).
    std::vector<const FilteredComplex::Cell*> cells;
    std::vector<double> values;
    // Per dimension: (colex_rank, position) sorted by rank, for facet lookup.
    std::vector<std::vector<std::pair<std::uint64_t, std::int32_t>>> rank_index;
    int top_dim = 0;

    double value(std::size_t j) const { return values[j]; }
};

// Relative slack for monotonicity: filtration values built from shortest
// distances can land an ulp below a face value because Floyd-Warshall and the
// walk sums associate additions differently on tied routes. Anything within
// this tolerance is snapped up to the face value; larger violations are
// genuine input errors.
constexpr double kMonotoneSlack = 1e-9;

// Filtration order: value, then dimension, then colex vertex order.
SortedComplex sort_complex(const FilteredComplex& fc) {
    SortedComplex sc;
    sc.cells.reserve(fc.cells.size());
    for (const auto& c : fc.cells)
        if (std::isfinite(c.value)) sc.cells.push_back(&c);
    std::sort(sc.cells.begin(), sc.cells.end(), [](const auto* a, const auto* b) {
        if (a->value != b->value) return a->value < b->value;
        if (a->simplex.dim() != b->simplex.dim()) return a->simplex.dim() < b->simplex.dim();
        return a->colex_rank < b->colex_rank;
    });
    sc.values.reserve(sc.cells.size());
    for (const auto* c : sc.cells) {
        sc.top_dim = std::max(sc.top_dim, c->simplex.dim());
        sc.values.push_back(c->value);
    }
    sc.rank_index.resize(static_cast<std::size_t>(sc.top_dim) + 1);
    for (std::size_t j = 0; j < sc.cells.size(); ++j)
        sc.rank_index[static_cast<std::size_t>(sc.cells[j]->simplex.dim())].emplace_back(
            sc.cells[j]->colex_rank, static_cast<std::int32_t>(j));
    for (auto& v : sc.rank_index) std::sort(v.begin(), v.end());
    return sc;
}

std::int32_t find_cell(const SortedComplex& sc, int dim, std::uint64_t rank) {
    const auto& v = sc.rank_index[static_cast<std::size_t>(dim)];
    const auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(rank, std::int32_t{-1}),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == v.end() || it->first != rank) return -1;
    return it->second;
}

// Sorted positions of the codimension-1 faces of cell j.
std::vector<std::int32_t> facet_positions(const SortedComplex& sc, const BinomialTable& binom, std::size_t j) {
    const auto& s = sc.cells[j]->simplex;
    const int nv = s.n_vertices;
    std::vector<std::int32_t> faces;
    faces.reserve(static_cast<std::size_t>(nv));
    std::array<std::uint64_t, Simplex::kMaxVertices + 1> prefix{};
    std::array<std::uint64_t, Simplex::kMaxVertices + 1> suffix{};
    prefix[0] = 0;
    for (int i = 0; i < nv; ++i) prefix[i + 1] = prefix[i] + binom(static_cast<int>(s[i]), i + 1);
    suffix[nv] = 0;
    for (int i = nv - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + binom(static_cast<int>(s[i]), i);
    for (int i = 0; i < nv; ++i) {
        const std::int32_t pos = find_cell(sc, nv - 2, prefix[i] + suffix[i + 1]);
        if (pos < 0)
            throw NonMonotoneFiltrationError("face of a finite-valued simplex is missing or has value +inf");
        faces.push_back(pos);
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

// Snap sub-tolerance inversions upward, reject anything larger, and re-sort
// positions whose values moved.
void enforce_monotone(SortedComplex& sc, const BinomialTable& binom) {
    bool changed = false;
    for (int d = 1; d <= sc.top_dim; ++d) {
        for (auto& [rank, pos] : sc.rank_index[static_cast<std::size_t>(d)]) {
            const std::size_t j = static_cast<std::size_t>(pos);
            for (const std::int32_t f : facet_positions(sc, binom, j)) {
                const double fv = sc.values[static_cast<std::size_t>(f)];
                double& v = sc.values[j];
                if (fv <= v) continue;
                if (fv - v <= kMonotoneSlack * std::max(1.0, std::abs(fv))) {
                    v = fv;
                    changed = true;
                } else {
                    throw NonMonotoneFiltrationError("face has a larger filtration value than its coface");
                }
            }
        }
    }
    if (!changed) return;
    // Re-sort under the repaired values and rebuild the lookup tables.
    std::vector<std::size_t> order(sc.cells.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sc.values[a] != sc.values[b]) return sc.values[a] < sc.values[b];
        if (sc.cells[a]->simplex.dim() != sc.cells[b]->simplex.dim())
            return sc.cells[a]->simplex.dim() < sc.cells[b]->simplex.dim();
        return sc.cells[a]->colex_rank < sc.cells[b]->colex_rank;
    });
    std::vector<const FilteredComplex::Cell*> cells(sc.cells.size());
    std::vector<double> values(sc.values.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        cells[j] = sc.cells[order[j]];
        values[j] = sc.values[order[j]];
    }
    sc.cells.swap(cells);
    sc.values.swap(values);
    for (auto& v : sc.rank_index) v.clear();
    for (std::size_t j = 0; j < sc.cells.size(); ++j)
        sc.rank_index[static_cast<std::size_t>(sc.cells[j]->simplex.dim())].emplace_back(
            sc.cells[j]->colex_rank, static_cast<std::int32_t>(j));
    for (auto& v : sc.rank_index) std::sort(v.begin(), v.end());
}

void xor_into(std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    std::vector<std::int32_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    a.swap(out);
}

} // namespace

PersistenceDiagram compute_persistence(const FilteredComplex& fc, int max_hom_dim) {
    if (max_hom_dim < 0) throw std::invalid_argument("max_hom_dim must be non-negative");
    if (max_hom_dim + 1 > fc.max_dim)
        throw std::invalid_argument("complex was not built deep enough: need max_hom_dim + 1 <= max_dim");

    SortedComplex sc = sort_complex(fc);
    const std::size_t m = sc.cells.size();
    const BinomialTable binom(fc.n_vertices, sc.top_dim + 1);
    enforce_monotone(sc, binom);

    std::vector<std::vector<std::int32_t>> boundary(m);
    for (std::size_t j = 0; j < m; ++j)
        if (sc.cells[j]->simplex.dim() >= 1) boundary[j] = facet_positions(sc, binom, j);

    std::vector<std::int32_t> pivot_claimed_by(m, -1);
    std::vector<std::vector<std::int32_t>> stored(m); // reduced column keyed by its pivot row
    std::vector<char> cleared(m, 0), emptied(m, 0);

    // Reduce top dimension first so pivots clear positive columns below.
    for (int d = sc.top_dim; d >= 1; --d) {
        for (std::size_t j = 0; j < m; ++j) {
            if (sc.cells[j]->simplex.dim() != d || cleared[j]) continue;
            std::vector<std::int32_t> col = std::move(boundary[j]);
            bool claimed = false;
            while (!col.empty()) {
                const std::int32_t piv = col.back();
                const std::int32_t other = pivot_claimed_by[static_cast<std::size_t>(piv)];
                if (other < 0) {
                    pivot_claimed_by[static_cast<std::size_t>(piv)] = static_cast<std::int32_t>(j);
                    cleared[static_cast<std::size_t>(piv)] = 1;
                    stored[static_cast<std::size_t>(piv)] = std::move(col);
                    claimed = true;
                    break;
                }
                xor_into(col, stored[static_cast<std::size_t>(piv)]);
            }
            if (!claimed) emptied[j] = 1;
        }
    }

    PersistenceDiagram dgm;
    for (std::size_t p = 0; p < m; ++p) {
        const int d = sc.cells[p]->simplex.dim();
        const std::int32_t killer = pivot_claimed_by[p];
        if (killer >= 0) {
            const double birth = sc.values[p];
            const double death = sc.values[static_cast<std::size_t>(killer)];
            if (d <= max_hom_dim && birth != death) dgm.points.push_back({d, birth, death});
        } else {
            const bool positive = d == 0 || emptied[p];
            if (positive && d <= max_hom_dim) dgm.points.push_back({d, sc.values[p], kInf});
        }
    }
    std::sort(dgm.points.begin(), dgm.points.end(), [](const auto& a, const auto& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return dgm;
}

int betti_oracle(const FilteredComplex& fc, double delta, int dim) {
    if (dim < 0) throw std::invalid_argument("dimension must be non-negative");

    // Sublevel cells per dimension, with colex-rank lookup tables.
    std::vector<std::vector<const FilteredComplex::Cell*>> level(static_cast<std::size_t>(fc.max_dim) + 2);
    for (const auto& c : fc.cells) {
        if (!std::isfinite(c.value) || c.value > delta) continue;
        const int d = c.simplex.dim();
        if (d <= fc.max_dim) level[static_cast<std::size_t>(d)].push_back(&c);
    }
    const auto index_of = [](const std::vector<const FilteredComplex::Cell*>& cells, std::uint64_t rank) {
        const auto it = std::lower_bound(cells.begin(), cells.end(), rank,
                                         [](const auto* c, std::uint64_t r) { return c->colex_rank < r; });
        if (it == cells.end() || (*it)->colex_rank != rank) return std::ptrdiff_t{-1};
        return it - cells.begin();
    };
    for (auto& cells : level)
        std::sort(cells.begin(), cells.end(),
                  [](const auto* a, const auto* b) { return a->colex_rank < b->colex_rank; });

    const BinomialTable binom(fc.n_vertices, fc.max_dim + 2);

    // rank of the boundary map from d-cells to (d-1)-cells over GF(2)
    const auto boundary_rank = [&](int d) -> int {
        if (d <= 0 || d > fc.max_dim) return 0;
        const auto& rows = level[static_cast<std::size_t>(d - 1)];
        const auto& cols = level[static_cast<std::size_t>(d)];
        if (rows.empty() || cols.empty()) return 0;
        const std::size_t words = (rows.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> mat;
        mat.reserve(cols.size());
        for (const auto* c : cols) {
            std::vector<std::uint64_t> bits(words, 0);
            const auto& s = c->simplex;
            const int nv = s.n_vertices;
            std::array<std::uint64_t, Simplex::kMaxVertices + 1> prefix{};
            std::array<std::uint64_t, Simplex::kMaxVertices + 1> suffix{};
            for (int i = 0; i < nv; ++i) prefix[i + 1] = prefix[i] + binom(static_cast<int>(s[i]), i + 1);
            suffix[nv] = 0;
            for (int i = nv - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + binom(static_cast<int>(s[i]), i);
            for (int i = 0; i < nv; ++i) {
                const auto r = index_of(rows, prefix[i] + suffix[i + 1]);
                if (r < 0) throw NonMonotoneFiltrationError("sublevel complex is not closed under faces");
                bits[static_cast<std::size_t>(r) / 64] ^= std::uint64_t{1} << (static_cast<std::size_t>(r) % 64);
            }
            mat.push_back(std::move(bits));
        }
        // Gaussian elimination, counting pivots.
        int rank = 0;
        std::vector<std::size_t> pivot_word(mat.size());
        std::vector<int> pivot_bit(mat.size());
        std::vector<std::size_t> pivots;
        for (auto& row : mat) {
            for (const auto p : pivots) {
                const auto& prow = mat[p];
                if (row[pivot_word[p]] >> pivot_bit[p] & 1)
                    for (std::size_t w = 0; w < words; ++w) row[w] ^= prow[w];
            }
            std::size_t w = 0;
            while (w < words && row[w] == 0) ++w;
            if (w == words) continue;
            pivots.push_back(static_cast<std::size_t>(&row - mat.data()));
            pivot_word[pivots.back()] = w;
            pivot_bit[pivots.back()] = std::countr_zero(row[w]);
            ++rank;
        }
        return rank;
    };

    const auto n_cells = static_cast<int>(level[static_cast<std::size_t>(dim)].size());
    return n_cells - boundary_rank(dim) - boundary_rank(dim + 1);
}

} // namespace walklen
