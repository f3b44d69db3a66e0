#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace walklen {

// Simplex as a strictly increasing vertex list, at most kMaxVertices long
// (dimension + 1 vertices).
struct Simplex {
    static constexpr int kMaxVertices = 12;

    std::array<std::uint32_t, kMaxVertices> v{};
    std::uint8_t n_vertices = 0;

    Simplex() = default;
    Simplex(std::initializer_list<std::uint32_t> verts) {
        if (verts.size() > kMaxVertices) throw std::length_error("simplex has too many vertices");
        for (auto x : verts) v[n_vertices++] = x;
    }

    int dim() const { return static_cast<int>(n_vertices) - 1; }
    std::span<const std::uint32_t> vertices() const { return {v.data(), n_vertices}; }
    std::uint32_t operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

    bool operator==(const Simplex& o) const {
        if (n_vertices != o.n_vertices) return false;
        for (int i = 0; i < n_vertices; ++i)
            if (v[static_cast<std::size_t>(i)] != o.v[static_cast<std::size_t>(i)]) return false;
        return true;
    }
};

// Exact binomial coefficients C(i, j) for 0 <= i <= n, 0 <= j <= k, with an
// overflow guard (values are capped at kOverflow and must not be used past it).
class BinomialTable {
public:
    static constexpr std::uint64_t kOverflow = ~std::uint64_t{0};

    BinomialTable(int n, int k);

    std::uint64_t operator()(int i, int j) const {
        if (j < 0 || j > k_ || j > i) return 0;
        return table_[static_cast<std::size_t>(i) * (k_ + 1) + j];
    }

private:
    int k_;
    std::vector<std::uint64_t> table_;
};

// Colexicographic rank of a strictly increasing combination:
// rank = sum_j C(verts[j], j+1). Enumeration in colex order lets faces of
// dimension d-1 be completed before dimension d begins.
std::uint64_t colex_rank(std::span<const std::uint32_t> verts, const BinomialTable& binom);

// First combination {0, 1, ..., m-1} written into verts[0..m).
void first_combination(std::span<std::uint32_t> verts);

// Advances verts to the next combination of the same size in colex order over
// {0..n-1}; returns false when exhausted.
bool next_combination(std::span<std::uint32_t> verts, std::uint32_t n);

} // namespace walklen
