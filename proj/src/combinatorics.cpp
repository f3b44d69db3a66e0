#include "walklen/combinatorics.hpp"

namespace walklen {

BinomialTable::BinomialTable(int n, int k) : k_(k), table_(static_cast<std::size_t>(n + 1) * (k + 1), 0) {
    for (int i = 0; i <= n; ++i) {
        table_[static_cast<std::size_t>(i) * (k_ + 1)] = 1;
        for (int j = 1; j <= k_ && j <= i; ++j) {
            const std::uint64_t a = (*this)(i - 1, j - 1);
            const std::uint64_t b = (*this)(i - 1, j);
            const std::uint64_t s = a + b;
            table_[static_cast<std::size_t>(i) * (k_ + 1) + j] =
                (a == kOverflow || b == kOverflow || s < a) ? kOverflow : s;
        }
    }
}

std::uint64_t colex_rank(std::span<const std::uint32_t> verts, const BinomialTable& binom) {
    std::uint64_t rank = 0;
    for (std::size_t j = 0; j < verts.size(); ++j)
        rank += binom(static_cast<int>(verts[j]), static_cast<int>(j) + 1);
    return rank;
}

void first_combination(std::span<std::uint32_t> verts) {
    for (std::size_t i = 0; i < verts.size(); ++i) verts[i] = static_cast<std::uint32_t>(i);
}

bool next_combination(std::span<std::uint32_t> verts, std::uint32_t n) {
    const std::size_t m = verts.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint32_t limit = (i + 1 < m) ? verts[i + 1] : n;
        if (verts[i] + 1 < limit) {
            ++verts[i];
            for (std::size_t j = 0; j < i; ++j) verts[j] = static_cast<std::uint32_t>(j);
            return true;
        }
    }
    return false;
}

} // namespace walklen
