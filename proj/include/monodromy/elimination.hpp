#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "monodromy/cyclotomic.hpp"
#include "monodromy/rational.hpp"

namespace monodromy::detail {

inline bool is_zero_scalar(const Rational& x) { return x == 0; }
inline bool is_zero_scalar(const Cyclotomic& x) { return x.is_zero(); }

// Row echelon form by exact Gaussian elimination over a field scalar
// (Rational or Cyclotomic).  Destructive; returns the rank.  Zero entries
// are skipped, so sparse 0/1 matrices eliminate in near-quadratic time.
template <class K>
int echelon_rank(std::vector<std::vector<K>>& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < m.size(); ++r) {
            if (!is_zero_scalar(m[r][col])) {
                piv = static_cast<int>(r);
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(piv)]);
        auto& prow = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
            if (is_zero_scalar(m[r][col])) continue;
            K f = m[r][col] / prow[col];
            for (std::size_t c = col; c < cols; ++c)
                if (!is_zero_scalar(prow[c])) m[r][c] -= f * prow[c];
        }
        ++rank;
    }
    return rank;
}

// Reduced row echelon form; returns the pivot column of each nonzero row.
template <class K>
std::vector<int> reduced_echelon(std::vector<std::vector<K>>& m) {
    const int rank = echelon_rank(m);
    m.resize(static_cast<std::size_t>(rank));
    std::vector<int> pivots;
    pivots.reserve(static_cast<std::size_t>(rank));
    for (int r = 0; r < rank; ++r) {
        auto& row = m[static_cast<std::size_t>(r)];
        std::size_t p = 0;
        while (p < row.size() && is_zero_scalar(row[p])) ++p;
        pivots.push_back(static_cast<int>(p));
        K inv_lead = row[p];
        for (std::size_t c = p; c < row.size(); ++c)
            if (!is_zero_scalar(row[c])) row[c] = row[c] / inv_lead;
        for (int r2 = 0; r2 < r; ++r2) {
            auto& above = m[static_cast<std::size_t>(r2)];
            if (is_zero_scalar(above[p])) continue;
            K f = above[p];
            for (std::size_t c = p; c < row.size(); ++c)
                if (!is_zero_scalar(row[c])) above[c] -= f * row[c];
        }
    }
    return pivots;
}

} // namespace monodromy::detail
