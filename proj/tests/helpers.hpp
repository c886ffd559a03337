#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "signed_spectra/signed_spectra.hpp"

namespace test_helpers {

using signed_spectra::DenseMatrix;

/// H = perfect matching on k + k vertices (degree 1).
inline std::vector<std::vector<int>> h_perfect_matching(int k) {
    std::vector<std::vector<int>> h(std::size_t(2 * k), std::vector<int>(std::size_t(2 * k), 0));
    for (int i = 0; i < k; ++i) h[std::size_t(i)][std::size_t(k + i)] = h[std::size_t(k + i)][std::size_t(i)] = 1;
    return h;
}

/// H = single cycle on 2k vertices laid across the k|k split (degree 2).
inline std::vector<std::vector<int>> h_even_cycle(int k) {
    std::vector<std::vector<int>> h(std::size_t(2 * k), std::vector<int>(std::size_t(2 * k), 0));
    for (int i = 0; i < k; ++i) {
        const int u = i, v = k + i, u_next = (i + 1) % k;
        h[std::size_t(u)][std::size_t(v)] = h[std::size_t(v)][std::size_t(u)] = 1;
        h[std::size_t(u_next)][std::size_t(v)] = h[std::size_t(v)][std::size_t(u_next)] = 1;
    }
    return h;
}

/// H = `count` disjoint four-cycles, so k = 2 * count (degree 2).
inline std::vector<std::vector<int>> h_disjoint_four_cycles(int count) {
    const int k = 2 * count;
    std::vector<std::vector<int>> h(std::size_t(2 * k), std::vector<int>(std::size_t(2 * k), 0));
    for (int b = 0; b < count; ++b)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const int u = 2 * b + i, v = k + 2 * b + j;
                h[std::size_t(u)][std::size_t(v)] = h[std::size_t(v)][std::size_t(u)] = 1;
            }
    return h;
}

/// Determinant by Gaussian elimination with partial pivoting; independent of
/// the library's eigensolver, used as an oracle for similarity checks.
inline double determinant(DenseMatrix m) {
    const std::size_t n = m.rows();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(m(row, col)) > std::abs(m(pivot, col))) pivot = row;
        if (m(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double f = m(row, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(row, j) -= f * m(col, j);
        }
    }
    return det;
}

}  // namespace test_helpers
