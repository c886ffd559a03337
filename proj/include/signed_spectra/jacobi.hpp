#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "signed_spectra/dense_matrix.hpp"

namespace signed_spectra {

inline constexpr double kJacobiConvTol = 1e-12;
inline constexpr int kJacobiSweepCap = 100;

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method. The sweep
/// order is fixed (row major over the upper triangle), so results are
/// deterministic. Converged once the off-diagonal Frobenius norm drops below
/// conv_tol times the initial Frobenius norm; exhausting the sweep cap is an
/// error, never a silent return.
inline std::vector<double> sym_eigenvalues(const DenseMatrix& m,
                                           double conv_tol = kJacobiConvTol,
                                           int sweep_cap = kJacobiSweepCap) {
    if (!m.is_square()) throw std::invalid_argument("eigensolver requires a square matrix");
    if (!m.is_symmetric()) throw std::invalid_argument("eigensolver requires a symmetric matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {};

    DenseMatrix a = m;
    const double target = conv_tol * a.frobenius_norm();

    auto diagonal = [&a, n] {
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
        return d;
    };

    if (a.off_diagonal_norm() <= target) return diagonal();

    for (int sweep = 0; sweep < sweep_cap; ++sweep) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double apq = a(i, j);
                if (apq == 0.0) continue;
                const double theta = (a(j, j) - a(i, i)) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a(i, i) -= t * apq;
                a(j, j) += t * apq;
                a(i, j) = 0.0;
                a(j, i) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    const double aik = a(i, k);
                    const double ajk = a(j, k);
                    a(i, k) = c * aik - s * ajk;
                    a(k, i) = a(i, k);
                    a(j, k) = s * aik + c * ajk;
                    a(k, j) = a(j, k);
                }
            }
        }
        if (a.off_diagonal_norm() <= target) return diagonal();
    }
    throw std::runtime_error("jacobi eigensolver did not converge within " +
                             std::to_string(sweep_cap) + " sweeps");
}

/// Conjugates a quotient matrix by diag(sqrt(part_sizes)). The result must
/// come out symmetric, which certifies the input as an equitable quotient of
/// a symmetric matrix; a failed check signals a malformed quotient.
/// Eigenvalues are preserved.
inline DenseMatrix symmetrize_quotient(const DenseMatrix& z, const std::vector<int>& part_sizes) {
    if (!z.is_square()) throw std::invalid_argument("quotient matrix must be square");
    if (z.rows() != part_sizes.size())
        throw std::invalid_argument("part_sizes length must match quotient order");
    for (int d : part_sizes)
        if (d < 1) throw std::invalid_argument("part sizes must be positive");

    const std::size_t n = z.rows();
    DenseMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) = std::sqrt(double(part_sizes[i]) / double(part_sizes[j])) * z(i, j);
    if (!r.is_symmetric())
        throw std::runtime_error("not an equitable quotient: symmetrization certificate failed");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (r(i, j) + r(j, i));
            r(i, j) = v;
            r(j, i) = v;
        }
    return r;
}

}  // namespace signed_spectra
