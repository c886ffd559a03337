#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "signed_spectra/dense_matrix.hpp"
#include "signed_spectra/graph.hpp"
#include "signed_spectra/jacobi.hpp"
#include "signed_spectra/spectrum.hpp"

namespace signed_spectra {

/// Compressed eigenproblem for a signed complete bipartite graph: the
/// characteristic polynomial equals x^zero_exponent times the polynomial of
/// z evaluated at x^2. part_sizes certify z through symmetrize_quotient
/// (all ones when z is already symmetric).
struct ReducedForm {
    int zero_exponent = 0;
    DenseMatrix z;
    std::vector<int> part_sizes;
};

namespace detail {

/// Gram matrix of the sign table, B Bt, accumulated in integer arithmetic.
inline DenseMatrix sign_gram(const SignedBipartiteGraph& g) {
    const int p = g.p(), q = g.q();
    DenseMatrix z{std::size_t(p), std::size_t(p)};
    for (int a = 0; a < p; ++a)
        for (int b = a; b < p; ++b) {
            long long dot = 0;
            for (int c = 0; c < q; ++c) dot += g.sign(a, c) * g.sign(b, c);
            z(std::size_t(a), std::size_t(b)) = double(dot);
            z(std::size_t(b), std::size_t(a)) = double(dot);
        }
    return z;
}

/// Quotient eigenvalues this close to zero (relative to the matrix scale)
/// are flushed to exact zero before the square-root lift; without the flush
/// a numerically-zero mu of order 1e-13 would lift to a spurious 3e-7.
inline double lift_flush_tol(const DenseMatrix& z) { return 1e-9 * std::max(1.0, z.max_abs()); }

}  // namespace detail

/// Plain Gram reduction: z = B Bt of order p with q - p padding zeros. Used
/// directly and as the fallback when a bordered reduction degenerates.
inline ReducedForm gram_reduced_form(const SignedBipartiteGraph& g) {
    return {g.q() - g.p(), detail::sign_gram(g), std::vector<int>(std::size_t(g.p()), 1)};
}

/// Row-side bordered reduction. With (r, s) the negative cover and X the
/// cover block, z has order r+1: top-left X Xt + (q-s) J, border
/// sqrt(p-r) * (row sums of X + (q-s)), corner q(p-r). The cover spanning
/// every U-row degenerates the border; the Gram route applies then.
inline ReducedForm build_z1(const SignedBipartiteGraph& g) {
    const int p = g.p(), q = g.q();
    const auto rows = g.cover_rows();
    const auto cols = g.cover_cols();
    const int r = int(rows.size()), s = int(cols.size());
    if (r == p) return gram_reduced_form(g);

    DenseMatrix z(std::size_t(r + 1), std::size_t(r + 1));
    for (int a = 0; a < r; ++a)
        for (int b = a; b < r; ++b) {
            long long dot = 0;
            for (int c : cols) dot += g.sign(rows[std::size_t(a)], c) * g.sign(rows[std::size_t(b)], c);
            z(std::size_t(a), std::size_t(b)) = double(dot + (q - s));
            z(std::size_t(b), std::size_t(a)) = double(dot + (q - s));
        }
    const double border_scale = std::sqrt(double(p - r));
    for (int a = 0; a < r; ++a) {
        long long row_sum = 0;
        for (int c : cols) row_sum += g.sign(rows[std::size_t(a)], c);
        const double v = border_scale * double(row_sum + (q - s));
        z(std::size_t(a), std::size_t(r)) = v;
        z(std::size_t(r), std::size_t(a)) = v;
    }
    z(std::size_t(r), std::size_t(r)) = double(q) * double(p - r);
    return {p + q - 2 * r - 2, std::move(z), std::vector<int>(std::size_t(r + 1), 1)};
}

/// Column-side bordered reduction of order s+1 with exponent p+q-2s-2.
/// Falls back to the Gram route when the cover spans every V-column or when
/// the exponent would go negative (cover nearly all of V).
inline ReducedForm build_z2(const SignedBipartiteGraph& g) {
    const int p = g.p(), q = g.q();
    const auto rows = g.cover_rows();
    const auto cols = g.cover_cols();
    const int r = int(rows.size()), s = int(cols.size());
    if (s == q || p + q - 2 * s - 2 < 0) return gram_reduced_form(g);

    DenseMatrix z(std::size_t(s + 1), std::size_t(s + 1));
    for (int a = 0; a < s; ++a)
        for (int b = a; b < s; ++b) {
            long long dot = 0;
            for (int rr : rows) dot += g.sign(rr, cols[std::size_t(a)]) * g.sign(rr, cols[std::size_t(b)]);
            z(std::size_t(a), std::size_t(b)) = double(dot + (p - r));
            z(std::size_t(b), std::size_t(a)) = double(dot + (p - r));
        }
    const double border_scale = std::sqrt(double(q - s));
    for (int a = 0; a < s; ++a) {
        long long col_sum = 0;
        for (int rr : rows) col_sum += g.sign(rr, cols[std::size_t(a)]);
        const double v = border_scale * double(col_sum + (p - r));
        z(std::size_t(a), std::size_t(s)) = v;
        z(std::size_t(s), std::size_t(a)) = v;
    }
    z(std::size_t(s), std::size_t(s)) = double(p) * double(q - s);
    return {p + q - 2 * s - 2, std::move(z), std::vector<int>(std::size_t(s + 1), 1)};
}

/// Expands a reduced form into the full spectrum: every eigenvalue mu of z
/// contributes the pair +/- sqrt(mu), then zero_exponent zeros are appended.
inline Spectrum lift_reduced(const ReducedForm& rf, double group_tol = kDefaultGroupTol) {
    if (rf.zero_exponent < 0) throw std::invalid_argument("zero exponent must be non-negative");
    const DenseMatrix sym = symmetrize_quotient(rf.z, rf.part_sizes);
    const auto eigs = sym_eigenvalues(sym);
    const double flush = detail::lift_flush_tol(rf.z);
    std::vector<double> values;
    values.reserve(2 * eigs.size() + std::size_t(rf.zero_exponent));
    for (double mu : eigs) {
        if (mu < -flush) throw std::runtime_error("reduced matrix is not positive semidefinite");
        const double root = std::abs(mu) <= flush ? 0.0 : std::sqrt(mu);
        values.push_back(root);
        values.push_back(-root);
    }
    values.insert(values.end(), std::size_t(rf.zero_exponent), 0.0);
    const std::size_t dim = values.size();
    return Spectrum::group(std::move(values), dim, group_tol);
}

/// Lifts the spectrum of B Bt to the spectrum of [[O, B], [Bt, O]]: each
/// Gram eigenvalue mu >= 0 contributes +/- sqrt(mu) and q - p zeros are
/// appended. Gram eigenvalues slightly below zero are clamped; anything
/// below -1e-8 is rejected as an invalid Gram spectrum.
inline Spectrum bipartite_lift(const std::vector<double>& gram_eigs, int p, int q,
                               double group_tol = kDefaultGroupTol) {
    if (p < 1 || q < p) throw std::invalid_argument("need 1 <= p <= q");
    if (int(gram_eigs.size()) != p)
        throw std::invalid_argument("expected exactly p gram eigenvalues");
    std::vector<double> values;
    values.reserve(std::size_t(p + q));
    for (double mu : gram_eigs) {
        if (mu < -kZeroTol) throw std::invalid_argument("gram eigenvalue below zero tolerance");
        const double root = mu <= 1e-9 ? 0.0 : std::sqrt(mu);
        values.push_back(root);
        values.push_back(-root);
    }
    values.insert(values.end(), std::size_t(q - p), 0.0);
    const std::size_t dim = values.size();
    return Spectrum::group(std::move(values), dim, group_tol);
}

/// Picks the smaller of the two bordered reductions (row side when r <= s).
inline ReducedForm reduced_form(const SignedBipartiteGraph& g) {
    const auto [r, s] = g.minimal_cover();
    return r <= s ? build_z1(g) : build_z2(g);
}

inline Spectrum spectrum_via_reduction(const SignedBipartiteGraph& g,
                                       double group_tol = kDefaultGroupTol) {
    return lift_reduced(reduced_form(g), group_tol);
}

/// Lower bound on the multiplicity of the eigenvalue zero from the negative
/// cover: max(0, p + q - 2 min(r, s) - 2).
inline int nullity_lower_bound(const SignedBipartiteGraph& g) {
    const auto [r, s] = g.minimal_cover();
    return std::max(0, g.p() + g.q() - 2 * std::min(r, s) - 2);
}

}  // namespace signed_spectra
