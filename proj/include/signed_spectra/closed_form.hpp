#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "signed_spectra/pattern.hpp"
#include "signed_spectra/reduction.hpp"

namespace signed_spectra {

/// Result of a closed-form spectrum computation. `quotient` is present when
/// the formula goes through a small quotient matrix rather than explicit
/// roots.
struct ClosedFormResult {
    Spectrum spectrum;
    std::optional<ReducedForm> quotient;
};

namespace detail {

/// Appends `padding` zeros when nonnegative; otherwise removes |padding|
/// zero entries, which the degenerate root structure guarantees to exist.
inline std::vector<double> pad_with_zeros(std::vector<double> values, int padding) {
    if (padding >= 0) {
        values.insert(values.end(), std::size_t(padding), 0.0);
        return values;
    }
    for (int need = -padding; need > 0; --need) {
        const auto it = std::find_if(values.begin(), values.end(),
                                     [](double v) { return std::abs(v) <= kZeroTol; });
        if (it == values.end())
            throw std::runtime_error("spectrum bookkeeping: no zero eigenvalue available to drop");
        values.erase(it);
    }
    return values;
}

/// Eigenvalues of the 2k x 2k regular-pattern adjacency, sorted decreasing.
inline std::vector<double> h_eigenvalues_desc(int k, const std::vector<std::vector<int>>& h_adj) {
    const std::size_t n = std::size_t(2 * k);
    DenseMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = double(h_adj[i][j]);
    auto eigs = sym_eigenvalues(h);
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    return eigs;
}

}  // namespace detail

/// Spectrum of the graph whose negative edges form a single r x s biclique:
/// {+-mu1, +-mu2, 0^(p+q-4)} with
///   mu^2 = (pq +- sqrt(q^2 (p-2r)^2 + 4 r (p-r) (q-2s)^2)) / 2.
/// Coinciding roots (mu2 = 0 when r = p, or mu1 = mu2) merge multiplicities.
inline ClosedFormResult biclique_spectrum(int p, int q, int r, int s,
                                          double group_tol = kDefaultGroupTol) {
    if (p < 1 || p > q) throw std::invalid_argument("need 1 <= p <= q");
    if (r < 1 || r > p || s < 1 || s > q)
        throw std::invalid_argument("need 1 <= r <= p and 1 <= s <= q");
    const long long pp = p, qq = q, rr = r, ss = s;
    const long long disc =
        qq * qq * (pp - 2 * rr) * (pp - 2 * rr) + 4 * rr * (pp - rr) * (qq - 2 * ss) * (qq - 2 * ss);
    const double root = std::sqrt(double(disc));
    const double mu1 = std::sqrt((double(pp * qq) + root) / 2.0);
    const double mu2 = std::sqrt(std::max((double(pp * qq) - root) / 2.0, 0.0));
    std::vector<double> values{mu1, mu2, -mu2, -mu1};
    values = detail::pad_with_zeros(std::move(values), p + q - 4);
    const std::size_t dim = values.size();
    return {Spectrum::group(std::move(values), dim, group_tol), std::nullopt};
}

/// Quotient spectrum for disjoint negative bicliques (r_i, s_i). The
/// quotient has order k+1: entry (i, j) = r_j c_ij with c_ii = q and
/// c_ij = q - 2 s_i - 2 s_j, border carrying sqrt(p-r) factors and corner
/// q(p-r). When the parts use every U-vertex the corner degenerates and the
/// generic reduction pipeline is used instead.
inline ClosedFormResult disjoint_bicliques_quotient(int p, int q,
                                                    const std::vector<std::pair<int, int>>& parts,
                                                    double group_tol = kDefaultGroupTol) {
    if (p < 1 || p > q) throw std::invalid_argument("need 1 <= p <= q");
    if (parts.empty()) throw std::invalid_argument("need at least one biclique part");
    long long r = 0, s = 0;
    for (const auto& [ri, si] : parts) {
        if (ri < 1 || si < 1) throw std::invalid_argument("biclique parts must be positive");
        r += ri;
        s += si;
    }
    if (r > p || s > q) throw std::invalid_argument("biclique parts exceed the bipartition");
    const int k = int(parts.size());

    if (r == p) {
        const auto g = build_from_pattern(p, q, BicliqueUnionPattern{parts});
        auto rf = reduced_form(g);
        auto spec = lift_reduced(rf, group_tol);
        return {std::move(spec), std::move(rf)};
    }

    DenseMatrix z(std::size_t(k + 1), std::size_t(k + 1));
    const double c = std::sqrt(double(p - int(r)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const long long cij =
                i == j ? q : q - 2LL * parts[std::size_t(i)].second - 2LL * parts[std::size_t(j)].second;
            z(std::size_t(i), std::size_t(j)) = double(parts[std::size_t(j)].first) * double(cij);
        }
        const long long bi = q - 2LL * parts[std::size_t(i)].second;
        z(std::size_t(i), std::size_t(k)) = c * double(bi);
        z(std::size_t(k), std::size_t(i)) = double(parts[std::size_t(i)].first) * c * double(bi);
    }
    z(std::size_t(k), std::size_t(k)) = double(q) * double(p - int(r));

    std::vector<int> part_sizes;
    part_sizes.reserve(std::size_t(k + 1));
    for (const auto& [ri, si] : parts) part_sizes.push_back(ri);
    part_sizes.push_back(1);

    ReducedForm rf{p + q - 2 * k - 2, std::move(z), std::move(part_sizes)};
    auto spec = lift_reduced(rf, group_tol);
    return {std::move(spec), std::move(rf)};
}

/// Quotient spectrum for a negative path. The quotient comes straight from
/// the path's cover block X: entry (i, j) = <row_i, row_j> + (q - s), border
/// sqrt(p - rU) * (row sum + q - s), corner q(p - rU), where rU and s count
/// the path's U- and V-side vertices and the exponent is p + q - 2 rU - 2.
/// A path using every U-vertex goes through the Gram form X Xt + (q - s) J.
inline ClosedFormResult path_quotient(int p, int q, const NegativePattern& pattern,
                                      double group_tol = kDefaultGroupTol) {
    if (p < 1 || p > q) throw std::invalid_argument("need 1 <= p <= q");
    const PathShape shape = path_shape(pattern);
    if (shape.u_count > p || shape.v_count > q)
        throw std::invalid_argument("path does not fit in the bipartition");

    const int ru = shape.u_count, s = shape.v_count;
    std::vector<std::vector<int>> x(std::size_t(ru), std::vector<int>(std::size_t(s), 1));
    for (const auto& [i, j] : shape.edges) x[std::size_t(i)][std::size_t(j)] = -1;

    const auto dot = [&x, s](int a, int b) {
        long long d = 0;
        for (int c = 0; c < s; ++c) d += x[std::size_t(a)][std::size_t(c)] * x[std::size_t(b)][std::size_t(c)];
        return d;
    };

    ReducedForm rf;
    if (ru == p) {
        DenseMatrix z{std::size_t(p), std::size_t(p)};
        for (int a = 0; a < p; ++a)
            for (int b = a; b < p; ++b) {
                z(std::size_t(a), std::size_t(b)) = double(dot(a, b) + (q - s));
                z(std::size_t(b), std::size_t(a)) = z(std::size_t(a), std::size_t(b));
            }
        rf = {q - p, std::move(z), std::vector<int>(std::size_t(p), 1)};
    } else {
        DenseMatrix z(std::size_t(ru + 1), std::size_t(ru + 1));
        for (int a = 0; a < ru; ++a)
            for (int b = a; b < ru; ++b) {
                z(std::size_t(a), std::size_t(b)) = double(dot(a, b) + (q - s));
                z(std::size_t(b), std::size_t(a)) = z(std::size_t(a), std::size_t(b));
            }
        const double border_scale = std::sqrt(double(p - ru));
        for (int a = 0; a < ru; ++a) {
            long long row_sum = 0;
            for (int c = 0; c < s; ++c) row_sum += x[std::size_t(a)][std::size_t(c)];
            const double v = border_scale * double(row_sum + (q - s));
            z(std::size_t(a), std::size_t(ru)) = v;
            z(std::size_t(ru), std::size_t(a)) = v;
        }
        z(std::size_t(ru), std::size_t(ru)) = double(q) * double(p - ru);
        rf = {p + q - 2 * ru - 2, std::move(z), std::vector<int>(std::size_t(ru + 1), 1)};
    }
    auto spec = lift_reduced(rf, group_tol);
    return {std::move(spec), std::move(rf)};
}

/// Explicit spectrum for the negative five-vertex path with both pendants on
/// the larger side: {+-mu1, +-mu2, +-2, 0^(p+q-6)} with
///   mu^2 = (pq - 4 +- sqrt(p^2 q^2 - 56 pq + 128 p + 96 q - 240)) / 2.
inline Spectrum p5_explicit(int p, int q, double group_tol = kDefaultGroupTol) {
    if (p < 2 || q < 3 || p > q) throw std::invalid_argument("need 2 <= p, 3 <= q, p <= q");
    if (p + q < 6)
        throw std::invalid_argument("explicit five-vertex path spectrum needs p + q >= 6");
    const long long pp = p, qq = q;
    const long long disc = pp * pp * qq * qq - 56 * pp * qq + 128 * pp + 96 * qq - 240;
    if (disc < 0) throw std::runtime_error("negative discriminant in five-vertex path formula");
    const double root = std::sqrt(double(disc));
    const double t = double(pp * qq - 4);
    const double mu1 = std::sqrt((t + root) / 2.0);
    const double mu2 = std::sqrt(std::max((t - root) / 2.0, 0.0));
    std::vector<double> values{mu1, mu2, 2.0, -2.0, -mu2, -mu1};
    values.insert(values.end(), std::size_t(p + q - 6), 0.0);
    const std::size_t dim = values.size();
    return Spectrum::group(std::move(values), dim, group_tol);
}

/// Spectrum of the balanced-size case p = q = k: the two extreme values
/// +-(k - 2 deg) plus -2 times every interior eigenvalue of H.
inline Spectrum regular_kk_spectrum(int k, const std::vector<std::vector<int>>& h_adj,
                                    double group_tol = kDefaultGroupTol) {
    const int degree = regular_degree(k, h_adj);
    const auto mu = detail::h_eigenvalues_desc(k, h_adj);
    std::vector<double> values;
    values.reserve(std::size_t(2 * k));
    values.push_back(double(k - 2 * degree));
    values.push_back(-double(k - 2 * degree));
    for (std::size_t i = 1; i + 1 < mu.size(); ++i) values.push_back(-2.0 * mu[i]);
    const std::size_t dim = values.size();
    return Spectrum::group(std::move(values), dim, group_tol);
}

namespace detail {

struct RegularRootPair {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

/// The two non-interior squared eigenvalues of the regular-pattern quotient:
/// alpha = (T +- sqrt(T^2 - 4 P)) / 2 with T = pq + (k-2d)^2 - k^2 and
/// P = (p-k) (q ((k-2d)^2 + k(q-k)) - k (q-2d)^2), both exact integers.
inline RegularRootPair regular_root_pair(int p, int q, int k, int degree) {
    const long long pp = p, qq = q, kk = k, dd = kk - 2LL * degree;
    const long long t = pp * qq + dd * dd - kk * kk;
    const long long prod =
        (pp - kk) * (qq * (dd * dd + kk * (qq - kk)) - kk * (qq - 2LL * degree) * (qq - 2LL * degree));
    const long long disc = t * t - 4 * prod;
    if (disc < 0) throw std::runtime_error("negative discriminant in regular-pattern formula");
    const double root = std::sqrt(double(disc));
    RegularRootPair out;
    out.alpha1 = (double(t) + root) / 2.0;
    out.alpha2 = std::max((double(t) - root) / 2.0, 0.0);
    return out;
}

}  // namespace detail

/// Spectrum of the graph on parts p, q >= k whose negative edges induce a
/// regular subgraph H on k+k vertices: +-2 mu_i for the interior
/// non-negative eigenvalues of H, the root pair +-sqrt(alpha1), +-sqrt(alpha2),
/// and p+q-2k-2 zeros (negative counts drop coinciding zero roots).
inline Spectrum regular_general_spectrum(int p, int q, int k,
                                         const std::vector<std::vector<int>>& h_adj,
                                         double group_tol = kDefaultGroupTol) {
    const int degree = regular_degree(k, h_adj);
    if (k > p || p > q) throw std::invalid_argument("need k <= p <= q");
    const auto mu = detail::h_eigenvalues_desc(k, h_adj);

    std::vector<double> values;
    values.reserve(std::size_t(p + q));
    for (int i = 1; i < k; ++i) {
        values.push_back(2.0 * mu[std::size_t(i)]);
        values.push_back(-2.0 * mu[std::size_t(i)]);
    }
    const auto roots = detail::regular_root_pair(p, q, k, degree);
    values.push_back(std::sqrt(roots.alpha1));
    values.push_back(-std::sqrt(roots.alpha1));
    values.push_back(std::sqrt(roots.alpha2));
    values.push_back(-std::sqrt(roots.alpha2));

    values = detail::pad_with_zeros(std::move(values), p + q - 2 * k - 2);
    if (int(values.size()) != p + q)
        throw std::runtime_error("spectrum bookkeeping: dimension mismatch");
    const std::size_t dim = values.size();
    return Spectrum::group(std::move(values), dim, group_tol);
}

/// Exact nonsingularity predicate for the regular negative pattern, matching
/// zero detection at |lambda| < 1e-8. Zeros are unavoidable when p < q or
/// p = q > k + 1. At p = q = k the graph is nonsingular iff k != 2 deg and
/// every interior eigenvalue of H is nonzero; at p = q = k + 1 the interior
/// values and both quotient roots must be nonzero.
inline bool nonsingularity_check(int p, int q, int k, const std::vector<std::vector<int>>& h_adj) {
    const int degree = regular_degree(k, h_adj);
    if (k > p || p > q) throw std::invalid_argument("need k <= p <= q");
    if (p != q) return false;
    const auto mu = detail::h_eigenvalues_desc(k, h_adj);
    if (p == k) {
        if (k == 2 * degree) return false;
        for (std::size_t i = 1; i + 1 < mu.size(); ++i)
            if (2.0 * std::abs(mu[i]) < kZeroTol) return false;
        return true;
    }
    if (p == k + 1) {
        for (int i = 1; i < k; ++i)
            if (2.0 * std::abs(mu[std::size_t(i)]) < kZeroTol) return false;
        const auto roots = detail::regular_root_pair(p, q, k, degree);
        return std::sqrt(roots.alpha1) >= kZeroTol && std::sqrt(roots.alpha2) >= kZeroTol;
    }
    return false;
}

/// Closed-form route dispatch on the pattern; arbitrary signings have none.
inline ClosedFormResult closed_form_spectrum(int p, int q, const NegativePattern& pattern,
                                             double group_tol = kDefaultGroupTol) {
    return std::visit(
        detail::overloaded{
            [&](const BicliquePattern& b) -> ClosedFormResult {
                return biclique_spectrum(p, q, b.r, b.s, group_tol);
            },
            [&](const BicliqueUnionPattern& u) -> ClosedFormResult {
                return disjoint_bicliques_quotient(p, q, u.parts, group_tol);
            },
            [&](const PathEvenPattern&) -> ClosedFormResult {
                return path_quotient(p, q, pattern, group_tol);
            },
            [&](const PathOddUPattern&) -> ClosedFormResult {
                return path_quotient(p, q, pattern, group_tol);
            },
            [&](const PathOddVPattern&) -> ClosedFormResult {
                return path_quotient(p, q, pattern, group_tol);
            },
            [&](const RegularPattern& rp) -> ClosedFormResult {
                return {regular_general_spectrum(p, q, rp.k, rp.h_adj, group_tol), std::nullopt};
            },
            [&](const ArbitraryPattern&) -> ClosedFormResult {
                throw std::invalid_argument("no closed form for an arbitrary signing");
            }},
        pattern);
}

}  // namespace signed_spectra
