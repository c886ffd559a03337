#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace signed_spectra {

/// Grouping tolerance for eigenvalue multisets.
inline constexpr double kDefaultGroupTol = 1e-8;
/// |value| below this counts as the eigenvalue zero (nullity bookkeeping).
inline constexpr double kZeroTol = 1e-8;
/// Agreement threshold between independent spectrum routes.
inline constexpr double kRouteTol = 1e-8;

struct EigenGroup {
    double value = 0.0;
    int multiplicity = 0;
    bool operator==(const EigenGroup&) const = default;
};

/// Eigenvalue multiset grouped at a tolerance, sorted by decreasing value.
class Spectrum {
public:
    Spectrum() = default;

    /// Groups raw eigenvalues: values within `tol` of their neighbour collapse
    /// into one group whose representative is the group mean.
    static Spectrum group(std::vector<double> values, std::size_t dim,
                          double tol = kDefaultGroupTol) {
        if (values.size() != dim)
            throw std::invalid_argument("eigenvalue count does not match dimension");
        std::sort(values.begin(), values.end(), std::greater<>());
        Spectrum s;
        s.tol_ = tol;
        std::size_t i = 0;
        while (i < values.size()) {
            std::size_t j = i + 1;
            double sum = values[i];
            while (j < values.size() && values[j - 1] - values[j] <= tol) {
                sum += values[j];
                ++j;
            }
            s.groups_.push_back({sum / double(j - i), int(j - i)});
            i = j;
        }
        return s;
    }

    const std::vector<EigenGroup>& groups() const { return groups_; }
    double tol() const { return tol_; }

    std::size_t dimension() const {
        std::size_t d = 0;
        for (const auto& g : groups_) d += std::size_t(g.multiplicity);
        return d;
    }

    /// Values repeated by multiplicity, decreasing.
    std::vector<double> flattened() const {
        std::vector<double> out;
        out.reserve(dimension());
        for (const auto& g : groups_)
            for (int m = 0; m < g.multiplicity; ++m) out.push_back(g.value);
        return out;
    }

    int zero_multiplicity(double zero_tol = kZeroTol) const {
        int n = 0;
        for (const auto& g : groups_)
            if (std::abs(g.value) < zero_tol) n += g.multiplicity;
        return n;
    }

    bool symmetric_about_zero(double tol) const {
        const auto v = flattened();
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(v[i] + v[n - 1 - i]) > tol) return false;
        return true;
    }

    double max_value() const { return groups_.empty() ? 0.0 : groups_.front().value; }

    bool operator==(const Spectrum&) const = default;

private:
    std::vector<EigenGroup> groups_;
    double tol_ = kDefaultGroupTol;
};

/// Largest positional difference between two sorted eigenvalue multisets,
/// infinity when the dimensions differ.
inline double max_deviation(const Spectrum& a, const Spectrum& b) {
    const auto va = a.flattened();
    const auto vb = b.flattened();
    if (va.size() != vb.size()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) d = std::max(d, std::abs(va[i] - vb[i]));
    return d;
}

inline bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol) {
    return max_deviation(a, b) <= tol;
}

/// Coefficients of prod (x - lambda) over the multiset, highest degree first.
inline std::vector<double> char_poly_coeffs(const Spectrum& s) {
    std::vector<double> coeffs{1.0};
    for (double lambda : s.flattened()) {
        coeffs.push_back(0.0);
        for (std::size_t j = coeffs.size() - 1; j >= 1; --j) coeffs[j] -= lambda * coeffs[j - 1];
    }
    return coeffs;
}

}  // namespace signed_spectra
