#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "signed_spectra/closed_form.hpp"
#include "signed_spectra/oracle.hpp"
#include "signed_spectra/random.hpp"

namespace signed_spectra {

/// The K_{4,6} reference instance: sign rows (-1,-1,-1,1,1,1) and
/// (-1,1,-1,-1,1,1) on the first two U-vertices, all-positive elsewhere.
/// Its spectrum is {2 sqrt 3, 2 sqrt 2, 2, 0 x4, -2, -2 sqrt 2, -2 sqrt 3}.
inline SignedBipartiteGraph k46_reference_graph() {
    return SignedBipartiteGraph(4, 6,
                                {{-1, -1, -1, 1, 1, 1},
                                 {-1, 1, -1, -1, 1, 1},
                                 {1, 1, 1, 1, 1, 1},
                                 {1, 1, 1, 1, 1, 1}});
}

inline Spectrum k46_reference_spectrum() {
    const double a = 2.0 * std::sqrt(3.0), b = 2.0 * std::sqrt(2.0);
    return Spectrum::group({a, b, 2.0, 0.0, 0.0, 0.0, 0.0, -2.0, -b, -a}, 10);
}

namespace detail {
inline double round2(double v) { return std::round(v * 100.0) / 100.0; }

/// Matches a spectrum against reference values quoted at two decimals; a
/// half-unit either way plus the quoting slack means one unit in the last
/// printed place.
inline bool matches_two_decimals(const Spectrum& s, const std::vector<double>& expect) {
    const auto v = s.flattened();
    if (v.size() != expect.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i] - expect[i]) > 0.01 + 1e-12) return false;
    return true;
}
}  // namespace detail

/// Fixed reference instances with known spectra. Prints one line per block;
/// returns overall success.
inline bool run_golden_suite(std::ostream& out) {
    bool all = true;
    const auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        all = all && ok;
    };

    {
        const auto g = k46_reference_graph();
        const auto oracle_spec = full_spectrum(g);
        const auto reduced_spec = spectrum_via_reduction(g);
        const auto expect = k46_reference_spectrum();
        const bool ok = max_deviation(oracle_spec, reduced_spec) < 1e-9 &&
                        max_deviation(oracle_spec, expect) < 1e-9 &&
                        max_deviation(reduced_spec, expect) < 1e-9;
        report("K_{4,6} reference signing: oracle and reduction match the known spectrum", ok);
    }
    {
        const std::vector<std::pair<int, int>> parts{{2, 2}, {2, 3}};
        const auto cf = disjoint_bicliques_quotient(5, 7, parts);
        const auto g = build_from_pattern(5, 7, BicliqueUnionPattern{parts});
        const auto oracle_spec = full_spectrum(g);
        const std::vector<double> expect{4.50, 3.37, 1.82, 0, 0, 0, 0, 0, 0, -1.82, -3.37, -4.50};
        const bool ok = max_deviation(cf.spectrum, oracle_spec) < 1e-9 &&
                        detail::matches_two_decimals(cf.spectrum, expect);
        report("K_{5,7} disjoint negative bicliques: quotient route matches the oracle", ok);
    }
    {
        bool ok = true;
        for (const auto& [p, q] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {5, 9}}) {
            const auto explicit_spec = p5_explicit(p, q);
            const auto quotient_spec = path_quotient(p, q, PathOddVPattern{2}).spectrum;
            const auto g = build_from_pattern(p, q, PathOddVPattern{2});
            const auto oracle_spec = full_spectrum(g);
            ok = ok && max_deviation(explicit_spec, quotient_spec) < 1e-9 &&
                 max_deviation(explicit_spec, oracle_spec) < 1e-9;
        }
        report("five-vertex negative path family: explicit roots, quotient and oracle agree", ok);
    }
    return all;
}

/// Randomized invariants over seeded signings with p + q <= 30. Prints one
/// line per check with trial counts; returns overall success.
inline bool run_property_suite(int trials, std::uint64_t seed, std::ostream& out) {
    std::mt19937_64 rng(seed);
    int ok_routes = 0, ok_symmetry = 0, ok_bound = 0, ok_switch = 0, ok_negate = 0;
    for (int t = 0; t < trials; ++t) {
        const int p = 1 + random_below(rng, 12);
        const int q = p + random_below(rng, 30 - 2 * p + 1);
        const auto g = random_signing(p, q, rng);
        const auto oracle_spec = full_spectrum(g);

        ok_routes += max_deviation(spectrum_via_reduction(g), oracle_spec) <= kRouteTol;
        ok_symmetry += oracle_spec.symmetric_about_zero(kRouteTol);
        ok_bound += oracle_spec.zero_multiplicity() >= nullity_lower_bound(g);
        const auto f = random_switching(p, q, rng);
        ok_switch += max_deviation(full_spectrum(g.switched(f)), oracle_spec) <= kRouteTol;
        ok_negate += max_deviation(full_spectrum(g.negated()), oracle_spec) <= kRouteTol;
    }
    const auto report = [&](const std::string& name, int ok) {
        out << (ok == trials ? "[PASS] " : "[FAIL] ") << name << ": " << ok << "/" << trials
            << " trials\n";
        return ok == trials;
    };
    bool all = true;
    all &= report("reduction route matches the oracle", ok_routes);
    all &= report("spectrum symmetric about zero", ok_symmetry);
    all &= report("zero multiplicity above the cover bound", ok_bound);
    all &= report("spectrum invariant under switching", ok_switch);
    all &= report("spectrum invariant under negation", ok_negate);
    return all;
}

}  // namespace signed_spectra
