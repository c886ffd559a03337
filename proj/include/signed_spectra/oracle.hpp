#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "signed_spectra/closed_form.hpp"
#include "signed_spectra/graph.hpp"
#include "signed_spectra/jacobi.hpp"
#include "signed_spectra/pattern.hpp"
#include "signed_spectra/random.hpp"
#include "signed_spectra/reduction.hpp"
#include "signed_spectra/spectrum.hpp"

namespace signed_spectra {

/// Ground-truth spectrum by direct eigendecomposition of the full adjacency
/// matrix. The matrix is assembled here from the sign table rather than
/// through the graph's adjacency helper, so agreement with the reduction
/// pipeline cross-checks the algebra and not shared code.
inline Spectrum full_spectrum(const SignedBipartiteGraph& g, double group_tol = kDefaultGroupTol) {
    const int p = g.p(), q = g.q();
    const std::size_t n = std::size_t(p + q);
    DenseMatrix a(n, n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            a(std::size_t(i), std::size_t(p + j)) = double(g.sign(i, j));
            a(std::size_t(p + j), std::size_t(i)) = double(g.sign(i, j));
        }
    auto eigs = sym_eigenvalues(a);
    const std::size_t dim = eigs.size();
    return Spectrum::group(std::move(eigs), dim, group_tol);
}

enum class Method { oracle, reduction, closedform };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::reduction: return "reduction";
        case Method::closedform: return "closedform";
    }
    throw std::invalid_argument("unknown method");
}

inline Method method_from_name(const std::string& name) {
    if (name == "oracle") return Method::oracle;
    if (name == "reduction") return Method::reduction;
    if (name == "closedform") return Method::closedform;
    throw std::invalid_argument("unknown method '" + name + "'");
}

/// A graph together with the pattern it was built from; the pattern decides
/// which closed-form route applies.
struct Instance {
    SignedBipartiteGraph graph;
    NegativePattern pattern;
};

inline Instance make_instance(int p, int q, NegativePattern pattern) {
    auto g = build_from_pattern(p, q, pattern);
    return {std::move(g), std::move(pattern)};
}

inline nlohmann::ordered_json spectrum_to_json(const Spectrum& s) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& g : s.groups())
        arr.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
    return arr;
}

struct VerificationReport {
    nlohmann::ordered_json instance;
    std::vector<std::pair<std::string, Spectrum>> methods;
    double max_dev = 0.0;
    std::vector<std::pair<std::string, bool>> checks;
    bool pass = false;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["instance"] = instance;
        auto ms = nlohmann::ordered_json::object();
        for (const auto& [name, spec] : methods) ms[name] = spectrum_to_json(spec);
        j["methods"] = std::move(ms);
        j["max_deviation"] = max_dev;
        auto cs = nlohmann::ordered_json::object();
        for (const auto& [name, ok] : checks) cs[name] = ok;
        j["checks"] = std::move(cs);
        j["pass"] = pass;
        return j;
    }
};

/// Runs the requested spectrum routes on one instance and bundles them with
/// the structural checks: pairwise route agreement, the zero-multiplicity
/// lower bound, symmetry about zero, and invariance under a seeded random
/// switching. Requesting the closed form on an arbitrary signing is an error.
inline VerificationReport verify(const Instance& inst, const std::set<Method>& methods,
                                 std::uint64_t seed = kDefaultSeed) {
    const SignedBipartiteGraph& g = inst.graph;
    VerificationReport rep;
    rep.instance = nlohmann::ordered_json{{"graph", g.to_json()},
                                          {"pattern", pattern_to_json(inst.pattern)}};

    const Spectrum oracle_spec = full_spectrum(g);
    for (Method m : methods) {
        switch (m) {
            case Method::oracle:
                rep.methods.emplace_back(method_name(m), oracle_spec);
                break;
            case Method::reduction:
                rep.methods.emplace_back(method_name(m), spectrum_via_reduction(g));
                break;
            case Method::closedform:
                if (!has_closed_form(inst.pattern))
                    throw std::invalid_argument("no closed form for an arbitrary signing");
                rep.methods.emplace_back(
                    method_name(m), closed_form_spectrum(g.p(), g.q(), inst.pattern).spectrum);
                break;
        }
    }

    rep.max_dev = 0.0;
    for (std::size_t i = 0; i < rep.methods.size(); ++i)
        for (std::size_t j = i + 1; j < rep.methods.size(); ++j)
            rep.max_dev = std::max(rep.max_dev,
                                   max_deviation(rep.methods[i].second, rep.methods[j].second));

    std::mt19937_64 rng(seed);
    const auto switched = g.switched(random_switching(g.p(), g.q(), rng));

    rep.checks.emplace_back("pairwise_agreement", rep.max_dev < kRouteTol);
    rep.checks.emplace_back("nullity_bound",
                            oracle_spec.zero_multiplicity() >= nullity_lower_bound(g));
    rep.checks.emplace_back("spectrum_symmetry", oracle_spec.symmetric_about_zero(kRouteTol));
    rep.checks.emplace_back("switching_invariance",
                            max_deviation(full_spectrum(switched), oracle_spec) < kRouteTol);

    rep.pass = true;
    for (const auto& [name, ok] : rep.checks) rep.pass = rep.pass && ok;
    return rep;
}

}  // namespace signed_spectra
