#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "signed_spectra/graph.hpp"

namespace signed_spectra {

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// One +/-1 draw. Uses raw engine bits instead of a distribution so the
/// stream is identical across standard library implementations.
inline int random_sign(std::mt19937_64& rng) { return (rng() & 1u) ? -1 : 1; }

/// Uniform-ish draw in [0, n); deterministic across platforms.
inline int random_below(std::mt19937_64& rng, int n) {
    return int(rng() % std::uint64_t(n));
}

inline std::vector<std::vector<int>> random_sign_table(int p, int q, std::mt19937_64& rng) {
    std::vector<std::vector<int>> rows(std::size_t(p), std::vector<int>(std::size_t(q), 1));
    for (auto& row : rows)
        for (auto& v : row) v = random_sign(rng);
    return rows;
}

inline SignedBipartiteGraph random_signing(int p, int q, std::mt19937_64& rng) {
    return SignedBipartiteGraph(p, q, random_sign_table(p, q, rng));
}

inline SwitchingFunction random_switching(int p, int q, std::mt19937_64& rng) {
    SwitchingFunction f;
    f.theta_u.resize(std::size_t(p));
    f.theta_v.resize(std::size_t(q));
    for (auto& v : f.theta_u) v = random_sign(rng);
    for (auto& v : f.theta_v) v = random_sign(rng);
    return f;
}

/// Seed fallback chain: the environment variable, else the given default.
inline std::uint64_t seed_from_env_or(std::uint64_t fallback,
                                      const char* var = "SIGNED_SPECTRA_SEED") {
    if (const char* s = std::getenv(var)) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0') return v;
    }
    return fallback;
}

}  // namespace signed_spectra
