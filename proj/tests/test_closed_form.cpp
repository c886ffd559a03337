#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "helpers.hpp"
#include "signed_spectra/signed_spectra.hpp"

using namespace signed_spectra;
using Catch::Matchers::WithinAbs;
using test_helpers::h_disjoint_four_cycles;
using test_helpers::h_even_cycle;
using test_helpers::h_perfect_matching;

TEST_CASE("single biclique spectrum") {
    SECTION("matches the oracle") {
        const auto g = build_from_pattern(5, 7, BicliquePattern{2, 2});
        REQUIRE(max_deviation(biclique_spectrum(5, 7, 2, 2).spectrum, full_spectrum(g)) < 1e-9);
    }
    SECTION("all-negative graph") {
        const auto cf = biclique_spectrum(3, 5, 3, 5);
        REQUIRE_THAT(cf.spectrum.max_value(), WithinAbs(std::sqrt(15.0), 1e-10));
        REQUIRE(cf.spectrum.zero_multiplicity() == 6);
    }
    SECTION("positive-block mirror has the same spectrum") {
        const auto g = build_from_pattern(4, 5, BicliquePattern{2, 3});
        REQUIRE(max_deviation(biclique_spectrum(4, 5, 2, 3).spectrum,
                              full_spectrum(g.negated())) < 1e-9);
    }
    SECTION("degenerate sizes below four vertices") {
        const auto s11 = biclique_spectrum(1, 1, 1, 1).spectrum;
        REQUIRE(s11.dimension() == 2);
        REQUIRE_THAT(s11.max_value(), WithinAbs(1.0, 1e-12));
        const auto s12 = biclique_spectrum(1, 2, 1, 1).spectrum;
        REQUIRE(s12.dimension() == 3);
        REQUIRE(s12.zero_multiplicity() == 1);
    }
    SECTION("parameter bounds") {
        REQUIRE_THROWS_AS(biclique_spectrum(3, 2, 1, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(biclique_spectrum(2, 3, 3, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(biclique_spectrum(2, 3, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("disjoint bicliques quotient") {
    SECTION("reference instance quotient matrix and spectrum") {
        const auto cf = disjoint_bicliques_quotient(5, 7, {{2, 2}, {2, 3}});
        REQUIRE(cf.quotient.has_value());
        const auto& z = cf.quotient->z;
        REQUIRE(z.rows() == 3);
        const double expect[3][3] = {{14, -6, 3}, {-6, 14, 1}, {6, 2, 7}};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) REQUIRE(z(i, j) == expect[i][j]);
        REQUIRE(cf.quotient->zero_exponent == 6);

        const auto g = build_from_pattern(5, 7, BicliqueUnionPattern{{{2, 2}, {2, 3}}});
        REQUIRE(max_deviation(cf.spectrum, full_spectrum(g)) < 1e-9);

        const auto v = cf.spectrum.flattened();
        const double two_dp[12] = {4.50, 3.37, 1.82, 0, 0, 0, 0, 0, 0, -1.82, -3.37, -4.50};
        for (std::size_t i = 0; i < 12; ++i) REQUIRE_THAT(v[i], WithinAbs(two_dp[i], 0.01));
    }
    SECTION("single part specializes to the biclique formula") {
        for (const auto& [p, q, r, s] :
             std::vector<std::array<int, 4>>{{4, 6, 2, 2}, {5, 7, 3, 4}, {3, 3, 1, 1}}) {
            const auto a = disjoint_bicliques_quotient(p, q, {{r, s}}).spectrum;
            const auto b = biclique_spectrum(p, q, r, s).spectrum;
            REQUIRE(max_deviation(a, b) < 1e-9);
        }
    }
    SECTION("parts spanning every U-vertex use the reduction fallback") {
        const auto cf = disjoint_bicliques_quotient(4, 6, {{2, 2}, {2, 3}});
        const auto g = build_from_pattern(4, 6, BicliqueUnionPattern{{{2, 2}, {2, 3}}});
        REQUIRE(max_deviation(cf.spectrum, full_spectrum(g)) < 1e-9);
        REQUIRE(int(cf.spectrum.dimension()) == 10);
    }
    SECTION("multiplicities always sum to p + q") {
        REQUIRE(int(disjoint_bicliques_quotient(6, 8, {{1, 2}, {2, 1}, {1, 1}}).spectrum.dimension()) ==
                14);
    }
    SECTION("bounds") {
        REQUIRE_THROWS_AS(disjoint_bicliques_quotient(3, 3, {}), std::invalid_argument);
        REQUIRE_THROWS_AS(disjoint_bicliques_quotient(3, 3, {{2, 2}, {2, 2}}),
                          std::invalid_argument);
    }
}

TEST_CASE("path quotient") {
    SECTION("five-vertex pendants-in-V quotient has the documented entries") {
        const int p = 5, q = 7;
        const auto cf = path_quotient(p, q, PathOddVPattern{2});
        REQUIRE(cf.quotient.has_value());
        const auto& z = cf.quotient->z;
        REQUIRE(z.rows() == 3);
        const double c = std::sqrt(double(p - 2));
        REQUIRE(z(0, 0) == q);
        REQUIRE(z(0, 1) == q - 4);
        REQUIRE(z(1, 1) == q);
        REQUIRE_THAT(z(0, 2), WithinAbs(c * (q - 4), 1e-12));
        REQUIRE_THAT(z(1, 2), WithinAbs(c * (q - 4), 1e-12));
        REQUIRE(z(2, 2) == q * (p - 2));
        REQUIRE(cf.quotient->zero_exponent == p + q - 6);
    }
    SECTION("two-vertex path equals the 1x1 biclique") {
        const auto a = path_quotient(4, 6, PathEvenPattern{1}).spectrum;
        const auto b = biclique_spectrum(4, 6, 1, 1).spectrum;
        REQUIRE(max_deviation(a, b) < 1e-9);
    }
    SECTION("four-vertex path matches the oracle") {
        const auto g = build_from_pattern(4, 5, PathEvenPattern{2});
        REQUIRE(max_deviation(path_quotient(4, 5, PathEvenPattern{2}).spectrum, full_spectrum(g)) <
                1e-9);
    }
    SECTION("path using every U-vertex goes through the gram form") {
        const auto g = build_from_pattern(2, 3, PathOddVPattern{2});
        const auto cf = path_quotient(2, 3, PathOddVPattern{2});
        REQUIRE(cf.quotient->zero_exponent == 1);
        REQUIRE(cf.quotient->z.rows() == 2);
        REQUIRE(max_deviation(cf.spectrum, full_spectrum(g)) < 1e-9);
    }
    SECTION("fit violations") {
        REQUIRE_THROWS_AS(path_quotient(2, 5, PathOddUPattern{2}), std::invalid_argument);
        REQUIRE_THROWS_AS(path_quotient(3, 3, PathEvenPattern{4}), std::invalid_argument);
        REQUIRE_THROWS_AS(path_quotient(3, 3, BicliquePattern{1, 1}), std::invalid_argument);
    }
}

TEST_CASE("five-vertex path explicit spectrum") {
    SECTION("matches oracle and quotient") {
        for (const auto& [p, q] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {2, 4}}) {
            const auto g = build_from_pattern(p, q, PathOddVPattern{2});
            const auto s = p5_explicit(p, q);
            REQUIRE(max_deviation(s, full_spectrum(g)) < 1e-9);
            REQUIRE(max_deviation(s, path_quotient(p, q, PathOddVPattern{2}).spectrum) < 1e-9);
        }
    }
    SECTION("ordering of the explicit roots") {
        const auto v = p5_explicit(4, 5).flattened();
        REQUIRE(v.front() >= 2.0 - 1e-12);
        REQUIRE(v.front() * v[1] >= 0.0);
    }
    SECTION("sizes below six vertices are rejected") {
        REQUIRE_THROWS_AS(p5_explicit(2, 3), std::invalid_argument);
        REQUIRE_THROWS_AS(p5_explicit(1, 5), std::invalid_argument);
    }
}

TEST_CASE("balanced-size regular pattern") {
    SECTION("perfect matching on 3 + 3 vertices") {
        const auto s = regular_kk_spectrum(3, h_perfect_matching(3));
        const auto expect = Spectrum::group({2, 2, 1, -1, -2, -2}, 6);
        REQUIRE(max_deviation(s, expect) < 1e-9);
        const auto g = build_from_pattern(3, 3, RegularPattern{3, h_perfect_matching(3)});
        REQUIRE(max_deviation(s, full_spectrum(g)) < 1e-9);
    }
    SECTION("H equal to the whole graph (all negative)") {
        const int k = 3;
        std::vector<std::vector<int>> h(6, std::vector<int>(6, 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) h[i][k + j] = h[k + j][i] = 1;
        const auto s = regular_kk_spectrum(k, h);
        REQUIRE(s.zero_multiplicity() == 2 * k - 2);
        REQUIRE_THAT(s.max_value(), WithinAbs(double(k), 1e-10));
    }
    SECTION("six-cycle inside K_{3,3}") {
        const auto s = regular_kk_spectrum(3, h_even_cycle(3));
        const auto expect = Spectrum::group({2, 2, 1, -1, -2, -2}, 6);
        REQUIRE(max_deviation(s, expect) < 1e-9);
        const auto g = build_from_pattern(3, 3, RegularPattern{3, h_even_cycle(3)});
        REQUIRE(max_deviation(s, full_spectrum(g)) < 1e-9);
    }
}

TEST_CASE("general regular pattern") {
    SECTION("balanced sizes reduce to the k = p = q case") {
        for (const auto& h : {h_perfect_matching(3), h_even_cycle(3)}) {
            const auto a = regular_general_spectrum(3, 3, 3, h);
            const auto b = regular_kk_spectrum(3, h);
            REQUIRE(max_deviation(a, b) < 1e-9);
        }
    }
    SECTION("matching k = 2 inside K_{3,4}") {
        const auto g = build_from_pattern(3, 4, RegularPattern{2, h_perfect_matching(2)});
        REQUIRE(max_deviation(regular_general_spectrum(3, 4, 2, h_perfect_matching(2)),
                              full_spectrum(g)) < 1e-9);
    }
    SECTION("degree-1 patterns across several sizes") {
        for (int k = 1; k <= 4; ++k)
            for (const auto& [p, q] : std::vector<std::pair<int, int>>{{k, k + 1}, {k + 1, k + 1}}) {
                const auto g = build_from_pattern(p, q, RegularPattern{k, h_perfect_matching(k)});
                INFO("k=" << k << " p=" << p << " q=" << q);
                REQUIRE(max_deviation(regular_general_spectrum(p, q, k, h_perfect_matching(k)),
                                      full_spectrum(g)) < 1e-9);
            }
    }
    SECTION("bounds") {
        REQUIRE_THROWS_AS(regular_general_spectrum(1, 3, 2, h_perfect_matching(2)),
                          std::invalid_argument);
    }
}

TEST_CASE("nonsingularity") {
    SECTION("agrees with the oracle on the matching inside K_{2,2}") {
        const auto g = build_from_pattern(2, 2, RegularPattern{2, h_perfect_matching(2)});
        const bool oracle_nonsingular = full_spectrum(g).zero_multiplicity() == 0;
        REQUIRE(oracle_nonsingular == false);
        REQUIRE(nonsingularity_check(2, 2, 2, h_perfect_matching(2)) == oracle_nonsingular);
    }
    SECTION("single negative edge in K_{1,1}") {
        REQUIRE(nonsingularity_check(1, 1, 1, h_perfect_matching(1)));
    }
    SECTION("any p < q is singular") {
        REQUIRE_FALSE(nonsingularity_check(2, 3, 2, h_perfect_matching(2)));
        REQUIRE_FALSE(nonsingularity_check(3, 4, 3, h_even_cycle(3)));
    }
    SECTION("six-cycle in K_{3,3} is nonsingular") {
        const auto g = build_from_pattern(3, 3, RegularPattern{3, h_even_cycle(3)});
        REQUIRE(full_spectrum(g).zero_multiplicity() == 0);
        REQUIRE(nonsingularity_check(3, 3, 3, h_even_cycle(3)));
    }
    SECTION("singular H forces singularity at balanced sizes") {
        REQUIRE_FALSE(nonsingularity_check(4, 4, 4, h_disjoint_four_cycles(2)));
    }
    SECTION("one size step above k agrees with the oracle") {
        for (int k = 1; k <= 3; ++k) {
            const auto g = build_from_pattern(k + 1, k + 1, RegularPattern{k, h_perfect_matching(k)});
            const bool oracle_nonsingular = full_spectrum(g).zero_multiplicity() == 0;
            INFO("k=" << k);
            REQUIRE(nonsingularity_check(k + 1, k + 1, k, h_perfect_matching(k)) ==
                    oracle_nonsingular);
        }
    }
}

TEST_CASE("positive-edge mirrors have the same spectrum") {
    // flipping every sign swaps the roles of the negative and positive
    // pattern; the closed forms must not notice
    const std::vector<NegativePattern> cases{
        BicliqueUnionPattern{{{1, 2}, {2, 1}}},
        RegularPattern{3, h_even_cycle(3)},
        PathOddUPattern{2},
    };
    for (const auto& pattern : cases) {
        const auto g = build_from_pattern(5, 6, pattern);
        const auto cf = closed_form_spectrum(5, 6, pattern);
        REQUIRE(max_deviation(cf.spectrum, full_spectrum(g.negated())) < 1e-9);
    }
}

TEST_CASE("closed form dispatch") {
    const auto g = build_from_pattern(4, 6, BicliquePattern{2, 2});
    const auto cf = closed_form_spectrum(4, 6, BicliquePattern{2, 2});
    REQUIRE(max_deviation(cf.spectrum, full_spectrum(g)) < 1e-9);
    REQUIRE(cf.spectrum.symmetric_about_zero(1e-9));
    REQUIRE_THROWS_AS(closed_form_spectrum(2, 2, ArbitraryPattern{{{1, 1}, {1, 1}}}),
                      std::invalid_argument);
}
