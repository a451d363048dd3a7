#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "bht/charpoly.hpp"
#include "bht/combinatorics.hpp"
#include "bht/specs.hpp"

TEST_CASE("triangle closed form") {
    CHECK(bht::T_closed_form(4, 2) == 5);
    CHECK(bht::T_closed_form(3, 1) == 2);
    for (long n = 1; n <= 12; ++n) CHECK(bht::T_closed_form(n, n) == 1);
    CHECK_THROWS_AS(bht::T_closed_form(4, 0), std::domain_error);
    CHECK_THROWS_AS(bht::T_closed_form(4, 5), std::domain_error);
}

TEST_CASE("generating function series") {
    auto g0 = bht::genfun_coeffs(0, 6);
    CHECK(g0 == std::vector<mpz_class>({1, 1, 2, 4, 8, 16}));
    auto g1 = bht::genfun_coeffs(1, 5);
    CHECK(g1 == std::vector<mpz_class>({1, 2, 5, 12, 28}));
    for (int i = 0; i <= 10; ++i) CHECK(bht::genfun_coeffs(i, 1)[0] == 1);
    CHECK_THROWS_AS(bht::genfun_coeffs(-1, 3), std::domain_error);
    CHECK_THROWS_AS(bht::genfun_coeffs(0, 0), std::domain_error);
}

TEST_CASE("compositions in lexicographic order") {
    auto c3 = bht::compositions(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == std::vector<int>({1, 1, 1}));
    CHECK(c3[1] == std::vector<int>({1, 2}));
    CHECK(c3[2] == std::vector<int>({2, 1}));
    CHECK(c3[3] == std::vector<int>({3}));

    CHECK(bht::compositions(1) == std::vector<std::vector<int>>{{1}});
    CHECK(bht::compositions(4).size() == 8);
    for (int n = 1; n <= 12; ++n) CHECK(bht::compositions(n).size() == (1u << (n - 1)));
    CHECK_THROWS_AS(bht::compositions(0), std::domain_error);
}

TEST_CASE("symbolic constant term matches the printed expansions") {
    CHECK(bht::symbolic_p_n0(0).to_string() == "1");
    CHECK(bht::symbolic_p_n0(1).to_string() == "t1");
    CHECK(bht::symbolic_p_n0(4).to_string() == "t1^4 + 3*t1^2*t2 + 2*t1*t3 + t2^2 + t4");
    CHECK(bht::symbolic_p_n0(5).to_string() ==
          "t1^5 + 4*t1^3*t2 + 3*t1^2*t3 + 3*t1*t2^2 + 2*t1*t4 + 2*t2*t3 + t5");
}

TEST_CASE("coefficients count compositions by part multiset") {
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        std::map<std::vector<int>, long> counts;
        for (auto parts : bht::compositions(n)) {
            std::sort(parts.begin(), parts.end());
            ++counts[parts];
        }
        auto sym = bht::symbolic_p_n0(n);
        REQUIRE(sym.terms().size() == counts.size());
        for (const auto& [monomial, coefficient] : sym.terms())
            CHECK(coefficient == counts.at(monomial));
        CHECK(sym.eval(std::vector<mpz_class>(static_cast<std::size_t>(n), 1)) == (1 << (n - 1)));
    }
}

TEST_CASE("monomial degrees sum to n") {
    for (int n = 1; n <= 10; ++n) {
        auto sym = bht::symbolic_p_n0(n);
        for (const auto& [monomial, coefficient] : sym.terms()) {
            CHECK(coefficient > 0);
            int weight = 0;
            for (int part : monomial) weight += part;
            CHECK(weight == n);
        }
    }
}

TEST_CASE("triangle and series identities against the recurrence") {
    auto ladder = bht::charpoly_toeplitz_ladder(bht::ToeplitzSpec{24, std::vector<long>(24, -1), +1});
    for (int i = 0; i <= 10; ++i) {
        for (int n = 0; n <= 10; ++n)
            CHECK(bht::T_closed_form(n + i + 1, i + 1) ==
                  ladder[static_cast<std::size_t>(i + n)].coeff(i));
        auto series = bht::genfun_coeffs(i, 14);
        for (int l = 0; l < 14; ++l)
            CHECK(series[static_cast<std::size_t>(l)] == ladder[static_cast<std::size_t>(i + l)].coeff(i));
    }
}

TEST_CASE("sign bridge to the subdiag +1 constant term") {
    std::mt19937 rng(20250501);
    std::uniform_int_distribution<long> entry(-1, 1);
    for (int n = 1; n <= 8; ++n) {
        auto sym = bht::symbolic_p_n0(n);
        for (int trial = 0; trial < 40; ++trial) {
            bht::ToeplitzSpec spec{n, std::vector<long>(static_cast<std::size_t>(n)), +1};
            std::vector<mpz_class> negated(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                spec.t[static_cast<std::size_t>(k)] = entry(rng);
                negated[static_cast<std::size_t>(k)] = -spec.t[static_cast<std::size_t>(k)];
            }
            CHECK(sym.eval(negated) == bht::charpoly_coeffs(spec).coeff(0));
        }
    }
}

TEST_CASE("eval rejects out-of-range symbols") {
    auto sym = bht::symbolic_p_n0(4);
    CHECK_THROWS_AS(sym.eval(std::vector<mpz_class>(2, 1)), std::out_of_range);
}
