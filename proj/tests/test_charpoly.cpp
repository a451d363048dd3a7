#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bht/charpoly.hpp"
#include "bht/poly.hpp"
#include "bht/specs.hpp"

using bht::IntPolynomial;
using bht::ToeplitzSpec;

namespace {

ToeplitzSpec make_spec(std::vector<long> t, int subdiag = +1) {
    ToeplitzSpec spec;
    spec.n = static_cast<int>(t.size());
    spec.t = std::move(t);
    spec.subdiag = subdiag;
    return spec;
}

}  // namespace

TEST_CASE("toeplitz recurrence base cases") {
    CHECK(bht::charpoly_toeplitz(make_spec({})) == IntPolynomial::one());
    CHECK(bht::charpoly_toeplitz(make_spec({-1})) == IntPolynomial{1, 1});
    CHECK(bht::charpoly_toeplitz(make_spec({1})) == IntPolynomial{-1, 1});
    CHECK(bht::charpoly_toeplitz(make_spec({-1, -1, -1, -1})) == IntPolynomial{8, 12, 9, 4, 1});
}

TEST_CASE("coefficient recurrence examples") {
    CHECK(bht::charpoly_coeffs(make_spec({-1, -1})) == IntPolynomial{2, 2, 1});
    // nilpotent shift matrix: z^n
    std::vector<mpz_class> shifted(8);
    shifted[7] = 1;
    CHECK(bht::charpoly_coeffs(make_spec(std::vector<long>(7, 0))) == IntPolynomial(std::move(shifted)));
    CHECK(bht::charpoly_coeffs(make_spec({1})) == IntPolynomial{-1, 1});
}

TEST_CASE("hessenberg recurrence") {
    bht::HessenbergSpec one;
    one.n = 1;
    one.upper = {7};
    one.subdiag = +1;
    CHECK(bht::charpoly_hessenberg(one) == IntPolynomial{-7, 1});

    auto spec = make_spec({-1, -1, -1});
    CHECK(bht::charpoly_hessenberg(bht::HessenbergSpec::from_toeplitz(spec)) ==
          IntPolynomial{4, 5, 3, 1});
    CHECK(bht::charpoly_hessenberg(bht::HessenbergSpec::from_toeplitz(spec)) ==
          bht::charpoly_toeplitz(spec));
}

TEST_CASE("permutation-sum oracle") {
    bht::HessenbergSpec empty;
    CHECK(bht::leibniz_oracle(empty) == IntPolynomial::one());

    bht::HessenbergSpec one;
    one.n = 1;
    one.upper = {-1};
    one.subdiag = +1;
    CHECK(bht::leibniz_oracle(one) == IntPolynomial{1, 1});

    CHECK(bht::leibniz_oracle(bht::HessenbergSpec::from_toeplitz(make_spec({-1, -1}))) ==
          IntPolynomial{2, 2, 1});

    bht::HessenbergSpec big;
    big.n = 9;
    big.upper.assign(45, 0);
    CHECK_THROWS_AS(bht::leibniz_oracle(big), std::length_error);
}

TEST_CASE("oracle agrees on random 5x5 upper triangles") {
    std::mt19937 rng(20250301);
    std::uniform_int_distribution<long> entry(-1, 1);
    for (int trial = 0; trial < 300; ++trial) {
        bht::HessenbergSpec spec;
        spec.n = 5;
        spec.subdiag = (trial % 2) ? +1 : -1;
        spec.upper.resize(15);
        for (auto& v : spec.upper) v = entry(rng);
        CHECK(bht::charpoly_hessenberg(spec) == bht::leibniz_oracle(spec));
    }
}

TEST_CASE("four routes agree exhaustively for small orders") {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t index = 0; index < bht::family_size(n, false); ++index) {
            for (int s : {+1, -1}) {
                ToeplitzSpec spec = bht::family_spec_at(n, false, index);
                spec.subdiag = s;
                IntPolynomial a = bht::charpoly_toeplitz(spec);
                CHECK(a == bht::charpoly_coeffs(spec));
                auto h = bht::HessenbergSpec::from_toeplitz(spec);
                CHECK(a == bht::charpoly_hessenberg(h));
                CHECK(a == bht::leibniz_oracle(h));
            }
        }
    }
}

TEST_CASE("subdiagonal -1 flips odd-distance contributions") {
    // M = [[0,1],[-1,0]] has characteristic polynomial z^2 + 1
    CHECK(bht::charpoly_toeplitz(make_spec({0, 1}, -1)) == IntPolynomial{1, 0, 1});
    // 1x1 case is independent of the subdiagonal
    CHECK(bht::charpoly_toeplitz(make_spec({3}, -1)) == IntPolynomial{-3, 1});
}

TEST_CASE("closed form for the all-(-1) family") {
    CHECK(bht::closed_form_maxheight(0) == IntPolynomial::one());
    CHECK(bht::closed_form_maxheight(1) == IntPolynomial{1, 1});
    CHECK(bht::closed_form_maxheight(4) == IntPolynomial{8, 12, 9, 4, 1});
    for (int n = 0; n <= 30; ++n) {
        CHECK(bht::closed_form_maxheight(n) ==
              bht::charpoly_toeplitz(make_spec(std::vector<long>(static_cast<std::size_t>(n), -1))));
    }
}

TEST_CASE("binomial double sum evaluates to the same polynomial") {
    for (int n = 0; n <= 24; ++n) {
        IntPolynomial p = bht::closed_form_maxheight(n);
        for (long z = -5; z <= 5; ++z) {
            mpq_class v = bht::closed_form_binomial_eval(n, z);
            CHECK(v.get_den() == 1);
            CHECK(v.get_num() == bht::poly_eval(p, z));
        }
    }
}

TEST_CASE("ladder exposes leading principal submatrices") {
    auto ladder = bht::charpoly_toeplitz_ladder(make_spec({-1, 0, 1, -1}));
    REQUIRE(ladder.size() == 5);
    CHECK(ladder[0] == IntPolynomial::one());
    for (int m = 1; m <= 4; ++m) {
        ToeplitzSpec prefix = make_spec({-1, 0, 1, -1});
        prefix.n = m;
        prefix.t.resize(static_cast<std::size_t>(m));
        CHECK(ladder[static_cast<std::size_t>(m)] == bht::charpoly_toeplitz(prefix));
    }
}

TEST_CASE("diagonal shift identity") {
    // spec with diagonal d equals the zero-diagonal spec composed with z - d
    std::mt19937 rng(20250302);
    std::uniform_int_distribution<long> entry(-1, 1);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<long> t(static_cast<std::size_t>(n));
        for (auto& v : t) v = entry(rng);
        long d = entry(rng);
        t[0] = 0;
        IntPolynomial zero_diag = bht::charpoly_toeplitz(make_spec(t));
        t[0] = d;
        IntPolynomial with_diag = bht::charpoly_toeplitz(make_spec(t));
        CHECK(with_diag == bht::poly_compose_shift(zero_diag, -d));
    }
}

TEST_CASE("family scanner matches per-member evaluation") {
    for (bool zero_diag : {false, true}) {
        bht::FamilyCharpolyScanner scanner(4, zero_diag);
        std::uint64_t seen = 0;
        scanner.scan(0, bht::family_size(4, zero_diag),
                     [&](std::uint64_t index, const std::vector<long>& t,
                         const std::vector<mpz_class>& coeffs) {
                         ToeplitzSpec spec = bht::family_spec_at(4, zero_diag, index);
                         CHECK(spec.t == t);
                         CHECK(IntPolynomial(std::vector<mpz_class>(coeffs)) ==
                               bht::charpoly_coeffs(spec));
                         ++seen;
                     });
        CHECK(seen == bht::family_size(4, zero_diag));
    }
    // partial ranges resume mid-odometer
    bht::FamilyCharpolyScanner scanner(5, false);
    scanner.scan(100, 130, [&](std::uint64_t index, const std::vector<long>&,
                               const std::vector<mpz_class>& coeffs) {
        CHECK(IntPolynomial(std::vector<mpz_class>(coeffs)) ==
              bht::charpoly_coeffs(bht::family_spec_at(5, false, index)));
    });
}
