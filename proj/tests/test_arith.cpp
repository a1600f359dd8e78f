#include <doctest.h>

#include <random>

#include "ambiguous/arith.hpp"
#include "oracle.hpp"

using namespace ambiguous;

TEST_CASE("is_prime")
{
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(oracle::is_prime(1000003));
    CHECK(is_prime(1000003));

    SUBCASE("agrees with trial division below 10^5")
    {
        for (std::int64_t n = 0; n < 100000; ++n) {
            REQUIRE(is_prime(static_cast<std::uint64_t>(n)) == oracle::is_prime(n));
        }
    }
    SUBCASE("large values")
    {
        CHECK(is_prime(18446744073709551557ULL));       // largest 64-bit prime
        CHECK_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to 2,3,5,7
        CHECK_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases <= 23
        CHECK_FALSE(is_prime(4294967297ULL));           // 641 * 6700417
    }
}

TEST_CASE("factorize")
{
    auto f = factorize(60);
    CHECK(f.sign() == 1);
    CHECK(f.factors() == std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});

    auto g = factorize(-420);
    CHECK(g.sign() == -1);
    CHECK(g.factors() == std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}, {7, 1}});

    auto one = factorize(1);
    CHECK(one.sign() == 1);
    CHECK(one.factors().empty());

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    SUBCASE("multiplies back exhaustively up to 10^6")
    {
        for (std::int64_t n = -1000000; n <= 1000000; ++n) {
            if (n == 0) {
                continue;
            }
            const auto fac = factorize(n);
            REQUIRE(fac.product() == n);
            std::uint64_t prev = 0;
            for (const auto& pp : fac.factors()) {
                REQUIRE(pp.prime > prev);
                REQUIRE(pp.exponent > 0);
                prev = pp.prime;
            }
        }
    }
    SUBCASE("randomized wide values")
    {
        std::mt19937_64 rng(20261016);
        std::uniform_int_distribution<std::int64_t> dist(-(1LL << 62), 1LL << 62);
        for (int i = 0; i < 300; ++i) {
            const std::int64_t n = dist(rng);
            if (n == 0) {
                continue;
            }
            const auto fac = factorize(n);
            REQUIRE(fac.product() == n);
            for (const auto& pp : fac.factors()) {
                REQUIRE(is_prime(pp.prime));
            }
        }
        const auto semiprime = factorize(4611686014132420609LL);  // (2^31 - 1)^2
        CHECK(semiprime.factors() == std::vector<PrimePower>{{2147483647, 2}});
    }
}

TEST_CASE("kronecker")
{
    CHECK(oracle::legendre(2, 7) == 1);
    CHECK(kronecker(2, 7) == 1);
    CHECK(oracle::legendre(3, 5) == -1);
    CHECK(kronecker(3, 5) == -1);
    CHECK(kronecker(10, 5) == 0);

    SUBCASE("conventions")
    {
        CHECK(kronecker(5, 1) == 1);
        CHECK(kronecker(-5, -1) == -1);
        CHECK(kronecker(5, -1) == 1);
        CHECK(kronecker(3, 2) == -1);
        CHECK(kronecker(7, 2) == 1);
        CHECK(kronecker(4, 2) == 0);
        CHECK(kronecker(1, 0) == 1);
        CHECK(kronecker(2, 0) == 0);
    }
    SUBCASE("matches square enumeration for odd primes below 1000")
    {
        for (std::int64_t p = 3; p < 1000; p += 2) {
            if (!oracle::is_prime(p)) {
                continue;
            }
            for (std::int64_t a = 0; a < p; ++a) {
                REQUIRE(kronecker(a, p) == oracle::legendre(a, p));
                REQUIRE(kronecker(a - p, p) == oracle::legendre(a, p));
            }
        }
    }
    SUBCASE("completely multiplicative in each argument")
    {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::int64_t> dist(-5000, 5000);
        for (int i = 0; i < 20000; ++i) {
            const std::int64_t a = dist(rng), b = dist(rng), n = dist(rng), m = dist(rng);
            REQUIRE(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
            if (n != 0 && m != 0) {
                REQUIRE(kronecker(a, n * m) == kronecker(a, n) * kronecker(a, m));
            }
        }
    }
}

TEST_CASE("helpers")
{
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(isqrt(18446744073709551615ULL) == 4294967295ULL);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(mod_floor(-7, 4) == 1);
    const auto e = xgcd(240, -46);
    CHECK(e.g == 2);
    CHECK(e.x * 240 + e.y * -46 == 2);
    CHECK_THROWS_AS(checked_narrow(static_cast<int128>(1) << 64), std::overflow_error);
    CHECK(split_valuation(-72, 2).exponent == 3);
    CHECK(split_valuation(-72, 2).unit == -9);
    CHECK(is_squarefree(-30));
    CHECK_FALSE(is_squarefree(18));
}
