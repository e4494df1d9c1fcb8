#include "atomforge/intfactor.hpp"
#include "atomforge/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace atomforge;

TEST_CASE("factorization agrees with the trial-division oracle") {
    for (long n : {2L, 4L, 12L, 97L, 1807L, 23479L, 1244335L, 6221671L, 1679617L,
                   28553457L, 999983L * 2L}) {
        IntFactorization f = factor_integer(Int(n));
        CHECK(f.replay() == n);
        auto expected = oracles::factor(Int(n));
        REQUIRE(f.primes.size() == expected.size());
        for (const auto& [p, e] : f.primes) {
            CHECK(expected.count(p) == 1);
            CHECK(expected[p] == e);
        }
    }
}

TEST_CASE("sign handling and zero rejection") {
    IntFactorization f = factor_integer(Int(-4));
    CHECK(f.sign == -1);
    CHECK(f.primes == std::vector<std::pair<Int, unsigned>>{{Int(2), 2u}});
    CHECK(f.replay() == -4);
    CHECK_THROWS_AS(factor_integer(Int(0)), ZeroElement);
}

TEST_CASE("miller-rabin set matches trial division up to 20000") {
    for (long n = 2; n < 20000; ++n)
        CHECK(is_certified_prime(Int(n)) == oracles::is_prime(Int(n)));
}

TEST_CASE("perfect powers split without rho") {
    Int p("2177498484979393");
    FactorConfig cheap;
    cheap.rho_iterations = 4; // rho effectively disabled
    cheap.rho_polynomials = 1;
    IntFactorization f = factor_integer(p * p, cheap);
    REQUIRE(f.primes.size() == 1);
    CHECK(f.primes[0].first == p);
    CHECK(f.primes[0].second == 2);
}

TEST_CASE("pocklington certificate above the miller-rabin bound") {
    // N - 1 = 2^2 * 3 * 7 * 13 * 107 * 3469 * 164459857082920691
    Int n("66660815819717847925418677");
    CHECK(n > mr_deterministic_bound());
    CHECK(is_certified_prime(n));
    CHECK(!is_certified_prime(n * 3));
    CHECK(!is_certified_prime(n + 1));
}

TEST_CASE("overflow on cofactors that resist the budget") {
    Int a("420743244646304724409");  // 69-bit prime
    Int b("164459857082920691");     // 58-bit prime
    FactorConfig cheap;
    cheap.trial_bound = 100;
    cheap.rho_iterations = 4;
    cheap.rho_polynomials = 1;
    CHECK_THROWS_AS(factor_integer(a * b, cheap), FactorizationOverflow);
}

TEST_CASE("rho splits moderate semiprimes") {
    Int a("26164562119"), b("105708023149");
    IntFactorization f = factor_integer(a * b);
    REQUIRE(f.primes.size() == 2);
    CHECK(f.primes[0].first == a);
    CHECK(f.primes[1].first == b);
}

TEST_CASE("isqrt") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(15)) == 3);
    CHECK(isqrt(Int(16)) == 4);
    Int big("123456789123456789");
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big + 1) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
}
