#include "doctest.h"
#include "oracles.hpp"
#include "triplesym/modarith.hpp"

#include <random>

using namespace triplesym;

TEST_CASE("mod_pow matches repeated multiplication") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(7, 1, 5) == 2);
    CHECK(mod_pow(123, 0, 17) == 1);
    CHECK(mod_pow(-3, 3, 7) == oracles::slow_mod_pow(-3, 3, 7));

    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        Int b = Int(rng() % 2000) - 1000;
        Int e = rng() % 40;
        Int m = 1 + rng() % 500;
        CAPTURE(b); CAPTURE(e); CAPTURE(m);
        CHECK(mod_pow(b, e, m) == oracles::slow_mod_pow(b, e, m));
    }
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(109));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));    // Carmichael
    CHECK_FALSE(is_prime(2047));   // strong pseudoprime to base 2
    CHECK(is_prime(Int("67280421310721")));  // 2^64+1 factor, tests the big path
    for (Int n = 2; n < 2000; ++n) CHECK(is_prime(n) == oracles::slow_is_prime(n));
}

TEST_CASE("primality certificate bound is enforced") {
    CHECK_THROWS_WITH_AS(is_prime(kPrimalityCertBound), doctest::Contains("PrimalityRangeExceeded"),
                         Error);
    CHECK_NOTHROW(is_prime(kPrimalityCertBound - 1));
}

TEST_CASE("OddPrime construction") {
    CHECK(OddPrime(5).value() == 5);
    CHECK_THROWS_AS(OddPrime(2), Error);
    CHECK_THROWS_AS(OddPrime(9), Error);
    CHECK_THROWS_AS(OddPrime(-7), Error);
}

TEST_CASE("legendre matches square enumeration") {
    CHECK(legendre(13, OddPrime(17)) == 1);
    CHECK(legendre(3, OddPrime(7)) == -1);
    CHECK(legendre(14, OddPrime(7)) == 0);
    for (Int p : {5, 13, 17, 29, 101}) {
        OddPrime q(p);
        for (Int a = -5; a < p; ++a) {
            CAPTURE(a); CAPTURE(p);
            CHECK(legendre(a, q) == oracles::slow_legendre(a, p));
        }
    }
}

TEST_CASE("legendre is multiplicative") {
    OddPrime p(229);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Int a = 1 + rng() % 228, b = 1 + rng() % 228;
        CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
}

TEST_CASE("sqrt_mod returns the smaller root and squares back") {
    CHECK(sqrt_mod(13, OddPrime(17)) == 8);
    CHECK(sqrt_mod(5, OddPrime(109)) == 21);   // other root is 88
    CHECK(sqrt_mod(0, OddPrime(7)) == 0);
    CHECK_THROWS_WITH_AS(sqrt_mod(3, OddPrime(7)), doctest::Contains("NotASquare"), Error);

    for (Int p : {5, 13, 17, 29, 41, 109, 113, 229}) {  // both 1 and 3 mod 4 shapes
        OddPrime q(p);
        for (Int a = 0; a < p; ++a) {
            auto expect = oracles::slow_sqrt_mod(a, p);
            CAPTURE(a); CAPTURE(p);
            if (!expect) {
                CHECK_THROWS_AS(sqrt_mod(a, q), Error);
            } else {
                Int s = sqrt_mod(a, q);
                CHECK(s == *expect);  // slow oracle also reports min(s, p-s)
                CHECK(s * s % p == a);
            }
        }
    }
}

TEST_CASE("polynomial root counting") {
    OddPrime p7(7);
    CHECK(count_roots_mod(PolyModP({-1, 0, 1}, p7)) == 2);   // t^2 - 1
    CHECK(count_roots_mod(PolyModP({-3, 0, 1}, p7)) == 0);   // t^2 - 3
    OddPrime p109(109);
    CHECK(count_roots_mod(PolyModP({29, 0, -14, 0, 1}, p109)) == 4);  // t^4 - 14 t^2 + 29
    CHECK_THROWS_AS(count_roots_mod(PolyModP({0}, p7)), Error);

    std::mt19937_64 rng(99);
    for (Int p : {5, 13, 101, 229}) {
        OddPrime q(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Int> c;
            int deg = 1 + int(rng() % 9);
            for (int i = 0; i <= deg; ++i) c.push_back(Int(rng() % 1000) - 500);
            PolyModP f(c, q);
            if (f.is_zero()) continue;
            CAPTURE(p); CAPTURE(deg);
            CHECK(count_roots_mod(f) == oracles::slow_count_roots(f.coeff, p));
        }
    }
}

TEST_CASE("separability detects repeated factors") {
    OddPrime p(13);
    CHECK(is_separable(PolyModP({-1, 0, 1}, p)));
    CHECK_FALSE(is_separable(PolyModP({1, 2, 1}, p)));        // (t+1)^2
    CHECK_FALSE(is_separable(PolyModP({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, p)));  // t^13
}
