#include "doctest.h"
#include "oracles.hpp"
#include "triplesym/conic.hpp"

using namespace triplesym;

namespace {
bool on_conic(const ConicPoint& s, const Int& p1, const Int& p2) {
    return s.x * s.x - p1 * s.y * s.y - p2 * s.z * s.z == 0;
}
}  // namespace

TEST_CASE("brute-force oracle reproduces the frozen small solutions") {
    auto a = oracles::slow_conic_point(5, 29);
    REQUIRE(a);
    CHECK(a->x == 7); CHECK(a->y == 2); CHECK(a->z == 1);
    auto b = oracles::slow_conic_point(13, 17);
    REQUIRE(b);
    CHECK(b->x == 9); CHECK(b->y == 1); CHECK(b->z == 2);
}

TEST_CASE("solve_legendre finds primitive points that the oracle confirms") {
    for (auto [p, q] : {std::pair<int, int>{5, 29}, {13, 17}, {29, 5}, {17, 13}}) {
        OddPrime p1(p), p2(q);
        ConicPoint s = solve_legendre(p1, p2);
        CAPTURE(p); CAPTURE(q);
        CHECK(on_conic(s, p, q));
        CHECK(gcd(gcd(abs(s.x), abs(s.y)), abs(s.z)) == 1);
        CHECK(s.x > 0);
        REQUIRE(oracles::slow_conic_point(p, q));  // solvable per oracle too
    }
}

TEST_CASE("solve_legendre rejects obstructed pairs") {
    CHECK_THROWS_WITH_AS(solve_legendre(OddPrime(5), OddPrime(13)),
                         doctest::Contains("NoSolution"), Error);
    CHECK_THROWS_WITH_AS(solve_legendre(OddPrime(5), OddPrime(5)),
                         doctest::Contains("NoSolution"), Error);
    CHECK_THROWS_WITH_AS(solve_legendre(OddPrime(3), OddPrime(13)),
                         doctest::Contains("NoSolution"), Error);
}

TEST_CASE("solve_legendre agrees with the oracle across all admissible pairs below 300") {
    auto primes = primes_below(300);
    for (const Int& a : primes) {
        if (mod(a, 4) != 1) continue;
        OddPrime p1(a);
        for (const Int& b : primes) {
            if (b == a || mod(b, 4) != 1) continue;
            OddPrime p2(b);
            if (legendre(a, p2) != 1 || legendre(b, p1) != 1) continue;
            ConicPoint s = solve_legendre(p1, p2);
            CAPTURE(a); CAPTURE(b);
            CHECK(on_conic(s, a, b));
            CHECK(gcd(gcd(abs(s.x), abs(s.y)), abs(s.z)) == 1);
        }
    }
}

TEST_CASE("verify_beta checks every condition separately") {
    CHECK(verify_beta(RedeiBeta{7, 2, 1, 5, 29}));
    CHECK(verify_beta(RedeiBeta{-15, 4, 1, 13, 17}));
    CHECK_FALSE(verify_beta(RedeiBeta{9, 1, 2, 13, 17}));    // y odd
    CHECK_FALSE(verify_beta(RedeiBeta{7, 2, 1, 13, 17}));    // wrong conic
    CHECK_FALSE(verify_beta(RedeiBeta{0, 0, 0, 5, 29}));
    CHECK_FALSE(verify_beta(RedeiBeta{14, 4, 2, 5, 29}));    // not primitive
    CHECK_FALSE(verify_beta(RedeiBeta{-7, 2, 1, 5, 29}));    // x - y = 3 mod 4
}

TEST_CASE("normalize_redei frozen examples") {
    OddPrime p5(5), p29(29), p13(13), p17(17);
    RedeiBeta a = normalize_redei(ConicPoint{7, 2, 1}, p5, p29);
    CHECK(a.x == 7); CHECK(a.y == 2); CHECK(a.z == 1);

    RedeiBeta b = normalize_redei(ConicPoint{-7, -2, -1}, p5, p29);
    CHECK(b.x == 7); CHECK(b.y == 2); CHECK(b.z == 1);   // sign orbit hit

    RedeiBeta c = normalize_redei(ConicPoint{9, 1, 2}, p13, p17);
    CHECK(c.x == -15); CHECK(c.y == 4); CHECK(c.z == 1); // needs the chord sweep
    CHECK(verify_beta(c));
}

TEST_CASE("normalize_redei rejects junk input") {
    OddPrime p5(5), p29(29);
    CHECK_THROWS_WITH_AS(normalize_redei(ConicPoint{0, 0, 0}, p5, p29),
                         doctest::Contains("InvalidSolution"), Error);
    CHECK_THROWS_WITH_AS(normalize_redei(ConicPoint{1, 1, 1}, p5, p29),
                         doctest::Contains("InvalidSolution"), Error);
}

TEST_CASE("normalized beta exists for every admissible pair below 300") {
    auto primes = primes_below(300);
    for (const Int& a : primes) {
        if (mod(a, 4) != 1) continue;
        OddPrime p1(a);
        for (const Int& b : primes) {
            if (b == a || mod(b, 4) != 1) continue;
            OddPrime p2(b);
            if (legendre(a, p2) != 1 || legendre(b, p1) != 1) continue;
            RedeiBeta beta = normalize_redei(solve_legendre(p1, p2), p1, p2);
            CAPTURE(a); CAPTURE(b);
            CHECK(verify_beta(beta));
            // norm identity: (x + y sqrt p1)(x - y sqrt p1) = p2 z^2 exactly
            CHECK(beta.x * beta.x - beta.p1 * beta.y * beta.y == beta.p2 * beta.z * beta.z);
        }
    }
}

TEST_CASE("conjugate beta is normalized and distinct") {
    RedeiBeta b{7, 2, 1, 5, 29};
    RedeiBeta c = conjugate_beta(b);
    CHECK(c.y == -2);
    CHECK(verify_beta(c));
}
