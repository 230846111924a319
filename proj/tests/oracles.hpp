// Slow reference implementations the unit tests check the library against.
// Deliberately independent of the production code paths: exhaustive loops
// only, no shared helpers beyond the big-integer type itself.
#ifndef TRIPLESYM_TESTS_ORACLES_HPP
#define TRIPLESYM_TESTS_ORACLES_HPP

#include "triplesym/ints.hpp"

#include <optional>
#include <vector>

namespace oracles {

using triplesym::Int;

inline Int slow_mod_pow(Int base, const Int& exp, const Int& m) {
    Int acc = 1 % m;
    base %= m;
    if (base < 0) base += m;
    for (Int i = 0; i < exp; ++i) acc = acc * base % m;
    return acc;
}

inline bool slow_is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Legendre symbol by enumerating squares.
inline int slow_legendre(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    for (Int s = 1; s < p; ++s)
        if (s * s % p == a) return 1;
    return -1;
}

inline std::optional<Int> slow_sqrt_mod(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    for (Int s = 0; s <= p / 2; ++s)
        if (s * s % p == a) return s;
    return std::nullopt;
}

// Distinct roots of a polynomial (low coefficients first) by full scan.
inline long slow_count_roots(const std::vector<Int>& coeff, const Int& p) {
    long count = 0;
    for (Int x = 0; x < p; ++x) {
        Int acc = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
            acc = (acc * x + *it) % p;
            if (acc < 0) acc += p;
        }
        if (acc == 0) ++count;
    }
    return count;
}

struct Triple {
    Int x, y, z;
};

// First primitive solution of x^2 - p1 y^2 - p2 z^2 = 0 in the (x asc, y asc)
// scan order, or nothing below the Holzer bound.
inline std::optional<Triple> slow_conic_point(const Int& p1, const Int& p2) {
    Int xmax = triplesym::isqrt(p1 * p2) + 1;
    for (Int x = 1; x <= xmax; ++x)
        for (Int y = 0; p1 * y * y < x * x; ++y) {
            Int t = x * x - p1 * y * y;
            if (t % p2 != 0) continue;
            Int z2 = t / p2;
            Int z = triplesym::isqrt(z2);
            if (z * z == z2) {
                Int g = gcd(gcd(x, y), z);
                return Triple{x / g, y / g, z / g};
            }
        }
    return std::nullopt;
}

}  // namespace oracles

#endif
