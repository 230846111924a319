#ifndef TRIPLESYM_EISENSTEIN_HPP
#define TRIPLESYM_EISENSTEIN_HPP

#include "triplesym/ints.hpp"
#include "triplesym/modarith.hpp"

#include <array>
#include <string>
#include <utility>

namespace triplesym {

// Element a + b*zeta of Z[zeta], zeta a primitive cube root of unity
// (zeta^2 = -1 - zeta).  Norm a^2 - ab + b^2.
struct Eisenstein {
    Int a, b;

    Eisenstein() : a(0), b(0) {}
    Eisenstein(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const Eisenstein& u, const Eisenstein& v) {
        return u.a == v.a && u.b == v.b;
    }
    friend bool operator!=(const Eisenstein& u, const Eisenstein& v) { return !(u == v); }

    friend Eisenstein operator+(const Eisenstein& u, const Eisenstein& v) {
        return {u.a + v.a, u.b + v.b};
    }
    friend Eisenstein operator-(const Eisenstein& u, const Eisenstein& v) {
        return {u.a - v.a, u.b - v.b};
    }
    friend Eisenstein operator-(const Eisenstein& u) { return {-u.a, -u.b}; }
    friend Eisenstein operator*(const Eisenstein& u, const Eisenstein& v) {
        // (a1 + b1 z)(a2 + b2 z) = a1 a2 - b1 b2 + (a1 b2 + a2 b1 - b1 b2) z
        return {u.a * v.a - u.b * v.b, u.a * v.b + u.b * v.a - u.b * v.b};
    }

    Eisenstein conj() const { return {a - b, -b}; }
    Int norm() const { return a * a - a * b + b * b; }
    std::string str() const;
};

// The six units +-1, +-zeta, +-zeta^2.
const std::array<Eisenstein, 6>& eisenstein_units();
bool is_unit(const Eisenstein& u);

// lambda = 1 + 2*zeta = sqrt(-3); the ramified prime above 3 (lambda^2 = -3).
inline Eisenstein eisenstein_lambda() { return {1, 2}; }

// Nearest-lattice-point division: a = q*b + r with N(r) <= (3/4) N(b).
std::pair<Eisenstein, Eisenstein> eis_divmod(const Eisenstein& a, const Eisenstein& b);
Eisenstein eis_gcd(Eisenstein a, Eisenstein b);  // up to units
bool eis_divides(const Eisenstein& d, const Eisenstein& a);
Eisenstein eis_div_exact(const Eisenstein& a, const Eisenstein& d);
Eisenstein eis_pow(Eisenstein base, Int exp);

// base^exp with coordinates reduced mod the rational integer m > 1 throughout.
Eisenstein eis_pow_mod(const Eisenstein& base, const Int& exp, const Int& m);

// Is pi a prime element of Z[zeta]?  (Norm a rational prime, or a rational
// prime q = 2 mod 3 times a unit, or a unit multiple of lambda.)
bool eis_is_prime(const Eisenstein& pi);

// A prime of Z[zeta] split from / lying over the rational prime q != 3.
// q = 1 mod 3: returns pi with N(pi) = q (via gcd(q, w - zeta), w a cube root
// of unity mod q); q = 2 mod 3: returns q itself (inert).  RamifiedPrime for q = 3.
Eisenstein prime_above(const OddPrime& q);

// pi = 1 mod 3*lambda, the normalization picking one associate out of six.
bool is_primary(const Eisenstein& pi);

// The unique primary associate among the six unit multiples of pi.
// Requires pi prime with N(pi) = 1 mod 9 (NotPrime / NotOneModNine otherwise).
Eisenstein primary_associate(const Eisenstein& pi);

// Cubic residue character exponent of alpha at the primary prime pi, in Z/3:
// alpha^((N(pi)-1)/3) = zeta^k in the residue field.  NotCoprime if pi | alpha.
int cubic_residue_symbol(const Eisenstein& alpha, const Eisenstein& pi);

}  // namespace triplesym

#endif
