#ifndef TRIPLESYM_MODARITH_HPP
#define TRIPLESYM_MODARITH_HPP

#include "triplesym/ints.hpp"

#include <vector>

namespace triplesym {

// Largest value for which the fixed Miller-Rabin witness set {2,...,41} is a
// proven primality certificate (Sorenson-Webster).  Inputs at or above this
// bound are rejected rather than risk a pseudoprime sneaking in.
extern const Int kPrimalityCertBound;

// Deterministic Miller-Rabin against the fixed witness set.  n < kPrimalityCertBound.
bool is_prime(const Int& n);

// An odd prime certified at construction.  Wraps the raw value so downstream
// signatures can demand primality in the type.
class OddPrime {
public:
    explicit OddPrime(Int value);
    const Int& value() const noexcept { return v_; }
    friend bool operator==(const OddPrime& a, const OddPrime& b) { return a.v_ == b.v_; }
    friend bool operator!=(const OddPrime& a, const OddPrime& b) { return a.v_ != b.v_; }
    friend bool operator<(const OddPrime& a, const OddPrime& b) { return a.v_ < b.v_; }

private:
    Int v_;
};

// base^exp mod m, exp >= 0, m >= 1.  Result in [0, m).
Int mod_pow(const Int& base, const Int& exp, const Int& m);

// Inverse of a mod m for gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

// Legendre symbol (a/p) in {-1, 0, +1} by Euler's criterion.
int legendre(const Int& a, const OddPrime& p);

// Square root of a mod p, the smaller of the two roots (min(s, p-s)).
// Tonelli-Shanks in the 1 mod 4 case.  Throws NotASquare when (a/p) = -1.
Int sqrt_mod(const Int& a, const OddPrime& p);

// Dense polynomial over F_p, low-degree coefficients first, trimmed.
struct PolyModP {
    std::vector<Int> coeff;
    Int p;

    PolyModP(std::vector<Int> c, const OddPrime& prime);
    // Internal-use factory skipping the primality recheck.
    static PolyModP raw(std::vector<Int> c, Int prime);
    long degree() const { return static_cast<long>(coeff.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return coeff.empty(); }
    Int eval(const Int& x) const;

private:
    PolyModP() = default;
};

PolyModP poly_add(const PolyModP& a, const PolyModP& b);
PolyModP poly_sub(const PolyModP& a, const PolyModP& b);
PolyModP poly_mul(const PolyModP& a, const PolyModP& b);
PolyModP poly_rem(const PolyModP& a, const PolyModP& b);
PolyModP poly_gcd(const PolyModP& a, const PolyModP& b);  // monic or zero
PolyModP poly_derivative(const PolyModP& a);

// Number of distinct roots of f in F_p: deg gcd(X^p - X, f).  f != 0.
long count_roots_mod(const PolyModP& f);

// gcd(f, f') constant, i.e. f squarefree.
bool is_separable(const PolyModP& f);

}  // namespace triplesym

#endif
