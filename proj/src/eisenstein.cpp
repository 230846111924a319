#include "triplesym/eisenstein.hpp"

namespace triplesym {

std::string Eisenstein::str() const {
    auto zeta_part = [](const Int& c) -> std::string {
        if (c == 1) return "zeta";
        if (c == -1) return "-zeta";
        return c.str() + "*zeta";
    };
    if (b == 0) return a.str();
    if (a == 0) return zeta_part(b);
    return a.str() + (b > 0 ? "+" : "") + zeta_part(b);
}

const std::array<Eisenstein, 6>& eisenstein_units() {
    static const std::array<Eisenstein, 6> units = {
        Eisenstein{1, 0},  Eisenstein{-1, 0},  // +-1
        Eisenstein{0, 1},  Eisenstein{0, -1},  // +-zeta
        Eisenstein{-1, -1}, Eisenstein{1, 1},  // +-zeta^2 = -+(1 + zeta)
    };
    return units;
}

bool is_unit(const Eisenstein& u) { return u.norm() == 1; }

namespace {
// Floor division for cpp_int (operator/ truncates toward zero).
Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if (n % d != 0 && ((n < 0) != (d < 0))) --q;
    return q;
}

Int round_div(const Int& n, const Int& d) {  // nearest integer, d > 0
    return floor_div(2 * n + d, 2 * d);
}
}  // namespace

std::pair<Eisenstein, Eisenstein> eis_divmod(const Eisenstein& a, const Eisenstein& b) {
    if (b.is_zero()) throw Error("DivideByZero", "eisenstein division by zero");
    Int nb = b.norm();
    Eisenstein num = a * b.conj();
    Eisenstein q{round_div(num.a, nb), round_div(num.b, nb)};
    Eisenstein r = a - q * b;
    // hexagonal lattice rounding: N(r) <= (3/4) N(b) < N(b)
    return {q, r};
}

Eisenstein eis_gcd(Eisenstein a, Eisenstein b) {
    while (!b.is_zero()) {
        Eisenstein r = eis_divmod(a, b).second;
        a = b;
        b = r;
    }
    return a;
}

bool eis_divides(const Eisenstein& d, const Eisenstein& a) {
    if (d.is_zero()) return a.is_zero();
    return eis_divmod(a, d).second.is_zero();
}

Eisenstein eis_div_exact(const Eisenstein& a, const Eisenstein& d) {
    auto [q, r] = eis_divmod(a, d);
    if (!r.is_zero()) throw Error("InexactDivision", "eisenstein division left a remainder");
    return q;
}

Eisenstein eis_pow(Eisenstein base, Int exp) {
    if (exp < 0) throw Error("NegativeExponent", "eis_pow requires exp >= 0");
    Eisenstein acc{1, 0};
    while (exp > 0) {
        if ((exp & 1) != 0) acc = acc * base;
        base = base * base;
        exp >>= 1;
    }
    return acc;
}

Eisenstein eis_pow_mod(const Eisenstein& base, const Int& exp, const Int& m) {
    if (exp < 0) throw Error("NegativeExponent", "eis_pow_mod requires exp >= 0");
    if (m < 2) throw Error("BadModulus", "modulus must be >= 2");
    Eisenstein acc{1, 0};
    Eisenstein b{mod(base.a, m), mod(base.b, m)};
    Int e = exp;
    while (e > 0) {
        if ((e & 1) != 0) {
            acc = acc * b;
            acc.a = mod(acc.a, m);
            acc.b = mod(acc.b, m);
        }
        b = b * b;
        b.a = mod(b.a, m);
        b.b = mod(b.b, m);
        e >>= 1;
    }
    return acc;
}

bool eis_is_prime(const Eisenstein& pi) {
    Int n = pi.norm();
    if (n < 2) return false;
    if (n < kPrimalityCertBound && is_prime(n)) return true;  // split primes and lambda
    // Inert case: unit * q with q a rational prime, q = 2 mod 3.
    Int r = isqrt(n);
    if (r * r != n || !is_prime(r) || mod(r, 3) != 2) return false;
    return pi.a % r == 0 && pi.b % r == 0;
}

Eisenstein prime_above(const OddPrime& q) {
    const Int& qv = q.value();
    if (qv == 3) throw Error("RamifiedPrime", "3 ramifies in Z[zeta]");
    if (mod(qv, 3) == 2) return {qv, 0};
    // q = 1 mod 3: w = (-1 + sqrt(-3)) / 2 is a primitive cube root of 1 mod q.
    Int r = sqrt_mod(qv - 3, q);
    Int w = mod((r - 1) * mod_inverse(2, qv), qv);
    Eisenstein pi = eis_gcd({qv, 0}, {w, -1});
    if (pi.norm() != qv) throw Error("SplitFailed", "gcd did not produce a prime of norm q");
    return pi;
}

bool is_primary(const Eisenstein& pi) {
    return eis_divides({3, 6}, pi - Eisenstein{1, 0});  // pi = 1 mod 3*lambda
}

Eisenstein primary_associate(const Eisenstein& pi) {
    if (!eis_is_prime(pi)) throw Error("NotPrime", "argument is not an eisenstein prime");
    if (mod(pi.norm(), 9) != 1)
        throw Error("NotOneModNine", "norm " + pi.norm().str() + " is not 1 mod 9");
    Eisenstein found;
    int hits = 0;
    for (const Eisenstein& u : eisenstein_units()) {
        Eisenstein cand = u * pi;
        if (is_primary(cand)) {
            found = cand;
            ++hits;
        }
    }
    if (hits != 1)
        throw Error("PrimaryMissing", "expected exactly one primary associate, found " +
                                          std::to_string(hits));
    return found;
}

int cubic_residue_symbol(const Eisenstein& alpha, const Eisenstein& pi) {
    if (!eis_is_prime(pi)) throw Error("NotPrime", "character modulus is not prime");
    if (!is_primary(pi)) throw Error("NotPrimary", "character modulus is not primary");
    Int n = pi.norm();

    if (is_prime(n)) {
        // Split: residue field F_p, zeta has image -a/b mod p.
        const Int& p = n;
        Int rz = mod(-pi.a * mod_inverse(pi.b, p), p);
        Int abar = mod(alpha.a + alpha.b * rz, p);
        if (abar == 0) throw Error("NotCoprime", "alpha vanishes at pi");
        Int t = mod_pow(abar, (p - 1) / 3, p);
        if (t == 1) return 0;
        if (t == rz) return 1;
        if (t == mod(rz * rz, p)) return 2;
        throw Error("CharacterFailure", "cubic character landed outside mu_3");
    }

    // Inert: residue field F_{q^2} = F_q[zeta].
    Int q = isqrt(n);
    Eisenstein abar{mod(alpha.a, q), mod(alpha.b, q)};
    if (abar.is_zero()) throw Error("NotCoprime", "alpha vanishes at pi");
    Eisenstein t = eis_pow_mod(abar, (n - 1) / 3, q);
    if (t == Eisenstein{1, 0}) return 0;
    if (t == Eisenstein{0, 1}) return 1;
    if (t == Eisenstein{mod(Int(-1), q), mod(Int(-1), q)}) return 2;  // zeta^2 = -1 - zeta
    throw Error("CharacterFailure", "cubic character landed outside mu_3");
}

}  // namespace triplesym
