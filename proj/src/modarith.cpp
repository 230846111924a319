#include "triplesym/modarith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace triplesym {

const Int kPrimalityCertBound("3317044064679887385961981");

namespace {
const int kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}
}  // namespace

bool is_prime(const Int& n) {
    if (n >= kPrimalityCertBound)
        throw Error("PrimalityRangeExceeded",
                    "value beyond the deterministic witness certificate bound");
    if (n < 2) return false;
    for (int w : kWitnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (int w : kWitnesses)
        if (miller_rabin_witness(n, w, d, r)) return false;
    return true;
}

OddPrime::OddPrime(Int value) : v_(std::move(value)) {
    if (v_ < 3 || (v_ & 1) == 0)
        throw Error("NotOddPrime", "value is not an odd integer >= 3");
    if (!is_prime(v_))
        throw Error("NotPrime", "compositeness witnessed by Miller-Rabin");
}

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    if (m < 1) throw Error("BadModulus", "modulus must be >= 1");
    if (exp < 0) throw Error("NegativeExponent", "mod_pow requires exp >= 0");
    if (m == 1) return 0;
    return boost::multiprecision::powm(mod(base, m), exp, m);
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r0 = m, r1 = mod(a, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw Error("NotInvertible", "gcd(a, m) != 1");
    return mod(t0, m);
}

int legendre(const Int& a, const OddPrime& p) {
    Int r = mod(a, p.value());
    if (r == 0) return 0;
    Int e = mod_pow(r, (p.value() - 1) / 2, p.value());
    return e == 1 ? 1 : -1;
}

Int sqrt_mod(const Int& a, const OddPrime& p) {
    const Int& pv = p.value();
    Int r = mod(a, pv);
    if (r == 0) return 0;
    int chi = legendre(r, p);
    if (chi == -1) throw Error("NotASquare", "argument is a quadratic nonresidue");

    Int s;
    if (pv % 4 == 3) {
        s = mod_pow(r, (pv + 1) / 4, pv);
    } else {
        // Tonelli-Shanks.  p - 1 = q * 2^e with q odd.
        Int q = pv - 1;
        unsigned e = 0;
        while ((q & 1) == 0) { q >>= 1; ++e; }
        // Deterministic nonresidue scan.
        Int z = 2;
        while (legendre(z, p) != -1) ++z;
        Int c = mod_pow(z, q, pv);
        Int x = mod_pow(r, (q + 1) / 2, pv);
        Int t = mod_pow(r, q, pv);
        unsigned m = e;
        while (t != 1) {
            Int t2 = t;
            unsigned i = 0;
            while (t2 != 1) { t2 = t2 * t2 % pv; ++i; }
            Int b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % pv;
            x = x * b % pv;
            c = b * b % pv;
            t = t * c % pv;
            m = i;
        }
        s = x;
    }
    Int other = pv - s;
    return s < other ? s : other;
}

PolyModP::PolyModP(std::vector<Int> c, const OddPrime& prime) : coeff(std::move(c)), p(prime.value()) {
    for (auto& x : coeff) x = mod(x, p);
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

Int PolyModP::eval(const Int& x) const {
    Int acc = 0, xr = mod(x, p);
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = (acc * xr + *it) % p;
    return acc;
}

PolyModP PolyModP::raw(std::vector<Int> c, Int prime) {
    PolyModP out;
    out.p = std::move(prime);
    for (auto& x : c) x = mod(x, out.p);
    while (!c.empty() && c.back() == 0) c.pop_back();
    out.coeff = std::move(c);
    return out;
}

namespace {
PolyModP make_poly(std::vector<Int> c, const Int& p) { return PolyModP::raw(std::move(c), p); }

void check_same_field(const PolyModP& a, const PolyModP& b) {
    if (a.p != b.p) throw Error("FieldMismatch", "polynomials over different primes");
}
}  // namespace

PolyModP poly_add(const PolyModP& a, const PolyModP& b) {
    check_same_field(a, b);
    std::vector<Int> c(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (size_t i = 0; i < a.coeff.size(); ++i) c[i] += a.coeff[i];
    for (size_t i = 0; i < b.coeff.size(); ++i) c[i] += b.coeff[i];
    return make_poly(std::move(c), a.p);
}

PolyModP poly_sub(const PolyModP& a, const PolyModP& b) {
    check_same_field(a, b);
    std::vector<Int> c(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (size_t i = 0; i < a.coeff.size(); ++i) c[i] += a.coeff[i];
    for (size_t i = 0; i < b.coeff.size(); ++i) c[i] -= b.coeff[i];
    return make_poly(std::move(c), a.p);
}

PolyModP poly_mul(const PolyModP& a, const PolyModP& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return make_poly({}, a.p);
    std::vector<Int> c(a.coeff.size() + b.coeff.size() - 1, 0);
    for (size_t i = 0; i < a.coeff.size(); ++i)
        for (size_t j = 0; j < b.coeff.size(); ++j)
            c[i + j] = (c[i + j] + a.coeff[i] * b.coeff[j]) % a.p;
    return make_poly(std::move(c), a.p);
}

PolyModP poly_rem(const PolyModP& a, const PolyModP& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw Error("DivideByZeroPoly", "remainder by zero polynomial");
    std::vector<Int> r = a.coeff;
    Int lead_inv = mod_inverse(b.coeff.back(), a.p);
    while (r.size() >= b.coeff.size()) {
        Int q = r.back() * lead_inv % a.p;
        size_t shift = r.size() - b.coeff.size();
        for (size_t i = 0; i < b.coeff.size(); ++i)
            r[shift + i] = mod(r[shift + i] - q * b.coeff[i], a.p);
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
    }
    return make_poly(std::move(r), a.p);
}

PolyModP poly_gcd(const PolyModP& a, const PolyModP& b) {
    check_same_field(a, b);
    PolyModP x = a, y = b;
    while (!y.is_zero()) {
        PolyModP r = poly_rem(x, y);
        x = y;
        y = r;
    }
    if (!x.is_zero()) {
        Int inv = mod_inverse(x.coeff.back(), x.p);
        for (auto& c : x.coeff) c = c * inv % x.p;
    }
    return x;
}

PolyModP poly_derivative(const PolyModP& a) {
    std::vector<Int> c;
    for (size_t i = 1; i < a.coeff.size(); ++i) c.push_back(a.coeff[i] * i);
    return make_poly(std::move(c), a.p);
}

namespace {
// X^e mod f by square and multiply in F_p[X]/(f).  deg f >= 1.
PolyModP x_pow_mod(const Int& e, const PolyModP& f) {
    PolyModP acc = make_poly({1}, f.p);
    if (e == 0) return acc;
    PolyModP base = poly_rem(make_poly({0, 1}, f.p), f);
    unsigned bits = boost::multiprecision::msb(e) + 1;
    for (unsigned i = bits; i-- > 0;) {
        acc = poly_rem(poly_mul(acc, acc), f);
        if (boost::multiprecision::bit_test(e, i)) acc = poly_rem(poly_mul(acc, base), f);
    }
    return acc;
}
}  // namespace

long count_roots_mod(const PolyModP& f) {
    if (f.is_zero()) throw Error("ZeroPolynomial", "root count of the zero polynomial");
    if (f.degree() == 0) return 0;
    PolyModP xp = x_pow_mod(f.p, f);                       // X^p mod f
    PolyModP xpmx = poly_sub(xp, poly_rem(make_poly({0, 1}, f.p), f));
    PolyModP g = poly_gcd(xpmx, f);
    return std::max<long>(g.degree(), 0);
}

bool is_separable(const PolyModP& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    PolyModP d = poly_derivative(f);
    if (d.is_zero()) return false;
    return poly_gcd(f, d).degree() == 0;
}

}  // namespace triplesym
