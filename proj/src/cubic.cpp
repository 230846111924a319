#include "triplesym/cubic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace triplesym {

namespace {

// Enough precision to pin lattice points of several-hundred-digit norms
// (the discriminant screen feeds in disc_m ~ nrm^2 * disc_g^3).
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

Real to_real(const Int& x) { return Real(x); }

// Complex embedding of a + b*zeta: (a - b/2, b*sqrt(3)/2).
std::pair<Real, Real> embed(const Eisenstein& w) {
    static const Real half_sqrt3 = sqrt(Real(3)) / 2;
    return {to_real(w.a) - to_real(w.b) / 2, to_real(w.b) * half_sqrt3};
}

Int round_to_int(const Real& x) {
    return boost::multiprecision::round(x).convert_to<Int>();
}

// Exact k-th root extraction (k = 2 or 3) by complex estimate plus lattice
// neighborhood check.  Returns a root gamma with gamma^k == w.
bool root_box_hit(const Eisenstein& w, const Int& nr, int k, const Int& a0, const Int& b0,
                  Eisenstein& out) {
    for (int da = -1; da <= 1; ++da)
        for (int db = -1; db <= 1; ++db) {
            Eisenstein g{a0 + da, b0 + db};
            if (g.norm() != nr) continue;
            Eisenstein p = g * g;
            if (k == 3) p = p * g;
            if (p == w) {
                out = g;
                return true;
            }
        }
    return false;
}

std::optional<Eisenstein> eis_kth_root(const Eisenstein& w, int k) {
    if (w.is_zero()) return Eisenstein{0, 0};
    Int nr;
    {
        Int n = w.norm(), r;
        if (k == 3) {
            if (!perfect_cube_root(n, r)) return std::nullopt;
        } else {
            if (!is_perfect_square(n)) return std::nullopt;
            r = isqrt(n);
        }
        nr = r;
    }
    // Root location only needs |error| < 1: hardware doubles suffice until the
    // root magnitude approaches 1e13; the exact g^k == w compare below keeps
    // either path honest.
    {
        double xa = w.a.convert_to<double>(), xb = w.b.convert_to<double>();
        double x = xa - xb / 2, y = xb * (std::sqrt(3.0) / 2);
        double rho = std::hypot(x, y);
        double mag = std::pow(rho, 1.0 / k);
        if (std::isfinite(mag) && mag < 1e13) {
            double phi = std::atan2(y, x);
            const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
            for (int j = 0; j < k; ++j) {
                double psi = (phi + 2 * 3.14159265358979323846 * j) / k;
                double re = mag * std::cos(psi), im = mag * std::sin(psi);
                Int a0(std::round(re + im * inv_sqrt3));
                Int b0(std::round(2 * im * inv_sqrt3));
                Eisenstein g;
                if (root_box_hit(w, nr, k, a0, b0, g)) return g;
            }
            return std::nullopt;
        }
    }
    static const Real pi_const = atan2(Real(0), Real(-1));
    static const Real inv_sqrt3 = 1 / sqrt(Real(3));
    auto [x, y] = embed(w);
    Real rho = sqrt(x * x + y * y);
    Real mag = pow(rho, Real(1) / k);
    Real phi = atan2(y, x);
    for (int j = 0; j < k; ++j) {
        Real psi = (phi + 2 * pi_const * j) / k;
        Real re = mag * cos(psi), im = mag * sin(psi);
        Int a0 = round_to_int(re + im * inv_sqrt3);
        Int b0 = round_to_int(2 * im * inv_sqrt3);
        Eisenstein g;
        if (root_box_hit(w, nr, k, a0, b0, g)) return g;
    }
    return std::nullopt;
}

// w = unit * gamma^k decomposition; returns gamma (the unit is implied).
// Unit cubes are +-1 and unit squares are the powers of zeta, so only the
// quotient unit classes need trying.
std::optional<Eisenstein> unit_power_split(const Eisenstein& w, int k) {
    static const Eisenstein zeta{0, 1};
    if (k == 3) {
        Eisenstein wu = w;
        for (int j = 0; j < 3; ++j, wu = wu * zeta)
            if (auto g = eis_kth_root(wu, 3)) return g;
        return std::nullopt;
    }
    for (const Eisenstein& u : {Eisenstein{1, 0}, Eisenstein{-1, 0}}) {
        if (auto g = eis_kth_root(w * u, k)) return g;
    }
    return std::nullopt;
}

Int strip_factor(Eisenstein& w, const Eisenstein& d) {
    Int count = 0;
    while (!w.is_zero() && eis_divides(d, w)) {
        w = eis_div_exact(w, d);
        ++count;
    }
    return count;
}

}  // namespace

PrimaryPrime::PrimaryPrime(const Eisenstein& pi) : pi_(pi) {
    if (!eis_is_prime(pi)) throw Error("NotPrime", pi.str() + " is not an eisenstein prime");
    if (!is_primary(pi)) throw Error("NotPrimary", pi.str() + " is not 1 mod 3*lambda");
    norm_ = pi.norm();
    if (mod(norm_, 9) != 1)
        throw Error("NotOneModNine", "primary prime with norm not 1 mod 9");
    split_ = is_prime(norm_);
    rchar_ = split_ ? norm_ : isqrt(norm_);
}

AdmissibleTriple3 admissible3(const Eisenstein& pi1, const Eisenstein& pi2,
                              const Eisenstein& pi3) {
    PrimaryPrime q1(pi1), q2(pi2), q3(pi3);
    const PrimaryPrime* q[3] = {&q1, &q2, &q3};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (q[i]->norm() == q[j]->norm() &&
                eis_divides(q[i]->value(), q[j]->value()))
                throw Error("NotDistinct", "pi" + std::to_string(i + 1) + " and pi" +
                                               std::to_string(j + 1) + " are associates");
    const std::pair<int, int> order[6] = {{1, 2}, {1, 3}, {2, 3}, {2, 1}, {3, 1}, {3, 2}};
    for (auto [i, j] : order)
        if (cubic_residue_symbol(q[i - 1]->value(), q[j - 1]->value()) != 0)
            throw Error("CubicObstruction",
                        "(pi" + std::to_string(i) + "/pi" + std::to_string(j) + ") != 1");
    return AdmissibleTriple3{q1, q2, q3};
}

ThetaElement theta_mul(const ThetaElement& x, const ThetaElement& y, const Eisenstein& pi1) {
    return ThetaElement{{
        x.c[0] * y.c[0] + pi1 * (x.c[1] * y.c[2] + x.c[2] * y.c[1]),
        x.c[0] * y.c[1] + x.c[1] * y.c[0] + pi1 * (x.c[2] * y.c[2]),
        x.c[0] * y.c[2] + x.c[1] * y.c[1] + x.c[2] * y.c[0],
    }};
}

ThetaElement theta_scale(const ThetaElement& x, const Eisenstein& s) {
    return ThetaElement{{x.c[0] * s, x.c[1] * s, x.c[2] * s}};
}

Eisenstein relative_norm(const ThetaElement& t, const Eisenstein& pi1) {
    const Eisenstein &a = t.c[0], &b = t.c[1], &c = t.c[2];
    return a * a * a + pi1 * (b * b * b) + pi1 * pi1 * (c * c * c) -
           Eisenstein{3, 0} * pi1 * a * b * c;
}

ThetaElement tau0_twist(const ThetaElement& t) {
    const Eisenstein zeta{0, 1}, zeta2{-1, -1};
    return ThetaElement{{t.c[0], zeta * t.c[1], zeta2 * t.c[2]}};
}

// ---------------------------------------------------------------------------
// Residue field k3 of a prime above p3: F_p (split) or F_q[zeta] (inert).
// Elements are Eisenstein pairs with reduced coordinates; split keeps b = 0.

namespace {

class ResidueField {
public:
    explicit ResidueField(const PrimaryPrime& p3)
        : split_(p3.split()), m_(p3.residue_char()) {
        ord_ = split_ ? m_ : m_ * m_;
        if (split_) {
            const Eisenstein& pi = p3.value();
            rz_ = mod(-pi.a * mod_inverse(pi.b, m_), m_);
        }
    }

    const Int& order() const { return ord_; }
    bool split() const { return split_; }

    Eisenstein reduce(const Eisenstein& x) const {
        if (split_) return {mod(x.a + x.b * rz_, m_), 0};
        return {mod(x.a, m_), mod(x.b, m_)};
    }
    Eisenstein add(const Eisenstein& a, const Eisenstein& b) const {
        return {mod(a.a + b.a, m_), mod(a.b + b.b, m_)};
    }
    Eisenstein sub(const Eisenstein& a, const Eisenstein& b) const {
        return {mod(a.a - b.a, m_), mod(a.b - b.b, m_)};
    }
    Eisenstein mul(const Eisenstein& a, const Eisenstein& b) const {
        if (split_) return {a.a * b.a % m_, 0};
        Eisenstein p = a * b;
        return {mod(p.a, m_), mod(p.b, m_)};
    }
    Eisenstein inv(const Eisenstein& a) const {
        if (split_) return {mod_inverse(a.a, m_), 0};
        // (u + v zeta)^-1 = conj / N with everything mod q
        Int n = mod(a.norm(), m_);
        Int ninv = mod_inverse(n, m_);
        Eisenstein c = a.conj();
        return {mod(c.a * ninv, m_), mod(c.b * ninv, m_)};
    }
    Eisenstein pow(Eisenstein base, Int e) const {
        Eisenstein acc = one();
        base = reduce(base);
        while (e > 0) {
            if ((e & 1) != 0) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    Eisenstein one() const { return {1, 0}; }
    Eisenstein omega() const { return split_ ? Eisenstein{rz_, 0} : Eisenstein{0, 1}; }

    // exponent k with x^((order-1)/3) = omega^k
    int chi_exponent(const Eisenstein& x) const {
        Eisenstein t = pow(x, (ord_ - 1) / 3);
        if (t == one()) return 0;
        Eisenstein w = omega();
        if (t == w) return 1;
        if (t == mul(w, w)) return 2;
        throw Error("CharacterFailure", "power character landed outside mu_3");
    }

    // All cube roots of x (empty or three, sorted), Adleman-Manders-Miller.
    std::vector<Eisenstein> cube_roots(const Eisenstein& x0) const {
        Eisenstein x = reduce(x0);
        if (x.is_zero()) return {Eisenstein{0, 0}};
        if (chi_exponent(x) != 0) return {};
        Int ordx = ord_ - 1;
        Int t = ordx;
        int s = 0;
        while (t % 3 == 0) { t /= 3; ++s; }
        Int three_s = 1;
        for (int i = 0; i < s; ++i) three_s *= 3;

        // deterministic non-cube scan
        Eisenstein g{0, 0};
        if (split_) {
            for (Int c = 2;; ++c) {
                if (chi_exponent({c, 0}) != 0) { g = {c, 0}; break; }
            }
        } else {
            for (Int c = 0;; ++c) {
                if (chi_exponent({c, 1}) != 0) { g = {c, 1}; break; }
            }
        }
        Eisenstein h = pow(g, t);  // order exactly 3^s

        Int alpha = t == 1 ? Int(0) : mod_inverse(Int(3), t);
        Eisenstein c0 = pow(x, alpha);
        Eisenstein sigma = pow(x, t);

        // Pohlig-Hellman digits of dlog_h(sigma)
        Eisenstein omega_s = pow(h, three_s / 3);
        Int d = 0, p3i = 1;
        for (int i = 0; i < s; ++i) {
            Eisenstein e = pow(mul(sigma, inv(pow(h, d))), three_s / (3 * p3i));
            Int digit;
            if (e == one()) digit = 0;
            else if (e == omega_s) digit = 1;
            else digit = 2;
            d += digit * p3i;
            p3i *= 3;
        }
        Int m3 = (3 * alpha - 1) / t;
        if (mod(d, 3) != 0)  // chi(x) = 0 forces 3 | d
            throw Error("CubeRootFailure", "discrete log not divisible by 3");
        Int corr = mod(-(d / 3) * m3, three_s);
        Eisenstein root = mul(c0, pow(h, corr));
        if (mul(mul(root, root), root) != x)
            throw Error("CubeRootFailure", "AMM produced a non-root");

        Eisenstein w = omega();
        std::vector<Eisenstein> roots = {root, mul(root, w), mul(root, mul(w, w))};
        std::sort(roots.begin(), roots.end(), [](const Eisenstein& a, const Eisenstein& b) {
            return a.a != b.a ? a.a < b.a : a.b < b.b;
        });
        return roots;
    }

    // --- dense polynomials over the field, low coefficients first ---
    using Poly = std::vector<Eisenstein>;

    Poly trim(Poly f) const {
        while (!f.empty() && f.back().is_zero()) f.pop_back();
        return f;
    }
    Poly p_mul(const Poly& a, const Poly& b) const {
        if (a.empty() || b.empty()) return {};
        Poly c(a.size() + b.size() - 1, Eisenstein{0, 0});
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = add(c[i + j], mul(a[i], b[j]));
        return trim(std::move(c));
    }
    Poly p_rem(Poly a, const Poly& b) const {
        Eisenstein lead_inv = inv(b.back());
        while (a.size() >= b.size()) {
            Eisenstein q = mul(a.back(), lead_inv);
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = sub(a[shift + i], mul(q, b[i]));
            a = trim(std::move(a));
            if (a.empty()) break;
        }
        return a;
    }
    Poly p_gcd(Poly a, Poly b) const {
        a = trim(std::move(a));
        b = trim(std::move(b));
        while (!b.empty()) {
            Poly r = p_rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }
    Poly p_derivative(const Poly& f) const {
        Poly d;
        for (size_t i = 1; i < f.size(); ++i)
            d.push_back(mul(f[i], Eisenstein{Int(i), 0}));
        return trim(std::move(d));
    }
    // X^order mod f by square and multiply
    Poly x_pow_order_mod(const Poly& f) const {
        Poly acc = {one()};
        Poly base = p_rem({Eisenstein{0, 0}, one()}, f);
        Int e = ord_;
        unsigned bits = boost::multiprecision::msb(e) + 1;
        for (unsigned i = bits; i-- > 0;) {
            acc = p_rem(p_mul(acc, acc), f);
            if (boost::multiprecision::bit_test(e, i)) acc = p_rem(p_mul(acc, base), f);
        }
        return acc;
    }
    bool separable(const Poly& f) const {
        Poly d = p_derivative(f);
        if (d.empty()) return false;
        return p_gcd(f, d).size() == 1;
    }
    long count_distinct_roots(const Poly& f) const {
        Poly xq = x_pow_order_mod(f);
        // xq - X
        Poly diff = xq;
        if (diff.size() < 2) diff.resize(2, Eisenstein{0, 0});
        diff[1] = sub(diff[1], one());
        diff = trim(std::move(diff));
        Poly g = p_gcd(f, diff);
        return g.empty() ? 0 : static_cast<long>(g.size()) - 1;
    }

private:
    bool split_;
    Int m_, ord_, rz_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Theta verification

struct ThetaVerifier::Aux {
    struct BatteryPrime {
        Int ell;
        Int rz;                     // zeta image mod ell
        std::array<Int, 3> roots;   // cube roots of pi1-bar mod ell
    };
    std::vector<BatteryPrime> primes;
    // lambda splits totally in L/F when pi1 = 1 mod 9; the three evaluations
    // u -> lambda_roots[i] mod 3^7 realize the residue maps at those primes.
    std::array<Eisenstein, 3> lambda_roots;
};

namespace {
constexpr int kBatterySize = 24;   // ~3^-24 false-accept odds for a wrong class
constexpr int kBatteryMinUsed = 12;

Int reduce_at(const Eisenstein& w, const Int& rz, const Int& ell) {
    return mod(w.a + w.b * rz, ell);
}
}  // namespace

ThetaVerifier::ThetaVerifier(const PrimaryPrime& p1, const PrimaryPrime& p2)
    : p1_(p1), p2_(p2) {
    if (!p1.rational() || !p2.rational())
        throw Error("NotRationalPrime", "theta verification handles rational pairs only");
    auto aux = std::make_shared<Aux>();
    Int skip = 3 * p1.norm() * p2.norm();
    for (unsigned long bound = 4096; aux->primes.size() < kBatterySize; bound *= 4) {
        if (bound > 1u << 22)
            throw Error("BatteryExhausted", "could not collect auxiliary split primes");
        aux->primes.clear();
        for (const Int& ell : primes_below(bound)) {
            if (aux->primes.size() >= kBatterySize) break;
            if (mod(ell, 3) != 1 || skip % ell == 0) continue;
            OddPrime lp(ell);
            Eisenstein q = prime_above(lp);
            Int rz = mod(-q.a * mod_inverse(q.b, ell), ell);
            Int pi1bar = reduce_at(p1.value(), rz, ell);
            if (pi1bar == 0 || mod_pow(pi1bar, (ell - 1) / 3, ell) != 1) continue;
            std::array<Int, 3> roots;
            int found = 0;
            for (Int x = 1; x < ell && found < 3; ++x)
                if (mod_pow(x, 3, ell) == pi1bar) roots[found++] = x;
            if (found != 3) continue;
            aux->primes.push_back({ell, rz, roots});
        }
    }

    // cube roots of pi1 in Z[zeta]/3^7.  pi1 = -q1 = 1 mod 9 makes pi1 a cube
    // in the 3-adic field, the roots cluster into the three lambda-adic ones
    // (cluster key: value mod 9), each representative within lambda^12 of the
    // exact root.  Seed mod 3^5 by brute force, then lift.
    {
        const long m0 = 243, m = 2187;
        long pa = mod(p1.value().a, m).convert_to<long>();
        long pb = mod(p1.value().b, m).convert_to<long>();
        auto is_root = [&](long a, long b, long mm) {
            // (a+b zeta)^3 = pi1 mod mm
            long ya = (a * a - b * b) % mm, yb = (2 * a * b - b * b) % mm;
            long za = (ya * a - yb * b) % mm, zb = (ya * b + yb * a - yb * b) % mm;
            return ((za - pa) % mm + mm) % mm == 0 && ((zb - pb) % mm + mm) % mm == 0;
        };
        std::vector<std::pair<long, long>> seeds;
        for (long a = 0; a < m0; ++a)
            for (long b = 0; b < m0; ++b)
                if (is_root(a, b, m0)) seeds.emplace_back(a, b);
        std::map<std::pair<long, long>, Eisenstein> clusters;
        for (auto [a0, b0] : seeds)
            for (long s = 0; s < m / m0; ++s)
                for (long t = 0; t < m / m0; ++t)
                    if (is_root(a0 + m0 * s, b0 + m0 * t, m))
                        clusters.try_emplace({a0 % 9, b0 % 9},
                                             Eisenstein{a0 + m0 * s, b0 + m0 * t});
        if (clusters.size() != 3)
            throw Error("LambdaSplitFailure", "unexpected root clusters over lambda");
        int k = 0;
        for (auto& [key, rep] : clusters) aux->lambda_roots[k++] = rep;
    }
    aux_ = std::move(aux);
}

ThetaCheck verify_theta(const ThetaElement& theta, const PrimaryPrime& p1,
                        const PrimaryPrime& p2) {
    return ThetaVerifier(p1, p2).check(theta);
}

ThetaCheck ThetaVerifier::check(const ThetaElement& theta) const {
    ThetaCheck out;
    out.pi2_exponent = 0;
    out.lambda_valuation = 0;
    const Eisenstein& pi1 = p1_.value();
    const Eisenstein& pi2 = p2_.value();

    if (theta.c[0].is_zero() && theta.c[1].is_zero() && theta.c[2].is_zero()) {
        out.reason = "ZeroElement";
        return out;
    }

    Eisenstein nrm = relative_norm(theta, pi1);
    if (nrm.is_zero()) {
        out.reason = "ZeroNorm";
        return out;
    }

    // characteristic cubic g(S) = S^3 + c2 S^2 + c1 S + c0 of theta over F
    const Eisenstein three{3, 0};
    Eisenstein c2 = -(three * theta.c[0]);
    Eisenstein c1 = three * (theta.c[0] * theta.c[0] - pi1 * theta.c[1] * theta.c[2]);
    Eisenstein c0 = -nrm;
    Eisenstein disc_g = Eisenstein{18, 0} * c2 * c1 * c0 - Eisenstein{4, 0} * c2 * c2 * c2 * c0 +
                        c2 * c2 * c1 * c1 - Eisenstein{4, 0} * c1 * c1 * c1 -
                        Eisenstein{27, 0} * c0 * c0;
    if (disc_g.is_zero()) {
        out.reason = "NotAGenerator";  // theta lies in a proper subfield of L
        return out;
    }

    // (1) norm support: N(theta) = unit * pi2^e * cube
    {
        Eisenstein rest = nrm;
        out.pi2_exponent = strip_factor(rest, pi2);
        auto gamma = unit_power_split(rest, 3);
        if (!gamma) {
            out.reason = "NormSupport";
            return out;
        }
        out.cube_part = *gamma;
    }

    // (1b) content: a rational (Z[zeta]) factor of theta is invisible to the
    // norm and orientation tests but ramifies its own primes unless it is a
    // cube away from lambda, pi1, pi2.
    {
        Eisenstein content = eis_gcd(eis_gcd(theta.c[0], theta.c[1]), theta.c[2]);
        strip_factor(content, eisenstein_lambda());
        strip_factor(content, pi1);
        strip_factor(content, pi2);
        if (!unit_power_split(content, 3)) {
            out.reason = "ContentObstruction";
            return out;
        }
    }

    // (2) exact unramifiedness over 3: lambda splits totally in L (pi1 is a
    // local cube), and L(theta^{1/3}) is unramified at a degree-one prime
    // above lambda iff theta there is lambda^{3k} times a unit congruent to
    // +-1 mod lambda^3.  (Unit cubes are exactly +-(1 mod lambda^4); the
    // classes +-(1 + c*lambda^3) cut out the unramified cubic extension of
    // Q_3(zeta).)  Roots are certified mod lambda^12, so stripping up to
    // nine lambda digits still decides the class mod lambda^3.
    {
        const Eisenstein lam = eisenstein_lambda();
        const Eisenstein lam3{3, 6};  // lambda^3 = -3*lambda, same ideal as 3*lambda
        const long m = 2187;
        Int vsum = 0;
        for (int i = 0; i < 3; ++i) {
            const Eisenstein& x = aux_->lambda_roots[i];
            Eisenstein t = theta.c[0] + x * (theta.c[1] + x * theta.c[2]);
            t = Eisenstein{mod(t.a, m), mod(t.b, m)};
            int v = 0;
            while (v <= 9 && eis_divides(lam, t)) {
                auto [q, r] = eis_divmod(t, lam);
                t = q;
                ++v;
            }
            if (v > 9) {
                out.reason = "LambdaDeep";  // valuation beyond certified precision
                return out;
            }
            if (v % 3 != 0) {
                out.reason = "LambdaRamified(v=" + std::to_string(v) + ")";
                return out;
            }
            if (!eis_divides(lam3, t - Eisenstein{1, 0}) &&
                !eis_divides(lam3, t + Eisenstein{1, 0})) {
                out.reason = "LambdaRamifiedUnit";
                return out;
            }
            vsum += v;
        }
        out.lambda_valuation = vsum;
    }

    // (3) Galois orientation: tau0(theta)/theta = pi2^i mod (L*)^3, i must be 1.
    // Tested as w_i = tau0(theta) * theta^2 * pi2^(3-i) being a cube at every
    // battery prime (theta^-1 = theta^2 and pi2^-i = pi2^(3-i) modulo cubes).
    {
        ThetaElement theta2 = theta_mul(theta, theta, pi1);
        ThetaElement base = theta_mul(tau0_twist(theta), theta2, pi1);
        int pass_mask = 0;
        bool starved = false;
        for (int i = 0; i < 3; ++i) {
            ThetaElement w = theta_scale(base, eis_pow(pi2, 3 - i));
            bool pass = true;
            int used = 0;
            for (const auto& bp : aux_->primes) {
                std::array<Int, 3> wb = {reduce_at(w.c[0], bp.rz, bp.ell),
                                         reduce_at(w.c[1], bp.rz, bp.ell),
                                         reduce_at(w.c[2], bp.rz, bp.ell)};
                bool usable = true;
                std::array<Int, 3> vals;
                for (int r = 0; r < 3; ++r) {
                    const Int& rt = bp.roots[r];
                    vals[r] = mod(wb[0] + rt * (wb[1] + rt * wb[2]), bp.ell);
                    if (vals[r] == 0) { usable = false; break; }
                }
                if (!usable) continue;
                ++used;
                for (int r = 0; r < 3 && pass; ++r)
                    if (mod_pow(vals[r], (bp.ell - 1) / 3, bp.ell) != 1) pass = false;
                if (!pass) break;
            }
            if (pass && used < kBatteryMinUsed) starved = true;
            if (pass) pass_mask |= 1 << i;
        }
        if (starved) {
            out.reason = "BatteryStarved";  // too few usable auxiliary primes to decide
            return out;
        }
        if (pass_mask != (1 << 1)) {
            out.reason = "GaloisOrientation(mask=" + std::to_string(pass_mask) + ")";
            return out;
        }
        out.galois_exponent = 1;
    }

    // (4) discriminant support screen: disc(T^9 ...) = -3^9 nrm^2 disc_g^3
    // must sit on {lambda, pi1, pi2} up to a square.
    {
        Eisenstein disc_m = -(eis_pow({3, 0}, 9) * nrm * nrm * disc_g * disc_g * disc_g);
        strip_factor(disc_m, eisenstein_lambda());
        strip_factor(disc_m, pi1);
        strip_factor(disc_m, pi2);
        if (!unit_power_split(disc_m, 2)) {
            out.reason = "DiscSupport";
            return out;
        }
    }

    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------
// Theta search.  A valid theta satisfies (theta) = Q_i Q_j^2 b^3 with Q_i,
// Q_j among the three primes of L = F(u), u^3 = pi1, above q2, so candidates
// are short generators of the Z[zeta]-modules J = Q_i Q_j^2 C^3 inside the
// maximal order O_L = Z[zeta]<1, w, nu>, w = (u-1)/lambda, nu = (1+u+u^2)/3
// (both integral: pi1 = 1 mod 9 makes pi1 a local cube, so lambda splits
// totally in L).  Small correction ideals C absorb 3-torsion of the class
// group.  Generators come from LLL on the Minkowski embedding followed by a
// bounded coefficient sweep; each survivor of the norm test is converted to
// the integral representative 3*lambda*theta (a cube twist, so the Kummer
// class is unchanged) and unit-twisted by -1, -zeta, -zeta^2 to sample the
// three lambda classes.  Candidates are ordered by coordinate height, then
// enumeration rank, and the first one the verifier accepts wins -- the same
// result for a fixed input regardless of the job count.

namespace {

using OVec = std::array<Eisenstein, 3>;  // coordinates in the basis {1, w, nu}

// multiplication table of O_L; g = (pi1-1)/(3*lambda), e = (pi1-1)/9:
//   w^2 = 1 + lambda w - nu,   w nu = g,   nu^2 = 3e + e lambda w + nu
struct MaxOrder {
    Eisenstein lambda{1, 2};
    Eisenstein g;
    Int e;

    explicit MaxOrder(const Eisenstein& pi1) {
        e = (pi1.a - 1) / 9;
        auto [gq, gr] = eis_divmod(Eisenstein{(pi1.a - 1) / 3, 0}, lambda);
        g = gq;
    }

    OVec mul(const OVec& x, const OVec& y) const {
        const Eisenstein &p = x[0], &q = x[1], &r = x[2];
        const Eisenstein &s = y[0], &t = y[1], &v = y[2];
        Eisenstein E{e, 0}, E3{3 * e, 0};
        return {p * s + q * t + g * (q * v + r * t) + E3 * (r * v),
                p * t + q * s + lambda * (q * t) + E * lambda * (r * v),
                p * v + r * s - q * t + r * v};
    }

    // 3*lambda*(p + q w + r nu) in the power basis {1, u, u^2}
    std::array<Eisenstein, 3> integral_rep(const OVec& v) const {
        Eisenstein three{3, 0};
        Eisenstein rl = v[2] * lambda;
        return {three * lambda * v[0] - three * v[1] + rl, three * v[1] + rl, rl};
    }
};

// triangular Z[zeta]-basis of the module spanned by gens (Euclidean column
// elimination; Z[zeta] is norm-Euclidean).  basis[k] has its pivot in
// position 2-k, so the module index over O is the product of pivot norms.
std::vector<OVec> module_basis(std::vector<OVec> gens) {
    std::vector<OVec> basis;
    for (int row = 2; row >= 0; --row) {
        while (true) {
            int nz = -1, cnt = 0;
            for (size_t i = 0; i < gens.size(); ++i)
                if (!gens[i][row].is_zero()) {
                    ++cnt;
                    if (nz < 0 || gens[i][row].norm() < gens[nz][row].norm()) nz = (int)i;
                }
            if (cnt == 0) break;
            if (cnt == 1) {
                basis.push_back(gens[nz]);
                gens.erase(gens.begin() + nz);
                break;
            }
            OVec piv = gens[nz];
            for (size_t i = 0; i < gens.size(); ++i) {
                if ((int)i == nz || gens[i][row].is_zero()) continue;
                auto [qq, rr] = eis_divmod(gens[i][row], piv[row]);
                for (int k = 0; k < 3; ++k) gens[i][k] = gens[i][k] - qq * piv[k];
            }
            std::vector<OVec> keep;
            for (auto& g : gens)
                if (!(g[0].is_zero() && g[1].is_zero() && g[2].is_zero()))
                    keep.push_back(g);
            gens = std::move(keep);
        }
    }
    return basis;
}

std::vector<OVec> module_product(const MaxOrder& ord, const std::vector<OVec>& A,
                                 const std::vector<OVec>& B) {
    std::vector<OVec> gens;
    for (const auto& a : A)
        for (const auto& b : B) gens.push_back(ord.mul(a, b));
    return module_basis(std::move(gens));
}

Int module_index(const std::vector<OVec>& basis) {
    if (basis.size() != 3) return 0;
    Int idx = 1;
    for (int k = 0; k < 3; ++k) idx *= basis[k][2 - k].norm();
    return idx;
}

// rank-6 LLL over Z in double precision; z tracks the integer coordinates
// (Z[zeta]-pairs of the three O-basis columns) of each reduced row.
struct Lat6 {
    std::array<std::array<double, 6>, 6> b;
    std::array<std::array<long long, 6>, 6> z;
};

void lll6(Lat6& L) {
    auto dot = [](const std::array<double, 6>& u, const std::array<double, 6>& v) {
        double s = 0;
        for (int i = 0; i < 6; ++i) s += u[i] * v[i];
        return s;
    };
    const double delta = 0.99;
    std::array<std::array<double, 6>, 6> bs;
    std::array<std::array<double, 6>, 6> mu{};
    std::array<double, 6> B{};
    auto gso = [&] {
        for (int i = 0; i < 6; ++i) {
            bs[i] = L.b[i];
            for (int j = 0; j < i; ++j) {
                mu[i][j] = dot(L.b[i], bs[j]) / B[j];
                for (int k = 0; k < 6; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
            }
            B[i] = dot(bs[i], bs[i]);
        }
    };
    gso();
    int k = 1, guard = 0;
    while (k < 6 && ++guard < 20000) {
        for (int j = k - 1; j >= 0; --j) {
            double m = std::round(mu[k][j]);
            if (m != 0) {
                for (int t = 0; t < 6; ++t) {
                    L.b[k][t] -= m * L.b[j][t];
                    L.z[k][t] -= (long long)m * L.z[j][t];
                }
                gso();
            }
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(L.b[k], L.b[k - 1]);
            std::swap(L.z[k], L.z[k - 1]);
            gso();
            k = std::max(k - 1, 1);
        }
    }
}

struct E128 {
    __int128 a, b;  // a + b*zeta
};

inline E128 e128_mul(const E128& u, const E128& v) {
    return {u.a * v.a - u.b * v.b, u.a * v.b + u.b * v.a - u.b * v.b};
}

}  // namespace

ThetaElement theta_search(const PrimaryPrime& p1, const PrimaryPrime& p2,
                          const ThetaSearchOptions& opt) {
    if (!p1.rational() || !p2.rational())
        throw Error("NotRationalPrime",
                    "search supports rational primary primes only (pi = -q, q = 8 mod 9)");
    if (cubic_residue_symbol(p1.value(), p2.value()) != 0 ||
        cubic_residue_symbol(p2.value(), p1.value()) != 0)
        throw Error("CubicObstruction", "mutual cubic symbols must vanish");
    if (p1.residue_char() > 100000 || p2.residue_char() > 100000)
        throw Error("SearchRangeExceeded",
                    "lattice search supports residue characteristics up to 1e5");

    const Eisenstein pi1 = p1.value(), pi2 = p2.value();
    const long q1 = p1.residue_char().convert_to<long>();
    const long q2 = p2.residue_char().convert_to<long>();
    const MaxOrder ord(pi1);
    ThetaVerifier verifier(p1, p2);

    const OVec e0{Eisenstein{1, 0}, Eisenstein{0, 0}, Eisenstein{0, 0}};
    const OVec e1{Eisenstein{0, 0}, Eisenstein{1, 0}, Eisenstein{0, 0}};
    const OVec e2{Eisenstein{0, 0}, Eisenstein{0, 0}, Eisenstein{1, 0}};
    const std::vector<OVec> whole = {e0, e1, e2};

    // module of the degree-one prime (pp, u - c): u - c = (1 - c) + lambda w
    auto prime_module = [&](const Eisenstein& pp, const Eisenstein& c) {
        std::vector<OVec> g;
        OVec umc{Eisenstein{1, 0} - c, ord.lambda, Eisenstein{0, 0}};
        for (const OVec& bv : whole) {
            OVec s;
            for (int k = 0; k < 3; ++k) s[k] = pp * bv[k];
            g.push_back(s);
            g.push_back(ord.mul(umc, bv));
        }
        return module_basis(std::move(g));
    };

    // the three primes of L above q2: pi1 has three cube roots mod q2
    ResidueField k2(p2);
    std::vector<Eisenstein> roots = k2.cube_roots(k2.reduce(pi1));
    if (roots.size() != 3)
        throw Error("CharacterFailure", "pi1 is not a cube modulo pi2 despite admissibility");

    // degree-one primes above lambda: kernels of the ring maps O -> F_3,
    // (w, nu) -> (0,1), (1,0), (-1,0)
    std::vector<std::vector<OVec>> lambda_primes;
    for (auto [a, b] : std::array<std::pair<long, long>, 3>{{{0, 1}, {1, 0}, {-1, 0}}}) {
        std::vector<OVec> g;
        OVec wa{Eisenstein{-a, 0}, Eisenstein{1, 0}, Eisenstein{0, 0}};
        OVec nb{Eisenstein{-b, 0}, Eisenstein{0, 0}, Eisenstein{1, 0}};
        for (const OVec& bv : whole) {
            OVec s;
            for (int k = 0; k < 3; ++k) s[k] = ord.lambda * bv[k];
            g.push_back(s);
            g.push_back(ord.mul(wa, bv));
            g.push_back(ord.mul(nb, bv));
        }
        auto mod = module_basis(std::move(g));
        if (module_index(mod) != 3)
            throw Error("LambdaSplitFailure", "missing degree-one prime over lambda");
        lambda_primes.push_back(std::move(mod));
    }

    // correction ideals C with C^3 multiplied into the module, to absorb a
    // possibly nonprincipal cube part: lambda-primes, their pairs, and
    // degree-one primes over small split r with pi1 a cube mod r
    struct Corr {
        std::vector<OVec> cube;
        Int norm3;
    };
    std::vector<Corr> corrections;
    corrections.push_back({whole, 1});
    for (size_t a = 0; a < 3; ++a) {
        auto c3 = module_product(ord, lambda_primes[a],
                                 module_product(ord, lambda_primes[a], lambda_primes[a]));
        corrections.push_back({std::move(c3), 27});
    }
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = a; b < 3; ++b) {
            auto ab = module_product(ord, lambda_primes[a], lambda_primes[b]);
            auto c3 = module_product(ord, ab, module_product(ord, ab, ab));
            corrections.push_back({std::move(c3), 729});
        }
    for (long r : {7L,   13L,  19L,  31L,  37L,  43L,  61L,  67L,  73L,  79L, 97L,
                   103L, 109L, 127L, 139L, 151L, 157L, 163L, 181L, 193L, 199L}) {
        if (r == q1 || r == q2) continue;
        if (mod_pow(mod(Int(-q1), r), (r - 1) / 3, r) != 1) continue;
        std::vector<long> rroots;
        for (long x = 0; x < r; ++x)
            if (mod(Int(x) * x * x - pi1.a, r) == 0) rroots.push_back(x);
        Eisenstein pr = prime_above(OddPrime(Int(r)));
        Eisenstein prc{pr.a - pr.b, -pr.b};  // conjugate prime
        for (const Eisenstein& pp : {pr, prc})
            for (long c : rroots) {
                auto q = prime_module(pp, Eisenstein{c, 0});
                auto c3 = module_product(ord, q, module_product(ord, q, q));
                corrections.push_back({std::move(c3), Int(r) * r * r});
            }
    }

    struct Unit {
        int i, j;
        size_t corr;
    };
    std::vector<Unit> units;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (size_t c = 0; c < corrections.size(); ++c) units.push_back({i, j, c});
        }

    struct Candidate {
        long long height;
        unsigned long long rank;  // enumeration order, ties broken first-come
        ThetaElement theta;
    };
    std::vector<Candidate> cands;
    std::atomic<long> skipped_modules{0};

    const Int q2e6 = eis_pow(Eisenstein{q2, 0}, 6).a;
    // int128 norm path is exact while |coords| stay under this cap
    const long long coord_cap = (long long)std::max(
        1000.0, std::floor(std::pow(1.6e38 / 972.0 / std::pow((double)q1, 4.0), 1.0 / 6)));
    const std::array<Eisenstein, 3> twists = {Eisenstein{-1, 0}, Eisenstein{0, -1},
                                              Eisenstein{1, 1}};  // -1, -zeta, -zeta^2

    auto scan_unit = [&](size_t ui, std::vector<Candidate>& sink) {
        const Unit& un = units[ui];
        auto Qi = prime_module(Eisenstein{q2, 0}, roots[un.i]);
        auto Qj = prime_module(Eisenstein{q2, 0}, roots[un.j]);
        auto J = module_product(ord, Qi, module_product(ord, Qj, Qj));
        J = module_product(ord, J, corrections[un.corr].cube);
        const Int target = q2e6 * corrections[un.corr].norm3;
        if (module_index(J) != target) {  // degenerate module, skip
            ++skipped_modules;
            return;
        }

        // Minkowski embedding weighted by archimedean basis sizes
        // |1| ~ 1, |w| ~ q1^(1/3)/|lambda|, |nu| ~ q1^(2/3)/3
        const double w1 = std::cbrt((double)q1);
        const double wts[3] = {1.0, w1 / 1.7320508075688772, w1 * w1 / 3.0};
        Lat6 lat{};
        for (int v = 0; v < 3; ++v)
            for (int im = 0; im < 2; ++im) {
                OVec vec = J[v];
                if (im)
                    for (int c = 0; c < 3; ++c) vec[c] = vec[c] * Eisenstein{0, 1};
                int row = v * 2 + im;
                for (int c = 0; c < 3; ++c) {
                    double a = vec[c].a.convert_to<double>();
                    double b = vec[c].b.convert_to<double>();
                    lat.b[row][2 * c] = wts[c] * (a - b / 2);
                    lat.b[row][2 * c + 1] = wts[c] * (b * 0.8660254037844386);
                    lat.z[row][2 * c] = vec[c].a.convert_to<long long>();
                    lat.z[row][2 * c + 1] = vec[c].b.convert_to<long long>();
                }
            }
        lll6(lat);

        const long long R = corrections[un.corr].norm3 == 1 ? 3 : 2;
        const __int128 P1 = -q1;
        unsigned long long combo = 0;
        std::set<std::array<long long, 6>> seen;  // canonical unit-orbit keys
        std::array<long long, 6> m{};
        auto emit = [&] {
            ++combo;
            std::array<long long, 6> zc{};
            for (int row = 0; row < 6; ++row)
                for (int c = 0; c < 6; ++c) zc[c] += m[row] * lat.z[row][c];
            bool zero = true;
            for (int c = 0; c < 6; ++c)
                if (zc[c]) zero = false;
            if (zero) return;

            // X = 3*lambda*theta in the power basis, all in int64:
            // lambda*(a,b) = (a-2b, 2a-b)
            const long long la = zc[4] - 2 * zc[5], lb = 2 * zc[4] - zc[5];
            std::array<long long, 6> X = {3 * (zc[0] - 2 * zc[1]) - 3 * zc[2] + la,
                                          3 * (2 * zc[0] - zc[1]) - 3 * zc[3] + lb,
                                          3 * zc[2] + la,
                                          3 * zc[3] + lb,
                                          la,
                                          lb};
            long long hx = 0;
            for (int c = 0; c < 6; ++c) hx = std::max(hx, std::llabs(X[c]));

            // norm test: N(X) = 27^3 * target * cube
            if (hx < coord_cap) {
                E128 c0{X[0], X[1]}, c1{X[2], X[3]}, c2{X[4], X[5]};
                E128 t1 = e128_mul(e128_mul(c0, c0), c0);
                E128 t2 = e128_mul(e128_mul(c1, c1), c1);
                E128 t3 = e128_mul(e128_mul(c2, c2), c2);
                E128 t4 = e128_mul(e128_mul(c0, c1), c2);
                E128 z{t1.a + P1 * (t2.a + P1 * t3.a - 3 * t4.a),
                       t1.b + P1 * (t2.b + P1 * t3.b - 3 * t4.b)};
                __int128 nn = z.a * z.a - z.a * z.b + z.b * z.b;
                if (nn % 19683 != 0) return;
                __int128 t128 = target.convert_to<__int128>();
                __int128 nt = nn / 19683;
                if (nt % t128 != 0) return;
                __int128 rt = nt / t128;
                long long cr = (long long)std::llround(std::cbrt((double)rt));
                bool cube = false;
                for (long long c = std::max(0LL, cr - 1); c <= cr + 1; ++c)
                    if ((__int128)c * c * c == rt) {
                        cube = true;
                        break;
                    }
                if (!cube) return;
            } else {
                ThetaElement tX{{Eisenstein{X[0], X[1]}, Eisenstein{X[2], X[3]},
                                 Eisenstein{X[4], X[5]}}};
                Int nn = relative_norm(tX, pi1).norm();
                if (nn % 19683 != 0) return;
                Int nt = nn / 19683;
                if (nt % target != 0) return;
                Int ratio = nt / target, crt;
                if (!perfect_cube_root(ratio, crt)) return;
            }

            // dedupe the unit orbit {+-zeta^k X}: all six share this norm and
            // their twist sets coincide, so one representative suffices
            {
                std::array<long long, 6> v = X, best = X;
                for (int s = 0; s < 6; ++s) {
                    if (s == 3)
                        for (int c = 0; c < 6; ++c) v[c] = -X[c];
                    if (s % 3) {  // zeta*(a,b) = (-b, a-b)
                        for (int c = 0; c < 3; ++c) {
                            long long a = v[2 * c], b = v[2 * c + 1];
                            v[2 * c] = -b;
                            v[2 * c + 1] = a - b;
                        }
                    }
                    if (v < best) best = v;
                }
                if (!seen.insert(best).second) return;
            }

            for (int tw = 0; tw < 3; ++tw) {
                // -X, -zeta*X, -zeta^2*X = (1+zeta)*X
                std::array<long long, 6> t;
                for (int c = 0; c < 3; ++c) {
                    long long a = X[2 * c], b = X[2 * c + 1];
                    if (tw == 0) {
                        t[2 * c] = -a;
                        t[2 * c + 1] = -b;
                    } else if (tw == 1) {
                        t[2 * c] = b;
                        t[2 * c + 1] = b - a;
                    } else {
                        t[2 * c] = a - b;
                        t[2 * c + 1] = a;
                    }
                }
                long long h = 0;
                for (int c = 0; c < 6; ++c) h = std::max(h, std::llabs(t[c]));
                if (h > opt.bound) continue;
                ThetaElement ti{{Eisenstein{t[0], t[1]}, Eisenstein{t[2], t[3]},
                                 Eisenstein{t[4], t[5]}}};
                sink.push_back({h, (ui << 24 | combo) << 2 | (unsigned)tw, ti});
            }
        };
        std::function<void(int)> rec = [&](int d) {
            if (d == 6) {
                emit();
                return;
            }
            for (m[d] = -R; m[d] <= R; ++m[d]) rec(d + 1);
        };
        rec(0);
    };

#ifdef _OPENMP
    if (opt.jobs > 1) {
#pragma omp parallel num_threads(opt.jobs)
        {
            std::vector<Candidate> local;
#pragma omp for schedule(dynamic, 1) nowait
            for (size_t ui = 0; ui < units.size(); ++ui) scan_unit(ui, local);
#pragma omp critical
            cands.insert(cands.end(), local.begin(), local.end());
        }
    } else
#endif
    {
        for (size_t ui = 0; ui < units.size(); ++ui) scan_unit(ui, cands);
    }

    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return a.height != b.height ? a.height < b.height : a.rank < b.rank;
    });
    const bool stats = std::getenv("TRIPLESYM_SEARCH_STATS") != nullptr;
    if (stats)
        std::fprintf(stderr, "corrections=%zu units=%zu skipped=%ld\n", corrections.size(),
                     units.size(), skipped_modules.load());
    std::map<std::string, long> tally;
    for (const Candidate& c : cands) {
        ThetaCheck chk = verifier.check(c.theta);
        if (chk.ok) {
            if (stats) {
                std::fprintf(stderr, "candidates=%zu verified at index %ld height %lld\n",
                             cands.size(), tally.empty() ? 0L : std::accumulate(
                                 tally.begin(), tally.end(), 0L,
                                 [](long s, const auto& kv) { return s + kv.second; }),
                             (long long)c.height);
                for (const auto& [k, v] : tally) std::fprintf(stderr, "  %-24s %ld\n", k.c_str(), v);
            }
            return c.theta;
        }
        if (stats) ++tally[chk.reason.substr(0, chk.reason.find('('))];
    }
    if (stats) {
        std::fprintf(stderr, "candidates=%zu none verified\n", cands.size());
        for (const auto& [k, v] : tally) std::fprintf(stderr, "  %-24s %ld\n", k.c_str(), v);
    }
    throw Error("ThetaNotFound",
                "no verified theta with coordinates below " + std::to_string(opt.bound));
}

// ---------------------------------------------------------------------------
// Evaluation

CubicEvaluation cubic_triple_symbol(const AdmissibleTriple3& t, const ThetaElement& theta) {
    ResidueField k3(t.p3);
    Eisenstein pi1bar = k3.reduce(t.p1.value());
    if (pi1bar.is_zero())
        throw Error("NotCoprime", "pi1 vanishes in the residue field of p3");
    std::vector<Eisenstein> roots = k3.cube_roots(pi1bar);
    if (roots.size() != 3)
        throw Error("CharacterFailure",
                    "pi1 is not a cube in k3 despite admissibility");

    // Evaluate at every root: the roots name the three primes of L over p3,
    // and admissibility ((pi2/pi3) = 1) plus the tau0 condition force one
    // common character value.  Disagreement would falsify well-definedness,
    // so it is a hard error, not a choice.
    CubicEvaluation out;
    int value = -1;
    for (size_t i = 0; i < roots.size(); ++i) {
        Eisenstein tb = k3.reduce(theta.c[0]);
        Eisenstein mid = k3.add(k3.reduce(theta.c[1]), k3.mul(roots[i], k3.reduce(theta.c[2])));
        tb = k3.add(tb, k3.mul(roots[i], mid));  // c0 + r c1 + r^2 c2
        if (tb.is_zero()) {
            out.degenerate_retry = true;
            continue;
        }
        int k = k3.chi_exponent(tb);
        out.root_exponents[i] = k;
        if (value >= 0 && k != value)
            throw Error("EvaluationInconsistent",
                        "prime choices above p3 disagree: " + std::to_string(value) + " vs " +
                            std::to_string(k));
        value = k;
    }
    if (value < 0)
        throw Error("DegenerateEvaluation", "theta vanishes at every cube root of pi1");
    out.artin = SymbolValue{value, 3};
    out.cohomological = SymbolValue{(3 - value) % 3, 3};
    return out;
}

Split3Result oracle_split3(const AdmissibleTriple3& t, const ThetaElement& theta) {
    ResidueField k3(t.p3);
    const Eisenstein& pi1 = t.p1.value();
    Eisenstein nrm = relative_norm(theta, pi1);
    const Eisenstein three{3, 0};
    Eisenstein a6 = -(three * theta.c[0]);
    Eisenstein a3 = three * (theta.c[0] * theta.c[0] - pi1 * theta.c[1] * theta.c[2]);

    ResidueField::Poly f(10, Eisenstein{0, 0});
    f[9] = k3.one();
    f[6] = k3.reduce(a6);
    f[3] = k3.reduce(a3);
    f[0] = k3.reduce(-nrm);
    if (!k3.separable(f))
        throw Error("OracleDegenerate", "degree-9 polynomial is inseparable over k3");
    long cnt = k3.count_distinct_roots(f);
    if (cnt != 0 && cnt != 9)
        throw Error("OracleDegenerate",
                    "unexpected root count " + std::to_string(cnt) + " over k3");
    return Split3Result{cnt};
}

}  // namespace triplesym
