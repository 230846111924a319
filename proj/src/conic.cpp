#include "triplesym/conic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace triplesym {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Vec3 = std::array<Int, 3>;

Int content(const Int& a, const Int& b, const Int& c) {
    return gcd(gcd(abs(a), abs(b)), abs(c));
}

// Q(v) = x^2 - p1 y^2 - p2 z^2, the conic form.
Int conic_form(const Vec3& v, const Int& p1, const Int& p2) {
    return v[0] * v[0] - p1 * v[1] * v[1] - p2 * v[2] * v[2];
}

// Positive-definite companion form used for reduction.
Int plus_form(const Vec3& v, const Int& p1, const Int& p2) {
    return v[0] * v[0] + p1 * v[1] * v[1] + p2 * v[2] * v[2];
}

Rat plus_inner(const Vec3& u, const Vec3& v, const Int& p1, const Int& p2) {
    return Rat(u[0] * v[0] + p1 * u[1] * v[1] + p2 * u[2] * v[2]);
}

Int round_rat(const Rat& r) {
    Int num = numerator(r), den = denominator(r);  // den > 0
    Int twice = 2 * num + den;
    Int q = twice / (2 * den);
    if (twice < 0 && twice % (2 * den) != 0) --q;  // floor for negatives
    return q;
}

// LLL on three lattice vectors with respect to the positive form.  Exact
// rational Gram-Schmidt, recomputed after each change (dimension is tiny).
void lll_reduce(std::array<Vec3, 3>& b, const Int& p1, const Int& p2) {
    const Rat delta(99, 100);
    std::array<std::array<Rat, 3>, 3> mu{};
    std::array<Rat, 3> B{};

    auto gram_schmidt = [&]() {
        std::array<std::array<Rat, 3>, 3> star{};
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < 3; ++k) star[i][k] = Rat(b[i][k]);
            for (int j = 0; j < i; ++j) {
                Rat num = plus_inner(b[i], b[j], p1, p2);
                // <b_i, b*_j> = <b_i, b_j> - sum over earlier mu terms
                for (int k = 0; k < j; ++k) num -= mu[j][k] * mu[i][k] * B[k];
                mu[i][j] = B[j] == 0 ? Rat(0) : num / B[j];
                for (int k = 0; k < 3; ++k) star[i][k] -= mu[i][j] * star[j][k];
            }
            B[i] = Rat(0);
            Rat w[3] = {Rat(1), Rat(p1), Rat(p2)};
            for (int k = 0; k < 3; ++k) B[i] += w[k] * star[i][k] * star[i][k];
        }
    };

    gram_schmidt();
    int k = 1;
    int guard = 0;
    while (k < 3 && ++guard < 10000) {
        for (int j = k - 1; j >= 0; --j) {
            Int q = round_rat(mu[k][j]);
            if (q != 0) {
                for (int t = 0; t < 3; ++t) b[k][t] -= q * b[j][t];
                gram_schmidt();
            }
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = k > 1 ? k - 1 : 1;
        }
    }
}

// CRT lift: result = r1 mod m1, r2 mod m2 for coprime moduli.
Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    Int inv = mod_inverse(m1 % m2, m2);
    return mod(r1 + m1 * mod((r2 - r1) * inv, m2), m1 * m2);
}

std::optional<ConicPoint> enumerate_box(const std::array<Vec3, 3>& b, long K,
                                        const Int& p1, const Int& p2) {
    std::optional<ConicPoint> best;
    Int best_plus = 0;
    for (long c0 = -K; c0 <= K; ++c0)
        for (long c1 = -K; c1 <= K; ++c1)
            for (long c2 = -K; c2 <= K; ++c2) {
                if (c0 == 0 && c1 == 0 && c2 == 0) continue;
                Vec3 v;
                for (int t = 0; t < 3; ++t)
                    v[t] = c0 * b[0][t] + c1 * b[1][t] + c2 * b[2][t];
                if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
                if (conic_form(v, p1, p2) != 0) continue;
                Int g = content(v[0], v[1], v[2]);
                for (auto& t : v) t /= g;
                if (v[0] < 0) { v[0] = -v[0]; v[1] = -v[1]; v[2] = -v[2]; }
                if (v[0] < 0) continue;          // x = 0 cannot happen on the conic
                if (v[2] < 0) v[2] = -v[2];
                Int pf = plus_form(v, p1, p2);
                if (!best || pf < best_plus ||
                    (pf == best_plus && (v[1] > best->y))) {
                    best = ConicPoint{v[0], v[1], v[2]};
                    best_plus = pf;
                }
            }
    return best;
}

std::optional<ConicPoint> brute_force_point(const Int& p1, const Int& p2) {
    Int xmax = isqrt(p1 * p2) + 1;
    for (Int x = 1; x <= xmax; ++x) {
        Int x2 = x * x;
        for (Int y = 0; p1 * y * y < x2; ++y) {
            Int t = x2 - p1 * y * y;
            if (t % p2 != 0) continue;
            Int zz = t / p2;
            Int z = isqrt(zz);
            if (z * z == zz) {
                Int g = content(x, y, z);
                return ConicPoint{x / g, y / g, z / g};
            }
        }
    }
    return std::nullopt;
}

bool normalized_congruences(const Int& x, const Int& y) {
    return mod(y, 2) == 0 && mod(x - y, 4) == 1;
}

struct NormKey {
    Int ax, ay;
    int xneg, yneg;
    bool operator<(const NormKey& o) const {
        if (ax != o.ax) return ax < o.ax;
        if (ay != o.ay) return ay < o.ay;
        if (xneg != o.xneg) return xneg < o.xneg;
        return yneg < o.yneg;
    }
};

NormKey key_of(const Int& x, const Int& y) {
    return NormKey{abs(x), abs(y), x < 0 ? 1 : 0, y < 0 ? 1 : 0};
}

}  // namespace

ConicPoint solve_legendre(const OddPrime& p1, const OddPrime& p2) {
    const Int& a = p1.value();
    const Int& b = p2.value();
    if (a == b) throw Error("NoSolution", "primes must be distinct");
    if (mod(a, 4) != 1 || mod(b, 4) != 1)
        throw Error("NoSolution", "primes must be 1 mod 4");
    if (legendre(a, p2) != 1 || legendre(b, p1) != 1)
        throw Error("NoSolution", "legendre obstruction: no rational point");

    // Sublattice where the conic form vanishes mod p1*p2:
    // x = t2*y (mod p2), x = t1*z (mod p1) with t2^2 = p1, t1^2 = p2.
    Int t2 = sqrt_mod(a, p2);
    Int t1 = sqrt_mod(b, p1);
    Int a2 = crt(0, a, t2, b);
    Int a3 = crt(t1, a, 0, b);
    std::array<Vec3, 3> basis = {Vec3{a * b, 0, 0}, Vec3{a2, 1, 0}, Vec3{a3, 0, 1}};
    lll_reduce(basis, a, b);

    for (long K : {4L, 8L, 32L, 128L}) {
        if (auto hit = enumerate_box(basis, K, a, b)) return *hit;
    }
    if (a * b < 1000000) {
        if (auto hit = brute_force_point(a, b)) return *hit;
    }
    throw Error("DescentExhausted", "no isotropic vector in the search box");
}

bool verify_beta(const RedeiBeta& b) {
    if (b.x == 0 && b.y == 0 && b.z == 0) return false;
    if (b.x * b.x - b.p1 * b.y * b.y - b.p2 * b.z * b.z != 0) return false;
    if (content(b.x, b.y, b.z) != 1) return false;
    return normalized_congruences(b.x, b.y);
}

RedeiBeta normalize_redei(const ConicPoint& sol, const OddPrime& p1, const OddPrime& p2) {
    const Int& a = p1.value();
    const Int& b = p2.value();
    Int x0 = sol.x, y0 = sol.y, z0 = sol.z;
    if (x0 == 0 && y0 == 0 && z0 == 0)
        throw Error("InvalidSolution", "zero point is not on the conic");
    if (x0 * x0 - a * y0 * y0 - b * z0 * z0 != 0)
        throw Error("InvalidSolution", "input does not satisfy the conic equation");
    Int g = content(x0, y0, z0);
    x0 /= g; y0 /= g; z0 /= g;
    if (z0 < 0) z0 = -z0;

    // Sign orbit of the input first, canonical signs preferred.
    const std::array<std::pair<int, int>, 4> signs = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    Int ax0 = abs(x0), ay0 = abs(y0);
    for (auto [sx, sy] : signs) {
        Int x = sx * ax0, y = sy * ay0;
        if (normalized_congruences(x, y)) return RedeiBeta{x, y, z0, a, b};
    }

    // Chord parametrization through (x0, y0, z0): for coprime (m, n),
    //   x' = -x0 m^2 + 2 p1 y0 m n - p1 x0 n^2
    //   y' =  y0 m^2 - 2 x0 m n + p1 y0 n^2
    //   z' =  z0 (m^2 - p1 n^2)
    // sweeps every rational point as (m : n) varies.
    for (long B : {16L, 64L, 256L}) {
        std::optional<RedeiBeta> best;
        NormKey best_key{};
        for (long m = -B; m <= B; ++m)
            for (long n = -B; n <= B; ++n) {
                if (std::gcd(m < 0 ? -m : m, n < 0 ? -n : n) != 1) continue;
                Int mm = m, nn = n;
                Int X = -x0 * mm * mm + 2 * a * y0 * mm * nn - a * x0 * nn * nn;
                Int Y = y0 * mm * mm - 2 * x0 * mm * nn + a * y0 * nn * nn;
                Int Z = z0 * (mm * mm - a * nn * nn);
                if (X == 0 && Y == 0 && Z == 0) continue;
                Int h = content(X, Y, Z);
                X /= h; Y /= h; Z /= h;
                if (Z < 0) Z = -Z;
                for (auto [sx, sy] : signs) {
                    Int x = sx * X, y = sy * Y;
                    if (!normalized_congruences(x, y)) continue;
                    NormKey k = key_of(x, y);
                    if (!best || k < best_key) {
                        best = RedeiBeta{x, y, Z, a, b};
                        best_key = k;
                    }
                }
            }
        if (best) return *best;
    }
    throw Error("NormalizationExhausted", "no normalized point in the parameter box");
}

RedeiBeta conjugate_beta(const RedeiBeta& b) {
    RedeiBeta c{b.x, -b.y, b.z, b.p1, b.p2};
    if (!verify_beta(c))
        throw Error("InvalidSolution", "conjugate of a non-normalized beta");
    return c;
}

}  // namespace triplesym
