#include "triplesym/redei.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <utility>

namespace triplesym {

std::string SymbolValue::rendered() const {
    if (modulus == 2) return exponent == 0 ? "+1" : "-1";
    return "zeta^" + std::to_string(exponent);
}

AdmissibleTriple2 admissible2(const Int& p1, const Int& p2, const Int& p3) {
    const Int* v[3] = {&p1, &p2, &p3};
    for (int i = 0; i < 3; ++i)
        if (mod(*v[i], 4) != 1)
            throw Error("NotOneModFour", "p" + std::to_string(i + 1) + " is not 1 mod 4");
    OddPrime q1(p1), q2(p2), q3(p3);
    if (p1 == p2 || p1 == p3 || p2 == p3)
        throw Error("NotDistinct", "primes must be pairwise distinct");
    const OddPrime* q[3] = {&q1, &q2, &q3};
    const std::pair<int, int> order[6] = {{1, 2}, {1, 3}, {2, 3}, {2, 1}, {3, 1}, {3, 2}};
    for (auto [i, j] : order)
        if (legendre(q[i - 1]->value(), *q[j - 1]) != 1)
            throw Error("LegendreObstruction",
                        "(p" + std::to_string(i) + "/p" + std::to_string(j) + ") = -1");
    return AdmissibleTriple2{q1, q2, q3};
}

RedeiBeta BetaCache::get(const OddPrime& p1, const OddPrime& p2) {
    auto key = std::make_pair(p1.value(), p2.value());
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    RedeiBeta beta = normalize_redei(solve_legendre(p1, p2), p1, p2);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(key, beta);
    return it->second;  // first writer wins; recomputation is deterministic anyway
}

void BetaCache::put(const RedeiBeta& beta) {
    if (!verify_beta(beta)) throw Error("InvalidSolution", "refusing to cache a bad beta");
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(std::make_pair(beta.p1, beta.p2), beta);
}

std::vector<RedeiBeta> BetaCache::entries() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<RedeiBeta> out;
    out.reserve(map_.size());
    for (const auto& [k, v] : map_) out.push_back(v);
    return out;
}

namespace {

// When p3 divides z the quartic is degenerate for every gamma^2 multiple
// (z scales by norms).  Multiply instead by the square of alpha = xa + sqrt(p1)
// chosen to vanish to exact order c at a single prime above p3, then divide by
// p3^{2c}: same square class, p3-coprime norm.  Primitivity of beta guarantees
// its p3-support sits over one prime only, so one of the two slopes works.
RedeiBeta clear_evaluation_prime(const RedeiBeta& beta, const OddPrime& p3) {
    const Int& p = p3.value();
    Int z = abs(beta.z), c = 0;
    while (z % p == 0) { z /= p; ++c; }
    if (c == 0) return beta;

    Int prec = 1;
    for (Int i = 0; i < 2 * c + 1; ++i) prec *= p;
    Int inv2 = mod_inverse(2, prec);
    Int S = sqrt_mod(beta.p1, p3);
    while (mod(S * S - beta.p1, prec) != 0)
        S = mod((S + beta.p1 * mod_inverse(S, prec)) * inv2, prec);  // Hensel lift

    Int pc = 1;
    for (Int i = 0; i < c; ++i) pc *= p;
    Int pc2 = pc * pc;
    for (int sign : {-1, 1}) {
        Int xa = mod(sign * S, pc);
        if (mod(xa - sign * S, pc * p) == 0) xa += pc;  // force exact order c
        Int A = xa * xa + beta.p1, B = 2 * xa;          // alpha^2 = A + B sqrt(p1)
        Int nx = beta.x * A + beta.p1 * beta.y * B;
        Int ny = beta.y * A + beta.x * B;
        Int nz = beta.z * (xa * xa - beta.p1);
        if (nx % pc2 != 0 || ny % pc2 != 0 || nz % pc2 != 0) continue;  // wrong slope
        RedeiBeta out{nx / pc2, ny / pc2, nz / pc2, beta.p1, beta.p2};
        if (mod(out.z, p) != 0) return out;
    }
    throw Error("OracleDegenerate", "failed to clear the evaluation prime from beta");
}

// Quartic oracle at a fixed beta: factorization type of the minimal
// polynomial g(T) = T^4 - 2x T^2 + p2 z^2 of sqrt(beta) over F_p3.
// Admissibility confines the Frobenius to the kernel of both quadratic
// characters, so a separable g has either 4 roots (split, exponent 0) or 0
// (exponent 1).  Inseparable reductions are moved inside the square class:
// the triple is never rescaled, since dividing by a non-square content would
// change the field the polynomial is talking about.
SymbolValue quartic_oracle(const RedeiBeta& beta0, const OddPrime& p3) {
    RedeiBeta beta = clear_evaluation_prime(beta0, p3);
    struct Gamma { long u, v; };
    // (0,0) stands for "no perturbation"; the rest sweep gamma = u + v sqrt(p1).
    const Gamma gammas[] = {{0, 0}, {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3}};
    for (const auto& [u, v] : gammas) {
        Int x = beta.x, y = beta.y, z = beta.z;
        if (u != 0 || v != 0) {
            // beta' = beta * gamma^2 with gamma = u + v sqrt(p1):
            // multiplier gamma^2 = (u^2 + p1 v^2) + 2uv sqrt(p1).
            Int s = Int(u) * u + beta.p1 * v * v;
            Int t = 2 * Int(u) * v;
            Int nx = beta.x * s + beta.p1 * beta.y * t;
            Int ny = beta.y * s + beta.x * t;
            Int ngam = Int(u) * u - beta.p1 * v * v;  // norm of gamma
            if (mod(ngam, p3.value()) == 0) continue;
            x = nx; y = ny; z = beta.z * ngam;
        }
        PolyModP quartic({beta.p2 * z * z, 0, -2 * x, 0, 1}, p3);
        if (quartic.degree() != 4 || !is_separable(quartic)) continue;
        long roots = count_roots_mod(quartic);
        if (roots == 4) return SymbolValue{0, 2};
        if (roots == 0) return SymbolValue{1, 2};
        // mixed count: another bad reduction flavor, keep perturbing
    }
    throw Error("OracleDegenerate", "quartic stayed degenerate after perturbation");
}

RedeiEvaluation frobenius_eval(const AdmissibleTriple2& t, const RedeiBeta& beta) {
    const Int& p3 = t.p3.value();
    Int s = sqrt_mod(t.p1.value(), t.p3);
    Int tau = mod(beta.x + beta.y * s, p3);
    if (tau == 0) {
        // beta not coprime to p3 in the residue sense: decide by the oracle.
        return RedeiEvaluation{quartic_oracle(beta, t.p3), true};
    }
    int chi = legendre(tau, t.p3);
    return RedeiEvaluation{SymbolValue{chi == 1 ? 0 : 1, 2}, false};
}

}  // namespace

RedeiEvaluation redei_symbol(const AdmissibleTriple2& t, BetaCache& cache) {
    RedeiBeta beta = cache.get(t.p1, t.p2);
    return frobenius_eval(t, beta);
}

RedeiEvaluation redei_symbol(const AdmissibleTriple2& t) {
    BetaCache cache;
    return redei_symbol(t, cache);
}

RedeiEvaluation redei_symbol_at(const AdmissibleTriple2& t, const RedeiBeta& beta) {
    if (!verify_beta(beta) || beta.p1 != t.p1.value() || beta.p2 != t.p2.value())
        throw Error("InvalidSolution", "beta does not belong to this triple");
    return frobenius_eval(t, beta);
}

SymbolValue oracle_symbol2(const AdmissibleTriple2& t, BetaCache& cache) {
    return quartic_oracle(cache.get(t.p1, t.p2), t.p3);
}

SymbolValue oracle_symbol2_at(const AdmissibleTriple2& t, const RedeiBeta& beta) {
    if (!verify_beta(beta) || beta.p1 != t.p1.value() || beta.p2 != t.p2.value())
        throw Error("InvalidSolution", "beta does not belong to this triple");
    return quartic_oracle(beta, t.p3);
}

std::vector<ScanRow> scan2(unsigned long bound, int jobs) {
    if (bound > 10000) throw Error("BoundTooLarge", "scan bound capped at 10^4");
    std::vector<OddPrime> ps;
    for (const Int& p : primes_below(bound))
        if (mod(p, 4) == 1) ps.emplace_back(p);

    const size_t n = ps.size();
    // Pairwise admissibility table: both legendre symbols +1.
    std::vector<char> pairs_ok(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j)
                pairs_ok[i * n + j] =
                    legendre(ps[i].value(), ps[j]) == 1 && legendre(ps[j].value(), ps[i]) == 1;

    std::vector<std::array<size_t, 3>> triples;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                if (i == j || i == k || j == k) continue;
                if (pairs_ok[i * n + j] && pairs_ok[i * n + k] && pairs_ok[j * n + k])
                    triples.push_back({i, j, k});
            }

    // Warm the beta cache serially so the parallel phase is pure reads.
    BetaCache cache;
    for (const auto& tr : triples) cache.get(ps[tr[0]], ps[tr[1]]);

    std::vector<ScanRow> rows(triples.size());
    auto eval_one = [&](size_t idx) {
        const auto& tr = triples[idx];
        AdmissibleTriple2 t{ps[tr[0]], ps[tr[1]], ps[tr[2]]};
        RedeiEvaluation ev = redei_symbol(t, cache);
        SymbolValue oracle = oracle_symbol2(t, cache);
        rows[idx] = ScanRow{t.p1.value(), t.p2.value(), t.p3.value(),
                            ev.value, ev.value == oracle, ev.oracle_fallback};
    };

#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long idx = 0; idx < static_cast<long>(triples.size()); ++idx)
            eval_one(static_cast<size_t>(idx));
        return rows;
    }
#endif
    (void)jobs;
    for (size_t idx = 0; idx < triples.size(); ++idx) eval_one(idx);
    return rows;
}

}  // namespace triplesym
