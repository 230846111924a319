#ifndef TRIPLESYM_REDEI_HPP
#define TRIPLESYM_REDEI_HPP

#include "triplesym/conic.hpp"
#include "triplesym/ints.hpp"
#include "triplesym/modarith.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace triplesym {

// Exponent of the symbol in Z/n together with the modulus, so rendering and
// comparison stay honest about which group the value lives in.
struct SymbolValue {
    int exponent;  // in [0, modulus)
    int modulus;   // 2 or 3
    std::string rendered() const;
    friend bool operator==(const SymbolValue& a, const SymbolValue& b) {
        return a.exponent == b.exponent && a.modulus == b.modulus;
    }
};

struct AdmissibleTriple2 {
    OddPrime p1, p2, p3;
};

// Validates p1, p2, p3 for the quadratic symbol: odd primes, each 1 mod 4,
// pairwise distinct, legendre(pi/pj) = +1 for all ordered pairs.  Errors name
// the first violated condition: NotOneModFour, NotDistinct,
// LegendreObstruction (message carries the (i, j) indices).
AdmissibleTriple2 admissible2(const Int& p1, const Int& p2, const Int& p3);

// Compute-once cache of normalized betas keyed by the ordered pair (p1, p2).
// Concurrent reads are safe; the first writer for a key wins (recomputation
// is deterministic, so late writers store the identical value).
class BetaCache {
public:
    RedeiBeta get(const OddPrime& p1, const OddPrime& p2);
    void put(const RedeiBeta& beta);      // pre-verified entries, e.g. from disk
    std::vector<RedeiBeta> entries() const;

private:
    mutable std::mutex mu_;
    std::map<std::pair<Int, Int>, RedeiBeta> map_;
};

struct RedeiEvaluation {
    SymbolValue value;
    bool oracle_fallback = false;  // residue evaluation degenerated; quartic oracle decided
};

// The symbol [p1, p2, p3] as an exponent in Z/2 via a single Frobenius
// evaluation: with beta = x + y sqrt(p1) normalized and s = sqrt_mod(p1, p3),
// the exponent is 0 iff legendre(x + y*s, p3) = +1.  A degenerate residue
// (x + y*s = 0 mod p3) falls back to the quartic factorization oracle and is
// flagged in the result.
RedeiEvaluation redei_symbol(const AdmissibleTriple2& t, BetaCache& cache);

// Convenience overload with a throwaway cache.
RedeiEvaluation redei_symbol(const AdmissibleTriple2& t);

// Independent oracle: counts distinct roots of T^4 - 2x T^2 + p2 z^2 mod p3
// (the minimal polynomial of sqrt(beta)).  4 roots means split (exponent 0),
// 0 roots means exponent 1.  Inseparable or mixed counts trigger a
// deterministic perturbation beta' = beta * gamma^2; OracleDegenerate if no
// perturbation in the fixed list separates.
SymbolValue oracle_symbol2(const AdmissibleTriple2& t, BetaCache& cache);

// Same oracle evaluated at an explicit beta (used for beta-independence checks).
SymbolValue oracle_symbol2_at(const AdmissibleTriple2& t, const RedeiBeta& beta);

// Residue evaluation at an explicit beta; degenerate residue falls back to the
// quartic oracle at that same beta.
RedeiEvaluation redei_symbol_at(const AdmissibleTriple2& t, const RedeiBeta& beta);

struct ScanRow {
    Int p1, p2, p3;
    SymbolValue value;
    bool verified;         // oracle agreed
    bool oracle_fallback;  // residue path degenerated
};

// Every admissible ordered triple with all entries < bound (<= 10^4), in
// lexicographic order, each evaluated on both the Frobenius path and the
// quartic oracle.  jobs > 1 parallelizes across triples with identical output.
std::vector<ScanRow> scan2(unsigned long bound, int jobs = 1);

}  // namespace triplesym

#endif
