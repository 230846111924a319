#ifndef TRIPLESYM_CUBIC_HPP
#define TRIPLESYM_CUBIC_HPP

#include "triplesym/eisenstein.hpp"
#include "triplesym/ints.hpp"
#include "triplesym/redei.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace triplesym {

// A certified primary prime pi = 1 mod 3*lambda of Z[zeta] with N(pi) = 1 mod 9.
class PrimaryPrime {
public:
    explicit PrimaryPrime(const Eisenstein& pi);
    const Eisenstein& value() const { return pi_; }
    const Int& norm() const { return norm_; }
    bool split() const { return split_; }              // norm is a rational prime
    const Int& residue_char() const { return rchar_; } // p (split) or q (inert)
    bool rational() const { return pi_.b == 0; }

private:
    Eisenstein pi_;
    Int norm_, rchar_;
    bool split_;
};

struct AdmissibleTriple3 {
    PrimaryPrime p1, p2, p3;
};

// Validates the triple for the cubic symbol: primary primes, pairwise
// non-associate, and all six ordered cubic residue symbols vanish.
// Errors: NotPrime / NotPrimary / NotDistinct / CubicObstruction.
AdmissibleTriple3 admissible3(const Eisenstein& pi1, const Eisenstein& pi2,
                              const Eisenstein& pi3);

// theta = c[0] + c[1] u + c[2] u^2 in L = F(u), u^3 = pi1.
struct ThetaElement {
    std::array<Eisenstein, 3> c;
};

// Multiplication in Z[zeta][u]/(u^3 - pi1).
ThetaElement theta_mul(const ThetaElement& x, const ThetaElement& y, const Eisenstein& pi1);

// Scalar multiple by an element of Z[zeta].
ThetaElement theta_scale(const ThetaElement& x, const Eisenstein& s);

// N_{L/F}(theta) = c0^3 + pi1 c1^3 + pi1^2 c2^3 - 3 pi1 c0 c1 c2.
Eisenstein relative_norm(const ThetaElement& t, const Eisenstein& pi1);

// tau0: u -> zeta u, the generator of Gal(L/F).
ThetaElement tau0_twist(const ThetaElement& t);

struct ThetaCheck {
    bool ok = false;
    std::string reason;       // first failed condition when !ok
    Int pi2_exponent;         // v_{pi2}(N theta)
    Eisenstein cube_part;     // gamma with N(theta) = unit * pi2^e * gamma^3
    int galois_exponent = 0;  // i with tau0(theta)/theta = pi2^i (L*)^3; must be 1
    Int lambda_valuation;     // sum of the valuations of theta at the primes over lambda
};

// Checks that theta generates a valid symbol field:
//   (1) N(theta) = unit * pi2^e * cube, and the Z[zeta]-content of theta is a
//       unit times a cube away from lambda, pi1, pi2 (rational factors of a
//       valid theta would otherwise ramify their own primes),
//   (2) L(theta^{1/3}) is unramified at the three degree-one primes of L over
//       lambda (exact local test: lambda^{3k} times a unit = +-1 mod lambda^3),
//   (3) tau0(theta)/theta = pi2 modulo cubes of L* -- tested at a battery of
//       auxiliary split primes (exactly orientation i = 1 may pass),
//   (4) discriminant support screen: disc of the degree-9 minimal polynomial
//       sits on {lambda, pi1, pi2} up to squares.
// Construction of the verifier is reusable across many thetas for one pair.
class ThetaVerifier {
public:
    ThetaVerifier(const PrimaryPrime& p1, const PrimaryPrime& p2);
    ThetaCheck check(const ThetaElement& theta) const;

private:
    struct Aux;                  // battery prime contexts
    PrimaryPrime p1_, p2_;
    std::shared_ptr<const Aux> aux_;
};

ThetaCheck verify_theta(const ThetaElement& theta, const PrimaryPrime& p1,
                        const PrimaryPrime& p2);

struct ThetaSearchOptions {
    long bound = 20000;  // max coordinate height of the returned theta
    int jobs = 1;
};

// Deterministic search for a verified theta: enumerates short generators of
// the candidate ideals Q_i Q_j^2 C^3 in the maximal order of L (LLL plus a
// bounded coefficient sweep, correction ideals C for class-group 3-torsion),
// orders the unit-twisted integral representatives by coordinate height and
// returns the first one the verifier accepts.  The result depends only on
// (pi1, pi2, bound), not on the job count.  Requires rational pi1, pi2
// (NotRationalPrime otherwise) with vanishing mutual symbols
// (CubicObstruction).  ThetaNotFound if the bound is exhausted.
ThetaElement theta_search(const PrimaryPrime& p1, const PrimaryPrime& p2,
                          const ThetaSearchOptions& opt = {});

struct CubicEvaluation {
    SymbolValue artin;          // exponent k: Frobenius sends cbrt(theta) to zeta^k cbrt(theta)
    SymbolValue cohomological;  // the paper-side symbol, = -artin mod 3
    bool degenerate_retry = false;  // a cube root of pi1-bar hit a zero residue
    std::array<int, 3> root_exponents{-1, -1, -1};  // per cube root; -1 where theta-bar = 0
};

// Evaluate the triple symbol at p3 by reducing theta into the residue field
// k3 of a prime above p3 and applying the cubic power character.  All three
// cube roots of pi1-bar (the three primes of L over p3) are evaluated and
// must agree (EvaluationInconsistent otherwise); DegenerateEvaluation if
// theta-bar vanishes at every root.
CubicEvaluation cubic_triple_symbol(const AdmissibleTriple3& t, const ThetaElement& theta);

struct Split3Result {
    long root_count;  // distinct roots of the degree-9 polynomial in k3
    bool trivial() const { return root_count == 9; }
};

// Independent oracle: root count of T^9 - 3 c0 T^6 + 3 (c0^2 - pi1 c1 c2) T^3
// - N(theta) over k3.  Nine distinct roots iff p3 splits completely (symbol
// trivial); zero iff nontrivial.  Other counts raise OracleDegenerate.
Split3Result oracle_split3(const AdmissibleTriple3& t, const ThetaElement& theta);

}  // namespace triplesym

#endif
