#ifndef TRIPLESYM_CONIC_HPP
#define TRIPLESYM_CONIC_HPP

#include "triplesym/ints.hpp"
#include "triplesym/modarith.hpp"

namespace triplesym {

// Primitive solution of x^2 - p1*y^2 - p2*z^2 = 0 carrying its conic.
// beta = x + y*sqrt(p1) has norm p2*z^2 down in Z[sqrt(p1)].
struct RedeiBeta {
    Int x, y, z;
    Int p1, p2;
};

// Solution triple for the same equation before any congruence conditions.
struct ConicPoint {
    Int x, y, z;
};

// Nontrivial primitive solution of x^2 - p1 y^2 - p2 z^2 = 0.
// p1 != p2, both = 1 mod 4, and (p1/p2) = (p2/p1) = +1; otherwise NoSolution.
// Lattice descent on the congruence sublattice, with a bounded brute-force
// fallback for small p1*p2.  Output is primitive with x > 0, z > 0 but carries
// no normalization promises beyond that.
ConicPoint solve_legendre(const OddPrime& p1, const OddPrime& p2);

// True iff (x,y,z) is a normalized beta: solves the conic, gcd(x,y,z) = 1,
// 2 | y, and x - y = 1 mod 4.
bool verify_beta(const RedeiBeta& b);

// Produce a normalized beta from any nontrivial solution of the conic.
// Sign orbit of the input is tried first; otherwise the rational chord
// parametrization through the input point is swept over coprime (m, n) in
// tiers |m|,|n| <= 16, 64, 256 and the minimal normalized point is returned
// (key: |x|, then |y|, then x > 0, then y > 0).  NormalizationExhausted if
// the final tier contains no normalized point.
RedeiBeta normalize_redei(const ConicPoint& sol, const OddPrime& p1, const OddPrime& p2);

// The conjugate x - y*sqrt(p1): normalized whenever the input is, and never a
// unit multiple of it.  Used to force an independent beta choice in tests.
RedeiBeta conjugate_beta(const RedeiBeta& b);

}  // namespace triplesym

#endif
