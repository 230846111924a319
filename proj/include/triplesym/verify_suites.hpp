#ifndef TRIPLESYM_VERIFY_SUITES_HPP
#define TRIPLESYM_VERIFY_SUITES_HPP

#include <string>
#include <vector>

namespace triplesym {

// Outcome of one invariant sweep.  `counterexample` holds the first failing
// instance when !passed, in a human-readable form.
struct SuiteReport {
    std::string suite;
    long checks = 0;
    bool passed = false;
    std::string counterexample;
};

// Lemma 1: a pair of characters on Z/n lifts to the Heisenberg group exactly
// when the obstruction cocycle bounds, n in {2, 3}, all pairs.
SuiteReport suite_lemma1();

// Lemma 2: delta_phi(phi) - chi1 cup chi2 is a coboundary for every
// homomorphism (Z/n)^2 -> (Z/n)^2 and every section of a generating family.
SuiteReport suite_lemma2();

// Alternating identity: cup(u,v) + cup(v,u) + d(u.v) = 0 exactly, for all
// character pairs on a family of groups of order <= 27.
SuiteReport suite_alternating();

// Reciprocity: all six orderings of every admissible triple below the bound
// carry the same symbol.
SuiteReport suite_reciprocity(unsigned long bound = 300, int jobs = 1);

// Oracle equivalence: the Frobenius evaluation and the quartic factorization
// oracle agree on every admissible triple below the bound.
SuiteReport suite_oracle(unsigned long bound = 300, int jobs = 1);

// Dispatch by name ("lemma1", "lemma2", "alternating", "reciprocity",
// "oracle"); UnknownSuite otherwise.
SuiteReport run_suite(const std::string& name, int jobs = 1);

const std::vector<std::string>& suite_names();

}  // namespace triplesym

#endif
