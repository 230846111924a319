#ifndef TRIPLESYM_COCHAIN_HPP
#define TRIPLESYM_COCHAIN_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "triplesym/ints.hpp"

namespace triplesym {

// Finite group given by its full multiplication table.  Elements are the
// indices 0..order-1; table[g][h] is the product gh.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverse;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Builds the derived data (identity, inverses) and checks the group axioms
// on the full table.  Throws NotAGroup on any violation.
GroupPtr make_group(std::vector<std::vector<int>> table);

GroupPtr cyclic_group(int n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr dihedral_group(int m);  // order 2m: <r, s | r^m, s^2, srs = r^-1>

int element_order(const FiniteGroup& g, int x);

// Explicit isomorphism a -> b as an image table, if one exists.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

// Inhomogeneous cochain f: G^degree -> Z/n with trivial action, stored as a
// total value table in row-major tuple order (non-normalized: tuples through
// the identity carry values too).
struct Cochain {
    GroupPtr group;
    int degree = 1;   // 1, 2 or 3
    int modulus = 2;  // n
    std::vector<int> values;

    int at(int g1) const { return values[g1]; }
    int at(int g1, int g2) const { return values[g1 * group->order + g2]; }
    int at(int g1, int g2, int g3) const {
        return values[(g1 * group->order + g2) * group->order + g3];
    }
    bool is_zero() const;
};

// Cochain groups are capped so the exhaustive solvers stay cheap: C^2 on 64
// elements is already 4096-dimensional.
inline constexpr int kMaxCochainGroupOrder = 64;

Cochain zero_cochain(const GroupPtr& g, int degree, int n);
Cochain cochain_from(const GroupPtr& g, int degree, int n,
                     const std::function<int(const std::vector<int>&)>& f);

Cochain add(const Cochain& a, const Cochain& b);
Cochain negate(const Cochain& a);
bool is_homomorphism(const Cochain& chi);  // degree-1 cochain into Z/n

// All homomorphisms G -> Z/n, i.e. the kernel of d^1 (trivial action), in a
// deterministic order starting with the zero character.
std::vector<Cochain> characters(const GroupPtr& g, int n);

// Standard inhomogeneous coboundary, degrees 1 -> 2 and 2 -> 3.
Cochain coboundary(const Cochain& f);
bool is_cocycle(const Cochain& f);

// Cochain-level cup product: (1,1) -> 2, (1,2) and (2,1) -> 3.
Cochain cup(const Cochain& f, const Cochain& g);

// Solves dx = c over Z/n via Smith reduction of the integer coboundary
// matrix; returns the canonical witness (free variables pinned to zero) or
// nullopt when the class of c is nonzero.  Degree-2 inputs must be cocycles
// (NotACocycle otherwise); degree-3 inputs are solved directly, with the
// group capped at 9 elements.
std::optional<Cochain> is_coboundary(const Cochain& c);

bool same_class(const Cochain& a, const Cochain& b);

// Heisenberg group D_n: triples (a,b,c) over Z/n with
// (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2+a1*c2, c1+c2), plus the labeled
// coordinate cochains: the projection characters chi_a, chi_c and the middle
// coordinate b (a 1-cochain, not a character).
struct HeisenbergGroup {
    int n = 2;
    GroupPtr group;
    Cochain chi_a, chi_c, b;
    int pack(int a, int b, int c) const;                // coordinates -> index
    std::array<int, 3> unpack(int g) const;             // index -> (a,b,c)
};
HeisenbergGroup heisenberg_group(int n);

// Homomorphism G -> Dbar_n = (Z/n)^2 presented by its two coordinate
// characters.
struct PairHom {
    Cochain chi1, chi2;
};

// Section Dbar -> D as coordinates: (a, c) -> (a, s(a,c), c).
using Section = std::function<int(int a, int c)>;

// Lifting obstruction 2-cocycle g1,g2 -> b-coordinate of
// phit(g1) phit(g2) phit(g1 g2)^-1 for the section-induced set lift phit.
// Throws NotAHomomorphism if either coordinate fails to be a character or
// the pair fails the (abelian) compatibility check.
Cochain delta_phi(const PairHom& phi, const HeisenbergGroup& d, const Section& section);
Cochain delta_phi(const PairHom& phi, const HeisenbergGroup& d);  // s = 0 section

// Exhaustive search for a homomorphism G -> D_n projecting onto phi.
std::optional<std::vector<int>> lift_exhaustive(const PairHom& phi, const HeisenbergGroup& d);

// Triple Massey product <x1,x2,x3> = [c12 u x3 + x1 u c23] with d(cij) =
// xi u xj solved canonically.  Indeterminacy x1 u H^1 + H^1 u x3 is reported
// as class generators plus the count of distinct classes it spans.
struct MasseyResult {
    Cochain value;
    Cochain c12, c23;
    std::vector<Cochain> indeterminacy_gens;
    long indeterminacy_classes = 1;
};
MasseyResult massey(const GroupPtr& g, const Cochain& x1, const Cochain& x2, const Cochain& x3);

}  // namespace triplesym

#endif
