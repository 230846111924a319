#include <random>

#include "doctest.h"
#include "triplesym/cochain.hpp"

using namespace triplesym;

namespace {

Cochain random_cochain(const GroupPtr& g, int degree, int n, unsigned seed) {
    std::minstd_rand rng(seed);
    return cochain_from(g, degree, n,
                        [&](const std::vector<int>&) { return (int)(rng() % n); });
}

}  // namespace

TEST_CASE("group constructors satisfy the axioms and sizes") {
    CHECK(cyclic_group(6)->order == 6);
    CHECK(dihedral_group(4)->order == 8);
    auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(v4->order == 4);
    for (int x = 1; x < 4; ++x) CHECK(element_order(*v4, x) == 2);
    CHECK_THROWS_WITH_AS(make_group({{0, 1}, {0, 1}}), doctest::Contains("NotAGroup"), Error);
}

TEST_CASE("heisenberg groups: order, exponent, dihedral case") {
    for (int n = 2; n <= 5; ++n) CHECK(heisenberg_group(n).group->order == n * n * n);

    auto h2 = heisenberg_group(2);
    auto iso = find_isomorphism(*h2.group, *dihedral_group(4));
    REQUIRE(iso.has_value());
    CHECK_FALSE(find_isomorphism(*h2.group, *cyclic_group(8)).has_value());

    auto h3 = heisenberg_group(3);
    for (int x = 0; x < 27; ++x)
        if (x != h3.group->identity) CHECK(element_order(*h3.group, x) == 3);

    CHECK(is_homomorphism(h2.chi_a));
    CHECK(is_homomorphism(h2.chi_c));
    CHECK_FALSE(is_homomorphism(h2.b));
}

TEST_CASE("coboundary of a constant 1-cochain is the same constant") {
    auto g = cyclic_group(4);
    Cochain k = cochain_from(g, 1, 4, [](const std::vector<int>&) { return 3; });
    Cochain dk = coboundary(k);
    for (int v : dk.values) CHECK(v == 3);
}

TEST_CASE("d after d vanishes on random cochains") {
    auto g = direct_product(cyclic_group(2), cyclic_group(3));
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        Cochain f = random_cochain(g, 1, 6, seed);
        CHECK(coboundary(coboundary(f)).is_zero());
    }
}

TEST_CASE("on the heisenberg group d(b) = -chi_a cup chi_c") {
    for (int n : {2, 3, 4}) {
        auto h = heisenberg_group(n);
        CHECK(add(cup(h.chi_a, h.chi_c), coboundary(h.b)).is_zero());
    }
}

TEST_CASE("cup with the zero cochain vanishes; nontrivial square on Z/2") {
    auto z2 = cyclic_group(2);
    Cochain chi = cochain_from(z2, 1, 2, [](const std::vector<int>& t) { return t[0]; });
    CHECK(cup(chi, zero_cochain(z2, 1, 2)).is_zero());

    // cup(chi,chi) is a cocycle but not a coboundary: H^2(Z/2, Z/2) != 0
    Cochain sq = cup(chi, chi);
    CHECK(is_cocycle(sq));
    CHECK_FALSE(is_coboundary(sq).has_value());
}

TEST_CASE("coboundary solver: constructive witnesses and certified refusals") {
    auto g = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(is_coboundary(zero_cochain(g, 2, 2))->is_zero());
    for (unsigned seed : {7u, 8u, 9u}) {
        Cochain alpha = random_cochain(g, 1, 2, seed);
        auto x = is_coboundary(coboundary(alpha));
        REQUIRE(x.has_value());
        CHECK(add(coboundary(*x), negate(coboundary(alpha))).is_zero());
    }
    Cochain notclosed = cochain_from(g, 2, 2, [](const std::vector<int>& t) {
        return t[0] == 1 && t[1] == 2 ? 1 : 0;
    });
    CHECK_THROWS_WITH_AS((void)is_coboundary(notclosed), doctest::Contains("NotACocycle"),
                         Error);
}

TEST_CASE("solver handles composite moduli") {
    auto g = cyclic_group(4);
    // chi: generator -> 1 in Z/4; cup(chi,chi) represents the nonzero class
    // of H^2(Z/4, Z/4) = Z/4 (it classifies the extension Z/16)
    Cochain chi = cochain_from(g, 1, 4, [](const std::vector<int>& t) { return t[0]; });
    CHECK_FALSE(is_coboundary(cup(chi, chi)).has_value());
    // the cup square is twice the generator of H^2(Z/4, Z/4) = Z/4, so its
    // double dies even though it itself does not
    Cochain dbl = add(cup(chi, chi), cup(chi, chi));
    CHECK(is_coboundary(dbl).has_value());
    for (unsigned seed : {21u, 22u}) {
        Cochain alpha = random_cochain(g, 1, 4, seed);
        CHECK(is_coboundary(coboundary(alpha)).has_value());
    }
}

TEST_CASE("characters enumerates exactly Hom(G, Z/n)") {
    CHECK(characters(cyclic_group(2), 2).size() == 2);
    CHECK(characters(cyclic_group(3), 3).size() == 3);
    CHECK(characters(cyclic_group(3), 2).size() == 1);  // gcd(3,2) = 1
    auto v9 = direct_product(cyclic_group(3), cyclic_group(3));
    auto chars = characters(v9, 3);
    CHECK(chars.size() == 9);
    CHECK(chars.front().is_zero());
    for (const Cochain& c : chars) CHECK(is_homomorphism(c));
    // abelianization of the heisenberg group kills the center
    CHECK(characters(heisenberg_group(2).group, 2).size() == 4);
}

TEST_CASE("anticommutativity: cup(u,v) + cup(v,u) + d(uv) = 0 exactly") {
    std::vector<GroupPtr> groups = {cyclic_group(4), direct_product(cyclic_group(3), cyclic_group(3)),
                                    heisenberg_group(3).group};
    for (const auto& g : groups) {
        int n = g->order == 4 ? 4 : 3;
        auto chars = characters(g, n);
        for (const Cochain& u : chars)
            for (const Cochain& v : chars) {
                Cochain uv = cochain_from(
                    g, 1, n, [&](const std::vector<int>& t) { return u.at(t[0]) * v.at(t[0]); });
                CHECK(add(add(cup(u, v), cup(v, u)), coboundary(uv)).is_zero());
            }
    }
}

TEST_CASE("lifting obstruction: delta_phi with the flat section is the cup product") {
    for (int n : {2, 3}) {
        auto h = heisenberg_group(n);
        auto g = direct_product(cyclic_group(n), cyclic_group(n));
        Cochain chi1 = cochain_from(g, 1, n, [&](const std::vector<int>& t) { return t[0] / n; });
        Cochain chi2 = cochain_from(g, 1, n, [&](const std::vector<int>& t) { return t[0] % n; });
        Cochain d0 = delta_phi({chi1, chi2}, h);
        CHECK(add(d0, negate(cup(chi1, chi2))).is_zero());

        // a twisted section moves the cocycle but not its class
        Section tw = [n](int a, int c) { return a * c + a; };
        Cochain d1 = delta_phi({chi1, chi2}, h, tw);
        CHECK_FALSE(add(d1, negate(d0)).is_zero());
        CHECK(same_class(d1, d0));
    }
}

TEST_CASE("delta_phi rejects non-homomorphisms") {
    auto h = heisenberg_group(2);
    auto g = cyclic_group(2);
    Cochain bad = cochain_from(g, 1, 2, [](const std::vector<int>& t) { return t[0] == 0; });
    Cochain chi = cochain_from(g, 1, 2, [](const std::vector<int>& t) { return t[0]; });
    CHECK_THROWS_WITH_AS(delta_phi({bad, chi}, h), doctest::Contains("NotAHomomorphism"), Error);
}

TEST_CASE("lemma 1: lifts exist exactly when the obstruction class dies") {
    for (int n : {2, 3}) {
        auto h = heisenberg_group(n);
        auto g = cyclic_group(n);
        auto chars = characters(g, n);
        for (const Cochain& chi1 : chars)
            for (const Cochain& chi2 : chars) {
                PairHom phi{chi1, chi2};
                bool lifts = lift_exhaustive(phi, h).has_value();
                bool dies = is_coboundary(delta_phi(phi, h)).has_value();
                CAPTURE(n);
                CHECK(lifts == dies);
            }
    }
    // spot checks: (chi,chi) on Z/2 is obstructed by the cup square, every
    // pair on Z/3 lifts because odd cup squares die
    auto h2 = heisenberg_group(2);
    auto z2 = cyclic_group(2);
    Cochain c2 = cochain_from(z2, 1, 2, [](const std::vector<int>& t) { return t[0]; });
    CHECK_FALSE(lift_exhaustive({c2, c2}, h2).has_value());
    auto h3 = heisenberg_group(3);
    auto z3 = cyclic_group(3);
    Cochain c3 = cochain_from(z3, 1, 3, [](const std::vector<int>& t) { return t[0]; });
    CHECK(lift_exhaustive({c3, c3}, h3).has_value());
}

TEST_CASE("lemma 1 negative case: the obstruction can be nonzero") {
    // the identity of (Z/2)^2 has obstruction class x cup y != 0, matching the
    // fact that D4 -> (Z/2)^2 has no section
    auto h = heisenberg_group(2);
    auto g = direct_product(cyclic_group(2), cyclic_group(2));
    Cochain chi1 = cochain_from(g, 1, 2, [](const std::vector<int>& t) { return t[0] / 2; });
    Cochain chi2 = cochain_from(g, 1, 2, [](const std::vector<int>& t) { return t[0] % 2; });
    PairHom phi{chi1, chi2};
    CHECK_FALSE(is_coboundary(delta_phi(phi, h)).has_value());
    CHECK_FALSE(lift_exhaustive(phi, h).has_value());
    // but the transposed pair on a rank-one image lifts
    PairHom diag{chi1, zero_cochain(g, 1, 2)};
    CHECK(lift_exhaustive(diag, h).has_value());
}

TEST_CASE("lemma 2: delta_phi - cup(chi1, chi2) always bounds") {
    for (int n : {2, 3}) {
        auto h = heisenberg_group(n);
        auto g = direct_product(cyclic_group(n), cyclic_group(n));
        auto chars = characters(g, n);
        std::vector<Section> sections = {
            [](int, int) { return 0; },
            [](int a, int c) { return a * c; },
            [n](int a, int) { return (n - 1) * a; },
        };
        for (const Cochain& chi1 : chars)
            for (const Cochain& chi2 : chars)
                for (const Section& s : sections) {
                    Cochain d = delta_phi({chi1, chi2}, h, s);
                    CHECK(is_coboundary(add(d, negate(cup(chi1, chi2)))).has_value());
                }
    }
}

TEST_CASE("massey products: definedness, examples, indeterminacy") {
    auto z2 = cyclic_group(2);
    Cochain chi = cochain_from(z2, 1, 2, [](const std::vector<int>& t) { return t[0]; });
    CHECK_THROWS_WITH_AS(massey(z2, chi, chi, chi), doctest::Contains("CupNotTrivial"), Error);

    auto h2 = heisenberg_group(2);
    MasseyResult m = massey(h2.group, h2.chi_a, h2.chi_c, h2.chi_a);
    CHECK(add(coboundary(m.c12), negate(cup(h2.chi_a, h2.chi_c))).is_zero());
    CHECK(is_cocycle(m.value));
    CHECK(same_class(coboundary(negate(h2.b)), cup(h2.chi_a, h2.chi_c)));

    MasseyResult z = massey(h2.group, zero_cochain(h2.group, 1, 2),
                            zero_cochain(h2.group, 1, 2), zero_cochain(h2.group, 1, 2));
    CHECK(is_coboundary(z.value)->is_zero());
    CHECK(z.indeterminacy_classes == 1);

    // on (Z/3)^2 with x2 = 0 the product is defined and the indeterminacy
    // subspace x1 u H1 + H1 u x3 is visible
    auto v9 = direct_product(cyclic_group(3), cyclic_group(3));
    Cochain e1 = cochain_from(v9, 1, 3, [](const std::vector<int>& t) { return t[0] / 3; });
    Cochain e2 = cochain_from(v9, 1, 3, [](const std::vector<int>& t) { return t[0] % 3; });
    MasseyResult mm = massey(v9, e1, zero_cochain(v9, 1, 3), e2);
    CHECK(mm.indeterminacy_classes > 1);
    CHECK_FALSE(mm.indeterminacy_gens.empty());
}

TEST_CASE("triple product ordering changes class by the permutation sign") {
    // on (Z/n)^2 the degree-3 classes of chi_{s1} u chi_{s2} u chi_{s3}
    // transform by the sign character; check a transposition and a 3-cycle
    for (int n : {2, 3}) {
        auto g = direct_product(cyclic_group(n), cyclic_group(n));
        Cochain u = cochain_from(g, 1, n, [&](const std::vector<int>& t) { return t[0] / n; });
        Cochain v = cochain_from(g, 1, n, [&](const std::vector<int>& t) { return t[0] % n; });
        Cochain w = add(u, v);
        Cochain id3 = cup(cup(u, v), w);
        Cochain swapped = cup(cup(v, u), w);   // transposition (1 2): sign -1
        Cochain cycled = cup(cup(v, w), u);    // 3-cycle: sign +1
        auto diff_swap = add(id3, swapped);    // id + swapped = id - (-1)*id class
        auto diff_cycle = add(id3, negate(cycled));
        CHECK(is_coboundary(diff_swap).has_value());
        CHECK(is_coboundary(diff_cycle).has_value());
    }
}

TEST_CASE("cochain guards: size cap and degree checks") {
    auto big = heisenberg_group(5);  // order 125: group fine, cochains barred
    CHECK(big.group->order == 125);
    CHECK_THROWS_WITH_AS(zero_cochain(big.group, 1, 5), doctest::Contains("GroupTooLarge"),
                         Error);
    auto g = cyclic_group(3);
    CHECK_THROWS_WITH_AS(coboundary(zero_cochain(g, 3, 3)), doctest::Contains("BadDegree"),
                         Error);
    CHECK_THROWS_WITH_AS(cup(zero_cochain(g, 2, 3), zero_cochain(g, 2, 3)),
                         doctest::Contains("BadDegree"), Error);
}
