#include "triplesym/verify_suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "triplesym/cochain.hpp"
#include "triplesym/redei.hpp"

namespace triplesym {

namespace {

SuiteReport pass(std::string suite, long checks) {
    return {std::move(suite), checks, true, ""};
}

SuiteReport fail(std::string suite, long checks, std::string counterexample) {
    return {std::move(suite), checks, false, std::move(counterexample)};
}

std::string show_char(const Cochain& chi) {
    std::string s = "(";
    for (size_t i = 0; i < chi.values.size(); ++i)
        s += (i ? "," : "") + std::to_string(chi.values[i]);
    return s + ")";
}

}  // namespace

SuiteReport suite_lemma1() {
    long checks = 0;
    for (int n : {2, 3}) {
        HeisenbergGroup h = heisenberg_group(n);
        GroupPtr g = cyclic_group(n);
        std::vector<Cochain> chars = characters(g, n);
        for (const Cochain& chi1 : chars)
            for (const Cochain& chi2 : chars) {
                PairHom phi{chi1, chi2};
                bool lifts = lift_exhaustive(phi, h).has_value();
                bool bounds = is_coboundary(delta_phi(phi, h)).has_value();
                ++checks;
                if (lifts != bounds) {
                    std::ostringstream out;
                    out << "n=" << n << " chi1=" << show_char(chi1)
                        << " chi2=" << show_char(chi2) << " lift=" << lifts
                        << " obstruction-bounds=" << bounds;
                    return fail("lemma1", checks, out.str());
                }
            }
    }
    return pass("lemma1", checks);
}

SuiteReport suite_lemma2() {
    long checks = 0;
    for (int n : {2, 3}) {
        HeisenbergGroup h = heisenberg_group(n);
        GroupPtr g = direct_product(cyclic_group(n), cyclic_group(n));
        std::vector<Cochain> chars = characters(g, n);
        std::vector<std::pair<const char*, Section>> sections = {
            {"zero", [](int, int) { return 0; }},
            {"ac", [](int a, int c) { return a * c; }},
            {"a2+c", [](int a, int c) { return a * a + c; }},
            {"-a", [n](int a, int) { return (n - 1) * a; }},
        };
        for (const Cochain& chi1 : chars)
            for (const Cochain& chi2 : chars)
                for (const auto& [name, s] : sections) {
                    Cochain d = delta_phi({chi1, chi2}, h, s);
                    ++checks;
                    if (!is_coboundary(add(d, negate(cup(chi1, chi2)))).has_value()) {
                        std::ostringstream out;
                        out << "n=" << n << " chi1=" << show_char(chi1)
                            << " chi2=" << show_char(chi2) << " section=" << name;
                        return fail("lemma2", checks, out.str());
                    }
                }
    }
    return pass("lemma2", checks);
}

SuiteReport suite_alternating() {
    std::vector<std::pair<const char*, GroupPtr>> groups = {
        {"Z2", cyclic_group(2)},
        {"Z3", cyclic_group(3)},
        {"Z4", cyclic_group(4)},
        {"Z6", cyclic_group(6)},
        {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
        {"Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3))},
        {"Z2xZ2xZ2",
         direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))},
        {"D4", dihedral_group(4)},
        {"D6", dihedral_group(6)},
        {"Heis2", heisenberg_group(2).group},
        {"Heis3", heisenberg_group(3).group},
    };
    long checks = 0;
    for (const auto& [name, g] : groups)
        for (int n : {2, 3}) {
            std::vector<Cochain> chars = characters(g, n);
            for (const Cochain& u : chars)
                for (const Cochain& v : chars) {
                    Cochain uv = cochain_from(g, 1, n, [&](const std::vector<int>& t) {
                        return u.at(t[0]) * v.at(t[0]);
                    });
                    ++checks;
                    if (!add(add(cup(u, v), cup(v, u)), coboundary(uv)).is_zero()) {
                        std::ostringstream out;
                        out << "group=" << name << " n=" << n << " u=" << show_char(u)
                            << " v=" << show_char(v);
                        return fail("alternating", checks, out.str());
                    }
                }
        }
    return pass("alternating", checks);
}

SuiteReport suite_reciprocity(unsigned long bound, int jobs) {
    std::vector<ScanRow> rows = scan2(bound, jobs);
    std::map<std::array<Int, 3>, std::vector<const ScanRow*>> orbits;
    for (const ScanRow& r : rows) {
        std::array<Int, 3> key = {r.p1, r.p2, r.p3};
        std::sort(key.begin(), key.end());
        orbits[key].push_back(&r);
    }
    long checks = 0;
    for (const auto& [key, members] : orbits) {
        ++checks;
        if (members.size() != 6) {
            std::ostringstream out;
            out << "{" << key[0] << "," << key[1] << "," << key[2] << "} has "
                << members.size() << " admissible orderings, expected 6";
            return fail("reciprocity", checks, out.str());
        }
        for (const ScanRow* r : members)
            if (!(r->value == members.front()->value)) {
                std::ostringstream out;
                out << "[" << r->p1 << "," << r->p2 << "," << r->p3 << "] = "
                    << r->value.rendered() << " but [" << members.front()->p1 << ","
                    << members.front()->p2 << "," << members.front()->p3 << "] = "
                    << members.front()->value.rendered();
                return fail("reciprocity", checks, out.str());
            }
    }
    return pass("reciprocity", checks);
}

SuiteReport suite_oracle(unsigned long bound, int jobs) {
    std::vector<ScanRow> rows = scan2(bound, jobs);
    long checks = 0;
    for (const ScanRow& r : rows) {
        ++checks;
        if (!r.verified) {
            std::ostringstream out;
            out << "[" << r.p1 << "," << r.p2 << "," << r.p3
                << "]: Frobenius path and quartic oracle disagree";
            return fail("oracle", checks, out.str());
        }
    }
    return pass("oracle", checks);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lemma1", "lemma2", "alternating",
                                                   "reciprocity", "oracle"};
    return names;
}

SuiteReport run_suite(const std::string& name, int jobs) {
    if (name == "lemma1") return suite_lemma1();
    if (name == "lemma2") return suite_lemma2();
    if (name == "alternating") return suite_alternating();
    if (name == "reciprocity") return suite_reciprocity(300, jobs);
    if (name == "oracle") return suite_oracle(300, jobs);
    throw Error("UnknownSuite", "no suite named '" + name + "'");
}

}  // namespace triplesym
