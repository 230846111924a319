#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "triplesym/records.hpp"
#include "triplesym/verify_suites.hpp"

using namespace triplesym;

namespace {

// Input-rejection codes mapped to exit 2; everything else not listed here is
// an internal failure (exit 1) except ThetaNotFound (exit 3).
bool inadmissible_code(const std::string& code) {
    static const std::set<std::string> codes = {
        "NotOneModFour",   "NotDistinct",    "LegendreObstruction", "NotOddPrime",
        "NotPrime",        "NotPrimary",     "NotOneModNine",       "CubicObstruction",
        "RamifiedPrime",   "PrimaryMissing", "NotRationalPrime",    "ThetaRejected",
        "FixtureCorrupt",  "FixtureMismatch", "BadArgument",        "BoundTooLarge",
    };
    return codes.count(code) > 0;
}

Int parse_int_arg(const std::string& s, const std::string& what) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw Error("BadArgument", what + " '" + s + "' is not a decimal integer");
    }
}

// A cubic argument is a rational prime ("17") or an explicit Eisenstein pair
// ("a,b").  Rational primes are replaced by the primary generator of a prime
// above them; explicit pairs are taken as written.
Eisenstein parse_cubic_arg(const std::string& s) {
    const auto comma = s.find(',');
    if (comma != std::string::npos) {
        return {parse_int_arg(s.substr(0, comma), "coordinate"),
                parse_int_arg(s.substr(comma + 1), "coordinate")};
    }
    Int q = parse_int_arg(s, "prime");
    if (q < 0) q = -q;
    return primary_associate(prime_above(OddPrime(q)));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string human(const ResultRecord& r) {
    std::string s = "[" + join(r.triple, ",") + "]_" + std::to_string(r.n) + " = " + r.rendered +
                    " (exponent " + std::to_string(r.exponent);
    if (r.cohomological_exponent)
        s += ", cohomological exponent " + std::to_string(*r.cohomological_exponent);
    s += r.verified ? ", verified)" : ", unverified)";
    s += "\n";
    for (const std::string& f : r.fallbacks) s += "note: " + f + "\n";
    return s;
}

void emit(const std::string& text) { std::fwrite(text.data(), 1, text.size(), stdout); }

int run_redei(const std::vector<std::string>& args, bool as_json, bool verify, bool no_cache) {
    AdmissibleTriple2 t = admissible2(parse_int_arg(args[0], "p1"), parse_int_arg(args[1], "p2"),
                                      parse_int_arg(args[2], "p3"));
    BetaCache cache;
    if (!no_cache) load_beta_cache(beta_cache_path(), cache);
    RedeiEvaluation ev = redei_symbol(t, cache);
    bool verified = false;
    if (verify) {
        SymbolValue oracle = oracle_symbol2(t, cache);
        if (!(oracle == ev.value))
            throw Error("OracleMismatch", "quartic oracle disagrees with residue evaluation");
        verified = true;
    }
    if (!no_cache) {
        try {
            save_beta_cache(beta_cache_path(), cache);
        } catch (const Error& e) {
            std::fprintf(stderr, "warning: cache not saved: %s\n", e.what());
        }
    }
    ResultRecord r = make_redei_record(t, ev, verified);
    emit(as_json ? r.to_json() + "\n" : human(r));
    return 0;
}

int run_cubic(const std::vector<std::string>& args, const std::string& theta_file,
              long search_bound, bool as_json) {
    AdmissibleTriple3 t =
        admissible3(parse_cubic_arg(args[0]), parse_cubic_arg(args[1]), parse_cubic_arg(args[2]));
    ThetaElement theta;
    if (!theta_file.empty()) {
        ThetaFixture fx = load_theta_fixture(theta_file);
        if (!(fx.pi1 == t.p1.value()) || !(fx.pi2 == t.p2.value()))
            throw Error("FixtureMismatch", "theta file describes the pair (" + fx.pi1.str() +
                                               ", " + fx.pi2.str() + ")");
        ThetaCheck chk = verify_theta(fx.theta, t.p1, t.p2);
        if (!chk.ok) throw Error("ThetaRejected", chk.reason);
        theta = fx.theta;
    } else {
        ThetaSearchOptions opt;
        opt.bound = search_bound;
        theta = theta_search(t.p1, t.p2, opt);
    }
    CubicEvaluation ev = cubic_triple_symbol(t, theta);
    bool verified = false;
    std::string oracle_note;
    try {
        Split3Result oracle = oracle_split3(t, theta);
        if (oracle.trivial() != (ev.artin.exponent == 0))
            throw Error("OracleMismatch", "degree-9 splitting oracle disagrees with the "
                                          "character evaluation");
        verified = true;
    } catch (const Error& e) {
        if (e.code() != "OracleDegenerate") throw;
        oracle_note = std::string("OracleDegenerate: ") + e.what();
    }
    ResultRecord r = make_cubic_record(t, ev, verified);
    if (!oracle_note.empty()) r.fallbacks.push_back(oracle_note);
    emit(as_json ? r.to_json() + "\n" : human(r));
    return 0;
}

int run_scan(unsigned long bound, const std::string& format, int jobs) {
    std::vector<ScanRow> rows = scan2(bound, jobs);
    emit(format == "json" ? scan_json(rows) : scan_csv(rows));
    return 0;
}

int run_verify(const std::string& suite, int jobs) {
    SuiteReport r = run_suite(suite, jobs);
    std::string out = "suite: " + r.suite + "\nchecks: " + std::to_string(r.checks) +
                      "\nresult: " + (r.passed ? "PASS" : "FAIL") + "\n";
    if (!r.passed) out += "counterexample: " + r.counterexample + "\n";
    emit(out);
    return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triple symbol calculator over Q and Q(zeta_3)"};
    app.require_subcommand(1);

    std::vector<std::string> redei_args;
    bool redei_json = false, redei_verify = false, redei_nocache = false;
    CLI::App* redei = app.add_subcommand("redei", "quadratic triple symbol [p1,p2,p3]");
    redei->add_option("primes", redei_args, "three primes, each 1 mod 4")
        ->expected(3)
        ->required();
    redei->add_flag("--json", redei_json, "emit the result record as JSON");
    redei->add_flag("--verify", redei_verify, "cross-check with the quartic oracle");
    redei->add_flag("--no-cache", redei_nocache, "skip the on-disk beta cache");

    std::vector<std::string> cubic_args;
    std::string cubic_theta;
    long cubic_bound = 20000;
    bool cubic_json = false;
    CLI::App* cubic = app.add_subcommand("cubic", "cubic triple symbol [q1,q2,q3]_3");
    cubic->add_option("primes", cubic_args, "three primes: rational values or 'a,b' pairs")
        ->expected(3)
        ->required();
    cubic->add_option("--theta", cubic_theta, "theta fixture file (skips the search)");
    cubic->add_option("--search-bound", cubic_bound, "coordinate height bound for theta_search");
    cubic->add_flag("--json", cubic_json, "emit the result record as JSON");

    int scan_n = 2, scan_jobs = 1;
    unsigned long scan_bound = 0;
    std::string scan_out = "csv";
    CLI::App* scan = app.add_subcommand("scan", "tabulate all admissible triples below a bound");
    scan->add_option("--n", scan_n, "symbol modulus")->check(CLI::IsMember({2}));
    scan->add_option("--bound", scan_bound, "upper bound on the primes")->required();
    scan->add_option("--out", scan_out, "output format")->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--jobs", scan_jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string verify_suite;
    int verify_jobs = 1;
    CLI::App* verify = app.add_subcommand("verify", "run an invariant sweep");
    verify->add_option("--suite", verify_suite, "which sweep to run")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (redei->parsed()) return run_redei(redei_args, redei_json, redei_verify, redei_nocache);
        if (cubic->parsed()) return run_cubic(cubic_args, cubic_theta, cubic_bound, cubic_json);
        if (scan->parsed()) return run_scan(scan_bound, scan_out, scan_jobs);
        if (verify->parsed()) return run_verify(verify_suite, verify_jobs);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        if (e.code() == "ThetaNotFound") return 3;
        return inadmissible_code(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
