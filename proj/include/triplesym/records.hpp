#ifndef TRIPLESYM_RECORDS_HPP
#define TRIPLESYM_RECORDS_HPP

#include "triplesym/cubic.hpp"
#include "triplesym/redei.hpp"

#include <optional>
#include <string>
#include <vector>

namespace triplesym {

// One computed symbol with everything a consumer needs to audit it.  For the
// cubic symbol the record carries both sign conventions: `exponent` is the
// Artin-side value and `cohomological_exponent` its negative mod 3.
struct ResultRecord {
    int n = 2;                           // modulus of the symbol
    std::vector<std::string> triple;     // input identifiers as given
    int exponent = 0;                    // symbol exponent in Z/n
    std::string rendered;                // "+1", "-1" or "zeta^k"
    bool verified = false;               // independent oracle ran and agreed
    std::vector<std::string> fallbacks;  // degeneracy notes, empty when clean
    std::optional<int> cohomological_exponent;

    std::string to_json() const;  // single-line JSON, deterministic key order
    static ResultRecord from_json(const std::string& text);  // RecordCorrupt on junk

    friend bool operator==(const ResultRecord& a, const ResultRecord& b) {
        return a.n == b.n && a.triple == b.triple && a.exponent == b.exponent &&
               a.rendered == b.rendered && a.verified == b.verified &&
               a.fallbacks == b.fallbacks &&
               a.cohomological_exponent == b.cohomological_exponent;
    }
};

ResultRecord make_redei_record(const AdmissibleTriple2& t, const RedeiEvaluation& ev,
                               bool verified);
ResultRecord make_cubic_record(const AdmissibleTriple3& t, const CubicEvaluation& ev,
                               bool verified);

// beta cache persistence.  File shape: {"entries": {"p1,p2": {"x","y","z"}}}
// with decimal-string values.  Every entry must pass verify_beta on load;
// malformed keys, non-prime moduli or failing entries throw CacheCorrupt
// (rejected, never repaired).  A missing file is an empty cache.
std::string beta_cache_default_path();
std::string beta_cache_path();  // TRIPLESYM_BETA_CACHE overrides the default

long load_beta_cache(const std::string& path, BetaCache& cache);
void save_beta_cache(const std::string& path, const BetaCache& cache);  // temp + rename

// Serialized theta witness for a prime pair, the shape theta_search fixtures
// are stored in: {"pi1": [a,b], "pi2": [a,b], "theta": [[a,b] x3]} with
// decimal-string coordinates.
struct ThetaFixture {
    Eisenstein pi1, pi2;
    ThetaElement theta;
};

ThetaFixture load_theta_fixture(const std::string& path);  // FixtureCorrupt on junk
void save_theta_fixture(const std::string& path, const ThetaFixture& fx);

// Scan output renderers.  CSV starts with the exact header
// "p1,p2,p3,exponent,symbol,verified"; JSON is an array of records.
std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const std::vector<ScanRow>& rows);

}  // namespace triplesym

#endif
