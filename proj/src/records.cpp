#include "triplesym/records.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace triplesym {

namespace {

using nlohmann::json;

Int parse_decimal(const json& j, const std::string& code, const std::string& where) {
    if (!j.is_string()) throw Error(code, where + " is not a decimal string");
    try {
        return Int(j.get<std::string>());
    } catch (const std::exception&) {
        throw Error(code, where + " is not a valid integer");
    }
}

json eis_json(const Eisenstein& e) { return json::array({e.a.str(), e.b.str()}); }

Eisenstein parse_eis(const json& j, const std::string& code, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw Error(code, where + " is not a coordinate pair");
    return {parse_decimal(j[0], code, where + "[0]"), parse_decimal(j[1], code, where + "[1]")};
}

json parse_file(const std::string& path, const std::string& code) {
    std::ifstream in(path);
    if (!in) throw Error(code, "cannot open " + path);
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw Error(code, path + " is not valid JSON");
    return j;
}

// Durable-enough atomic replace: write a sibling temp file, then rename over.
void write_file_atomic(const std::string& path, const std::string& body) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("IoError", "cannot write " + tmp.string());
        out << body;
        if (!out.flush()) throw Error("IoError", "short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw Error("IoError", "cannot replace " + path + ": " + ec.message());
}

}  // namespace

std::string ResultRecord::to_json() const {
    json j;
    j["n"] = n;
    j["triple"] = triple;
    j["exponent"] = exponent;
    j["rendered"] = rendered;
    j["verified"] = verified;
    j["fallbacks"] = fallbacks;
    if (cohomological_exponent) j["cohomological_exponent"] = *cohomological_exponent;
    return j.dump();
}

ResultRecord ResultRecord::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        throw Error("RecordCorrupt", "record is not a JSON object");
    ResultRecord r;
    try {
        r.n = j.at("n").get<int>();
        r.triple = j.at("triple").get<std::vector<std::string>>();
        r.exponent = j.at("exponent").get<int>();
        r.rendered = j.at("rendered").get<std::string>();
        r.verified = j.at("verified").get<bool>();
        r.fallbacks = j.at("fallbacks").get<std::vector<std::string>>();
        if (j.contains("cohomological_exponent"))
            r.cohomological_exponent = j.at("cohomological_exponent").get<int>();
    } catch (const json::exception& e) {
        throw Error("RecordCorrupt", std::string("record field error: ") + e.what());
    }
    if (r.rendered != SymbolValue{r.exponent, r.n}.rendered())
        throw Error("RecordCorrupt", "rendered value disagrees with exponent");
    return r;
}

ResultRecord make_redei_record(const AdmissibleTriple2& t, const RedeiEvaluation& ev,
                               bool verified) {
    ResultRecord r;
    r.n = 2;
    r.triple = {t.p1.value().str(), t.p2.value().str(), t.p3.value().str()};
    r.exponent = ev.value.exponent;
    r.rendered = ev.value.rendered();
    r.verified = verified;
    if (ev.oracle_fallback) r.fallbacks.push_back("DegenerateEvaluation: quartic oracle decided");
    return r;
}

ResultRecord make_cubic_record(const AdmissibleTriple3& t, const CubicEvaluation& ev,
                               bool verified) {
    ResultRecord r;
    r.n = 3;
    r.triple = {t.p1.value().str(), t.p2.value().str(), t.p3.value().str()};
    r.exponent = ev.artin.exponent;
    r.rendered = ev.artin.rendered();
    r.verified = verified;
    r.cohomological_exponent = ev.cohomological.exponent;
    if (ev.degenerate_retry) r.fallbacks.push_back("DegenerateEvaluation: retried cube root");
    return r;
}

std::string beta_cache_default_path() {
    namespace fs = std::filesystem;
    fs::path base;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg)
        base = xdg;
    else if (const char* home = std::getenv("HOME"); home && *home)
        base = fs::path(home) / ".local" / "share";
    else
        base = fs::temp_directory_path();
    return (base / "triplesym" / "beta_cache.json").string();
}

std::string beta_cache_path() {
    if (const char* env = std::getenv("TRIPLESYM_BETA_CACHE"); env && *env) return env;
    return beta_cache_default_path();
}

long load_beta_cache(const std::string& path, BetaCache& cache) {
    if (!std::filesystem::exists(path)) return 0;
    json j = parse_file(path, "CacheCorrupt");
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_object())
        throw Error("CacheCorrupt", path + " lacks an entries object");
    long loaded = 0;
    for (const auto& [key, val] : j["entries"].items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
            throw Error("CacheCorrupt", "entry key '" + key + "' is not 'p1,p2'");
        RedeiBeta b;
        b.p1 = parse_decimal(json(key.substr(0, comma)), "CacheCorrupt", "key '" + key + "' p1");
        b.p2 = parse_decimal(json(key.substr(comma + 1)), "CacheCorrupt", "key '" + key + "' p2");
        if (!val.is_object() || !val.contains("x") || !val.contains("y") || !val.contains("z"))
            throw Error("CacheCorrupt", "entry '" + key + "' lacks x, y, z");
        b.x = parse_decimal(val["x"], "CacheCorrupt", "entry '" + key + "' x");
        b.y = parse_decimal(val["y"], "CacheCorrupt", "entry '" + key + "' y");
        b.z = parse_decimal(val["z"], "CacheCorrupt", "entry '" + key + "' z");
        if (!is_prime(b.p1) || !is_prime(b.p2))
            throw Error("CacheCorrupt", "entry '" + key + "' has a composite modulus");
        if (!verify_beta(b))
            throw Error("CacheCorrupt", "entry '" + key + "' fails beta verification");
        cache.put(b);
        ++loaded;
    }
    return loaded;
}

void save_beta_cache(const std::string& path, const BetaCache& cache) {
    json entries = json::object();
    for (const RedeiBeta& b : cache.entries()) {
        json e;
        e["x"] = b.x.str();
        e["y"] = b.y.str();
        e["z"] = b.z.str();
        entries[b.p1.str() + "," + b.p2.str()] = std::move(e);
    }
    json j;
    j["entries"] = std::move(entries);
    write_file_atomic(path, j.dump(2) + "\n");
}

ThetaFixture load_theta_fixture(const std::string& path) {
    json j = parse_file(path, "FixtureCorrupt");
    if (!j.is_object() || !j.contains("pi1") || !j.contains("pi2") || !j.contains("theta"))
        throw Error("FixtureCorrupt", path + " lacks pi1/pi2/theta");
    ThetaFixture fx;
    fx.pi1 = parse_eis(j["pi1"], "FixtureCorrupt", "pi1");
    fx.pi2 = parse_eis(j["pi2"], "FixtureCorrupt", "pi2");
    if (!j["theta"].is_array() || j["theta"].size() != 3)
        throw Error("FixtureCorrupt", "theta is not a coefficient triple");
    for (int i = 0; i < 3; ++i)
        fx.theta.c[i] =
            parse_eis(j["theta"][i], "FixtureCorrupt", "theta[" + std::to_string(i) + "]");
    return fx;
}

void save_theta_fixture(const std::string& path, const ThetaFixture& fx) {
    json j;
    j["pi1"] = eis_json(fx.pi1);
    j["pi2"] = eis_json(fx.pi2);
    j["theta"] = json::array({eis_json(fx.theta.c[0]), eis_json(fx.theta.c[1]),
                              eis_json(fx.theta.c[2])});
    write_file_atomic(path, j.dump(2) + "\n");
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "p1,p2,p3,exponent,symbol,verified\n";
    for (const ScanRow& r : rows)
        out << r.p1.str() << ',' << r.p2.str() << ',' << r.p3.str() << ','
            << r.value.exponent << ',' << r.value.rendered() << ','
            << (r.verified ? "true" : "false") << '\n';
    return out.str();
}

std::string scan_json(const std::vector<ScanRow>& rows) {
    json arr = json::array();
    for (const ScanRow& r : rows) {
        json j;
        j["n"] = r.value.modulus;
        j["triple"] = {r.p1.str(), r.p2.str(), r.p3.str()};
        j["exponent"] = r.value.exponent;
        j["rendered"] = r.value.rendered();
        j["verified"] = r.verified;
        j["fallbacks"] = json::array();
        if (r.oracle_fallback) j["fallbacks"].push_back("DegenerateEvaluation");
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace triplesym
