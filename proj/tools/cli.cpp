#include "cli.hpp"

#include "chordgenus/one_backbone.hpp"
#include "chordgenus/two_backbone.hpp"
#include "chordgenus/verify.hpp"
#include "chordgenus/young.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace chordgenus::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t parse_size(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("invalid value for " + what + ": " + text);
    }
    if (pos != text.size() || text.front() == '-') throw UsageError("invalid value for " + what + ": " + text);
    return v;
}

// Genus range with nonzero counts: 2g <= n (one backbone), 2g + 1 <= n (two).
std::vector<std::size_t> genus_support(int backbones, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; 2 * g + (backbones == 2 ? 1 : 0) <= n; ++g) out.push_back(g);
    return out;
}

GenusTable compute_table(int backbones, std::size_t n, const std::string& method, const OracleConfig& cfg) {
    if (method == "oracle") return backbones == 1 ? oracle_one_backbone(n, cfg) : oracle_two_backbone(n, cfg);
    GenusTable t{backbones, n, {}};
    for (auto g : genus_support(backbones, n)) t.counts[g] = backbones == 1 ? hz_count(g, n) : c2_count(g, n);
    return t;
}

json coefficients_json(const QPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

json coefficients_json(const NPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
    return arr;
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> values;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw UsageError("config line without '=': " + t);
        values[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return values;
}

OracleConfig resolve_oracle_config(const std::map<std::string, std::string>& file_values, const char* env_limit,
                                   std::optional<std::size_t> flag_limit) {
    OracleConfig cfg;
    if (auto it = file_values.find("oracle_limit"); it != file_values.end())
        cfg.limit = parse_size(it->second, "oracle_limit");
    if (auto it = file_values.find("symbolic_limit"); it != file_values.end())
        cfg.symbolic_limit = parse_size(it->second, "symbolic_limit");
    if (auto it = file_values.find("threads"); it != file_values.end())
        cfg.threads = static_cast<unsigned>(parse_size(it->second, "threads"));
    if (env_limit && *env_limit) cfg.limit = parse_size(env_limit, "CHORDGENUS_ORACLE_LIMIT");
    if (flag_limit) cfg.limit = *flag_limit;
    return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genus-stratified enumeration of linear chord diagrams on one and two backbones", "chordgenus"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::optional<std::size_t> oracle_limit;
    std::string format;
    app.add_option("--config", config_path, "key=value file (oracle_limit, symbolic_limit, threads)");
    app.add_option("--oracle-limit", oracle_limit, "largest n accepted by the brute-force oracles");
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    // count
    auto* count = app.add_subcommand("count", "number of diagrams by genus");
    int backbones = 1;
    std::size_t chords = 0;
    std::optional<std::size_t> genus;
    std::string method = "formula";
    count->add_option("--backbones", backbones)->check(CLI::IsMember({1, 2}));
    count->add_option("--chords,-n", chords)->required();
    count->add_option("--genus,-g", genus);
    count->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle"}));

    // poly
    auto* poly = app.add_subcommand("poly", "generating-function and genus polynomials");
    std::string which;
    std::size_t index = 0;
    poly->add_option("--which", which)->required()->check(CLI::IsMember({"P", "P2", "R2", "PnN", "UnN", "QnN"}));
    poly->add_option("--index", index)->required();
    poly->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::size_t max_n = 6;
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", max_n);

    // table
    auto* table = app.add_subcommand("table", "genus table rows n,g,count");
    std::size_t max_g = 0;
    std::string output;
    table->add_option("--backbones", backbones)->check(CLI::IsMember({1, 2}));
    table->add_option("--max-n", max_n)->required();
    table->add_option("--max-g", max_g)->required();
    table->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle"}));
    table->add_option("--output,-o", output, "write to a file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        std::map<std::string, std::string> file_values;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw UsageError("cannot read config file " + config_path);
            file_values = parse_config(in);
        }
        const OracleConfig cfg = resolve_oracle_config(file_values, std::getenv("CHORDGENUS_ORACLE_LIMIT"), oracle_limit);

        if (count->parsed()) {
            const std::string fmt = format.empty() ? "text" : format;
            const GenusTable t = compute_table(backbones, chords, method, cfg);
            std::vector<std::size_t> gs = genus ? std::vector<std::size_t>{*genus} : genus_support(backbones, chords);
            if (fmt == "json") {
                json counts = json::object();
                for (auto g : gs) counts["g" + std::to_string(g)] = t.at(g).get_str();
                json doc{{"backbones", backbones}, {"chords", chords}, {"method", method}, {"counts", counts}};
                out << doc.dump(2) << "\n";
            } else if (fmt == "csv") {
                out << "n,g,count\n";
                for (auto g : gs) out << chords << "," << g << "," << t.at(g).get_str() << "\n";
            } else {
                for (auto g : gs) out << "g" << g << ": " << t.at(g).get_str() << "\n";
            }
            return kOk;
        }

        if (poly->parsed()) {
            const std::string fmt = format.empty() ? "json" : format;
            if (fmt == "csv") throw UsageError("poly supports --format text or json");
            json doc{{"which", which}, {"index", index}};
            std::string text;
            if (which == "P" || which == "P2" || which == "R2") {
                if (method == "oracle") throw UsageError("--method oracle applies to PnN, UnN and QnN only");
                if (index == 0 && which != "P2") throw UsageError(which + " requires --index >= 1");
                const QPolynomial p = which == "P" ? P_poly(index) : which == "P2" ? P2_poly(index) : R2_poly(index);
                doc["variable"] = "z";
                doc["coefficients"] = coefficients_json(p);
                text = to_string(p, "z");
            } else {
                NPolynomial p;
                const bool oracle = method == "oracle";
                if (which == "PnN") p = oracle ? oracle_P(index, cfg) : genus_poly_P(index);
                if (which == "UnN") p = oracle ? oracle_U(index, cfg) : charsum_U(index);
                if (which == "QnN") p = oracle ? oracle_Q(index, cfg) : genus_poly_Q(index);
                doc["variable"] = "N";
                doc["coefficients"] = coefficients_json(p);
                text = to_string(p, "N");
            }
            if (fmt == "text")
                out << text << "\n";
            else
                out << doc.dump(2) << "\n";
            return kOk;
        }

        if (verify->parsed()) {
            const std::string fmt = format.empty() ? "text" : format;
            if (fmt == "csv") throw UsageError("verify supports --format text or json");
            const auto start = std::chrono::steady_clock::now();
            const auto checks = run_suite(suite, max_n, cfg);
            const double total =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
            if (fmt == "json") {
                json arr = json::array();
                for (const auto& c : checks)
                    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"millis", c.millis}, {"detail", c.detail}});
                out << json{{"suite", suite}, {"max_n", max_n}, {"passed", ok}, {"checks", arr}}.dump(2) << "\n";
            } else {
                for (const auto& c : checks) {
                    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  (" << static_cast<long>(c.millis)
                        << " ms)\n";
                    if (!c.passed) out << "      " << c.detail << "\n";
                }
                out << (ok ? "all checks passed" : "some checks FAILED") << " in " << static_cast<long>(total)
                    << " ms\n";
            }
            return ok ? kOk : kCheckFailed;
        }

        if (table->parsed()) {
            const std::string fmt = format.empty() ? "csv" : format;
            if (fmt != "csv" && fmt != "json") throw UsageError("table supports --format csv or json");
            std::ostringstream body;
            json rows = json::array();
            if (fmt == "csv") body << "n,g,count\n";
            for (std::size_t n = 0; n <= max_n; ++n) {
                const auto support = genus_support(backbones, n);
                if (support.empty()) continue;
                const GenusTable t = compute_table(backbones, n, method, cfg);
                for (auto g : support) {
                    if (g > max_g) break;
                    if (fmt == "csv")
                        body << n << "," << g << "," << t.at(g).get_str() << "\n";
                    else
                        rows.push_back({{"n", n}, {"g", g}, {"count", t.at(g).get_str()}});
                }
            }
            if (fmt == "json") body << json{{"backbones", backbones}, {"rows", rows}}.dump(2) << "\n";
            if (output.empty()) {
                out << body.str();
            } else {
                std::ofstream file(output);
                if (!file) throw UsageError("cannot write " + output);
                file << body.str();
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kLimit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace chordgenus::cli
