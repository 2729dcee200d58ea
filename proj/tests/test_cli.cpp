#include "cli.hpp"

#include "chordgenus/two_backbone.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chordgenus;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("chordgenus_test_" + name);
}

}  // namespace

TEST_CASE("count in each format") {
    auto r = run({"count", "--backbones", "2", "--chords", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "g0: 48\ng1: 21\n");

    r = run({"--format", "csv", "count", "-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,g,count\n4,0,14\n4,1,70\n4,2,21\n");

    r = run({"--format", "json", "count", "--backbones", "2", "-n", "3", "--method", "oracle"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["counts"]["g0"] == "48");
    CHECK(doc["counts"]["g1"] == "21");
    CHECK(doc["method"] == "oracle");

    r = run({"count", "--backbones", "2", "-n", "5", "--genus", "2"});
    CHECK(r.out == "g2: 1485\n");
}

TEST_CASE("poly output round-trips through exact rationals") {
    for (std::size_t g = 0; g <= 5; ++g) {
        const auto r = run({"poly", "--which", "P2", "--index", std::to_string(g)});
        REQUIRE(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        std::vector<BigRational> coeffs;
        for (const auto& c : doc["coefficients"]) coeffs.push_back(parse_rational(c.get<std::string>()));
        CHECK(QPolynomial(coeffs) == P2_poly(g));
    }
    const auto r = run({"--format", "text", "poly", "--which", "QnN", "--index", "2"});
    CHECK(r.out == "8*N^2\n");
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"table", "--backbones", "2", "--max-n", "6", "--max-g", "3"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> oracle_args{"table", "--max-n", "6", "--max-g", "3", "--method", "oracle"};
    const std::vector<std::string> formula_args{"table", "--max-n", "6", "--max-g", "3"};
    CHECK(run(oracle_args).out == run(formula_args).out);
}

TEST_CASE("table rows") {
    auto r = run({"table", "--backbones", "2", "--max-n", "5", "--max-g", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,g,count\n", 0) == 0);
    CHECK(r.out.find("\n3,1,21\n") != std::string::npos);
    CHECK(r.out.find("\n5,2,1485\n") != std::string::npos);

    r = run({"table", "--max-n", "4", "--max-g", "2"});
    CHECK(r.out.find("\n4,2,21\n") != std::string::npos);

    r = run({"table", "--backbones", "2", "--max-n", "0", "--max-g", "0"});
    CHECK(r.out == "n,g,count\n");

    const auto path = temp_file("table.csv");
    r = run({"table", "--max-n", "3", "--max-g", "1", "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "n,g,count\n0,0,1\n1,0,1\n2,0,2\n2,1,1\n3,0,5\n3,1,10\n");
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"poly", "--which", "X", "--index", "1"}).code == cli::kUsage);
    CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsage);
    CHECK(run({"--format", "text", "table", "--max-n", "3", "--max-g", "1"}).code == cli::kUsage);
    const auto r = run({"count", "-n", "12", "--method", "oracle"});
    CHECK(r.code == cli::kLimit);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("oracle limit precedence: flag, environment, config file") {
    std::map<std::string, std::string> file{{"oracle_limit", "3"}, {"threads", "2"}};
    CHECK(cli::resolve_oracle_config(file, nullptr, std::nullopt).limit == 3);
    CHECK(cli::resolve_oracle_config(file, nullptr, std::nullopt).threads == 2);
    CHECK(cli::resolve_oracle_config(file, "5", std::nullopt).limit == 5);
    CHECK(cli::resolve_oracle_config(file, "5", 7).limit == 7);
    CHECK(cli::resolve_oracle_config({}, nullptr, std::nullopt).limit == OracleConfig{}.limit);

    std::istringstream text("# comment\n\noracle_limit = 2\n");
    CHECK(cli::parse_config(text).at("oracle_limit") == "2");

    const auto path = temp_file("config.txt");
    {
        std::ofstream f(path);
        f << "oracle_limit=2\n";
    }
    const std::vector<std::string> args{"--config", path.string(), "count", "-n", "3", "--method", "oracle"};
    ::unsetenv("CHORDGENUS_ORACLE_LIMIT");
    CHECK(run(args).code == cli::kLimit);
    ::setenv("CHORDGENUS_ORACLE_LIMIT", "4", 1);
    CHECK(run(args).code == cli::kOk);
    auto with_flag = args;
    with_flag.insert(with_flag.begin(), {"--oracle-limit", "2"});
    CHECK(run(with_flag).code == cli::kLimit);
    ::unsetenv("CHORDGENUS_ORACLE_LIMIT");
    std::filesystem::remove(path);
}

TEST_CASE("verify suite runs in process") {
    const auto r = run({"verify", "--suite", "hz", "--max-n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}
