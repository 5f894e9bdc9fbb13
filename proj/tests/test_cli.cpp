#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "zetalab/cli.hpp"
#include "zetalab/errors.hpp"

using namespace zetalab;

namespace {
std::vector<std::string> argv_of(std::initializer_list<const char*> args) {
    std::vector<std::string> v{"zetalab"};
    v.insert(v.end(), args.begin(), args.end());
    return v;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content, const char* ext = ".json") {
        path = std::string(std::tmpnam(nullptr)) + ext;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};
} // namespace

TEST_CASE("parse basic commands") {
    const RunConfig eval = parse_args(argv_of({"eval", "--sigma", "2", "--t", "0"}));
    CHECK(eval.command == Command::Eval);
    CHECK(eval.sigma == 2.0);
    CHECK(eval.t == 0.0);
    CHECK(eval.tol == 1e-10);

    const RunConfig bound = parse_args(argv_of(
        {"bound", "--target", "const:1", "--H", "1", "--grid-min", "1000", "--grid-max",
         "2000", "--slack", "0.2"}));
    CHECK(bound.command == Command::Bound);
    CHECK(bound.tol == 1e-3); // coarse default enables the fast path
    CHECK(bound.slack == 0.2);
    CHECK(bound.grid_step == 0.0); // phase-locked default

    const RunConfig growth = parse_args(argv_of(
        {"growth", "--sigma", "0.25", "--delta", "1", "--T-list", "100,1000,10000"}));
    CHECK(growth.T_list == std::vector<double>{100.0, 1000.0, 10000.0});
    CHECK(growth.tol == 1e-6);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_args(argv_of({"noexist"})), UsageError);
    CHECK_THROWS_AS(parse_args(argv_of({"eval", "--sigma", "2"})), UsageError); // missing --t
    CHECK_THROWS_AS(parse_args(argv_of({})), UsageError);
    CHECK_THROWS_AS(parse_args(argv_of({"eval", "--sigma", "x", "--t", "0"})), UsageError);
    CHECK_THROWS_AS(
        parse_args(argv_of({"growth", "--sigma", "0.25", "--delta", "1", "--T-list", "1,z"})),
        UsageError);
    CHECK_THROWS_AS(
        parse_args(argv_of({"eval", "--sigma", "1", "--t", "0", "--format", "yaml"})),
        UsageError);
}

TEST_CASE("config file merge with command-line override") {
    const TempFile cfg(R"({"sigma": 2.0, "t": 5.5, "tol": 1e-8})");
    const RunConfig merged = parse_args(argv_of({"eval", "--config", cfg.path.c_str()}));
    CHECK(merged.sigma == 2.0);
    CHECK(merged.t == 5.5);
    CHECK(merged.tol == 1e-8);

    // A later command-line flag wins over the config value.
    const RunConfig overridden =
        parse_args(argv_of({"eval", "--config", cfg.path.c_str(), "--sigma", "3"}));
    CHECK(overridden.sigma == 3.0);
    CHECK(overridden.t == 5.5);

    CHECK_THROWS_AS(parse_args(argv_of({"eval", "--config", "/nonexistent.json"})), UsageError);
    const TempFile bad("not json at all");
    CHECK_THROWS_AS(parse_args(argv_of({"eval", "--config", bad.path.c_str()})), UsageError);
}

TEST_CASE("exit codes from cli_main") {
    auto call = [](std::initializer_list<const char*> args) {
        std::vector<std::string> v = argv_of(args);
        std::vector<char*> argv;
        for (auto& s : v) argv.push_back(s.data());
        return cli_main(static_cast<int>(argv.size()), argv.data());
    };
    CHECK(call({"eval", "--sigma", "2", "--t", "0"}) == 0);
    CHECK(call({"eval", "--sigma", "1", "--t", "0"}) == 3);  // pole -> numeric error
    CHECK(call({"eval", "--badflag"}) == 2);                 // usage error
    CHECK(call({"theta", "--t", "100"}) == 0);
}

TEST_CASE("mean command writes a record with payload and runtime") {
    const std::string out = std::string(std::tmpnam(nullptr)) + ".json";
    RunConfig config = parse_args(argv_of({"mean", "--sigma", "2", "--T", "10", "--delta",
                                           "1", "--out", out.c_str()}));
    CHECK(run(config) == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    CHECK(text.find("\"payload\"") != std::string::npos);
    CHECK(text.find("\"runtime_seconds\"") != std::string::npos);
    CHECK(text.find("\"verdict\"") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("zeros command writes the ordinate csv") {
    const std::string out = std::string(std::tmpnam(nullptr)) + ".csv";
    RunConfig config =
        parse_args(argv_of({"zeros", "--from", "14", "--to", "15", "--out", out.c_str()}));
    CHECK(run(config) == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "ordinate,bracket_width");
    std::string row;
    std::getline(in, row);
    CHECK(row.find("14.13472514") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("report round-trips a record") {
    const TempFile rec(R"({"payload":{"name":"demo","inputs":{"T":"10"},
        "computed":{"value":2.5},"reference":{},"verdict":"pass"},
        "runtime_seconds":0.1})");
    const std::string out = std::string(std::tmpnam(nullptr)) + ".csv";
    RunConfig config =
        parse_args(argv_of({"report", "--in", rec.path.c_str(), "--out", out.c_str()}));
    CHECK(run(config) == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "name,input.T,computed.value,verdict");
    CHECK(row == "demo,10,2.5,pass");
    std::remove(out.c_str());
}
