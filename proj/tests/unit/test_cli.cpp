#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "leastprime/cli.hpp"
#include "leastprime/reference.hpp"

using namespace leastprime;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("class specs") {
    CHECK(cli::parse_class_spec("(12)(34)", 4) == CycleType({2, 2}));
    CHECK(cli::parse_class_spec("(12)(345)", 5) == CycleType({3, 2}));
    CHECK(cli::parse_class_spec("e", 5) == CycleType::identity(5));
    CHECK(cli::parse_class_spec("2,2,1", 5) == CycleType({2, 2, 1}));
    CHECK(cli::parse_class_spec("5", 5) == CycleType({5}));
    CHECK(cli::parse_class_spec("(123)", 5) == CycleType({3, 1, 1}));
    CHECK(cli::parse_class_spec(" (1,2) (3,4) ", 4) == CycleType({2, 2}));
    CHECK(cli::parse_class_spec("1,2,2", 5) == CycleType({2, 2, 1}));
    CHECK_THROWS_AS(cli::parse_class_spec("(12)(23)", 4), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_class_spec("(16)", 5), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_class_spec("(12", 5), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_class_spec("3,3", 5), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_class_spec("3,1", 5), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_class_spec("2,x", 5), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_class_spec("", 5), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_class_spec("(1a)", 5), std::invalid_argument);
}

TEST_CASE("constants --all reproduces the little-n table of S_3") {
    Outcome o = run({"constants", "--all", "--n", "3", "--quantity", "little-n"});
    CHECK(o.code == 0);
    CHECK(count_lines(o.out) == 2 + 3);
    CHECK(o.out.find("2.1211027") != std::string::npos);
    CHECK(o.out.find("2.3192802") != std::string::npos);
    CHECK(o.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("constants for one class, in every format") {
    Outcome table = run({"constants", "--n", "5", "--class", "5", "--quantity", "big-N"});
    CHECK(table.code == 0);
    CHECK(table.out.find("16.72312") != std::string::npos);

    Outcome js = run({"--format", "json", "constants", "--n", "5", "--class", "5", "--quantity", "big-N"});
    REQUIRE(js.code == 0);
    json doc = json::parse(js.out);
    CHECK(doc.at("value").get<double>() == doctest::Approx(16.72312).epsilon(1e-7));
    CHECK(doc.contains("terms_used"));
    CHECK(doc.contains("tail_estimate"));

    Outcome csv = run({"constants", "--n", "4", "--class", "(12)(34)", "--quantity", "big-N", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(count_lines(csv.out) == 2);

    Outcome digits = run({"--digits", "4", "constants", "--quantity", "erdos"});
    CHECK(digits.out.find("3.675") != std::string::npos);
}

TEST_CASE("constants --all as JSON parses back into a table report") {
    Outcome o = run({"constants", "--all", "--quantity", "big-N", "--format", "json"});
    REQUIRE(o.code == 0);
    TableReport t = json::parse(o.out).get<TableReport>();
    CHECK(t.rows.size() == 15);
    CHECK(t.rows.front().cls == CycleType::identity(3));
    CHECK(t.rows.back().cls == CycleType({5}));
    for (const TableRow& row : t.rows) CHECK(row.reference.has_value());
    CHECK(json(t).dump(2) + "\n" == o.out);
}

TEST_CASE("scan, quadratic, montecarlo and model subcommands") {
    const std::string cubics = std::string(LEASTPRIME_TEST_DATA) + "/cubic_fields_100.jsonl";
    Outcome scan = run({"scan", "--input", cubics, "--n", "3", "--class", "(12)", "--quantity", "big-N",
                        "--format", "json"});
    REQUIRE(scan.code == 0);
    ScanReport r = json::parse(scan.out).get<ScanReport>();
    CHECK(r.rows.size() == 100);

    Outcome filtered = run({"scan", "--input", cubics, "--n", "3", "--class", "e", "--r2", "0", "--format", "json"});
    REQUIRE(filtered.code == 0);
    CHECK(json::parse(filtered.out).at("rows").empty());  // the fixture records carry no signature

    const std::string empty = "leastprime_cli_empty.jsonl";
    std::ofstream(empty).close();
    Outcome none = run({"scan", "--input", empty, "--n", "3", "--class", "e"});
    CHECK(none.code == 0);
    CHECK(none.out.find("fields 0") != std::string::npos);
    std::remove(empty.c_str());

    Outcome quad = run({"quadratic", "--x", "2000", "--sign", "-", "--quantity", "N-1", "--format", "json"});
    REQUIRE(quad.code == 0);
    CHECK(json::parse(quad.out).get<QuadraticAverage>().count > 0);

    Outcome mc = run({"montecarlo", "--n", "4", "--class", "(123)", "--quantity", "big-N", "--samples", "20000",
                      "--seed", "5", "--format", "json"});
    REQUIRE(mc.code == 0);
    CHECK(json::parse(mc.out).get<McEstimate>().samples == 20000);
    Outcome mc_union = run({"montecarlo", "--n", "5", "--quantity", "big-N-odd-union", "--samples", "1000"});
    CHECK(mc_union.code == 0);

    Outcome model = run({"model", "dump", "--n", "5", "--prime", "7", "--format", "json"});
    REQUIRE(model.code == 0);
    json m = json::parse(model.out);
    CHECK(m.at("total") == "1");
    CHECK(m.at("unramified").size() == 7);
    CHECK(m.at("ramified").size() == 10);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"constants", "--bogus"}).code == cli::kExitUsage);
    CHECK(run({"constants", "--quantity", "little-n"}).code == cli::kExitUsage);
    CHECK(run({"constants", "--n", "4", "--class", "(12)(35)"}).code == cli::kExitUsage);
    CHECK(run({"constants", "--n", "6", "--class", "e"}).code == cli::kExitUsage);
    CHECK(run({"constants", "--quantity", "pollack", "--class", "e"}).code == cli::kExitUsage);
    CHECK(run({"--format", "yaml", "constants", "--quantity", "erdos"}).code == cli::kExitUsage);
    CHECK(run({"quadratic", "--format", "csv"}).code == cli::kExitUsage);
    CHECK(run({"model", "dump", "--n", "3", "--prime", "9"}).code == cli::kExitUsage);

    Outcome missing = run({"scan", "--input", "/nonexistent/fields.jsonl", "--n", "3", "--class", "e"});
    CHECK(missing.code == cli::kExitInput);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    Outcome small = run({"--sieve-limit", "200", "constants", "--n", "5", "--class", "e", "--quantity", "big-N"});
    CHECK(small.code == cli::kExitInput);

    Outcome js = run({"--format", "json", "constants", "--n", "9", "--class", "e"});
    CHECK(js.code == cli::kExitUsage);
    json err = json::parse(js.err);
    CHECK(err.at("error").at("kind") == "usage");
}

TEST_CASE("global flags after the subcommand") {
    Outcome o = run({"constants", "--quantity", "erdos", "--format", "json"});
    CHECK(o.code == 0);
    CHECK(json::parse(o.out).contains("value"));
}
