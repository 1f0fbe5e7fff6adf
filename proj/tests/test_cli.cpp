#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qrank/cli.hpp"
#include "qrank/verify.hpp"

using namespace qrank;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::vector<std::string>(args), out, err);
    return Run{code, out.str(), err.str()};
}

bool contains_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string cur; std::getline(in, cur);)
        if (cur == line) return true;
    return false;
}

} // namespace

TEST_CASE("ranks table") {
    const auto r = cli({"ranks", "--nmax", "6", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 10) == "m,n,count\n");
    CHECK(contains_line(r.out, "0,0,1"));
    CHECK(contains_line(r.out, "0,4,1"));
    CHECK(contains_line(r.out, "2,4,0"));
    CHECK(contains_line(r.out, "-3,4,1"));

    // byte determinism
    const auto again = cli({"ranks", "--nmax", "6", "--format", "csv"});
    CHECK(again.out == r.out);

    const auto both = cli({"ranks", "--nmax", "6", "--backend", "both"});
    CHECK(both.code == 0);
}

TEST_CASE("moments table") {
    const auto r = cli({"moments", "--marks", "2", "--nmax", "6"});
    CHECK(r.code == 0);
    CHECK(contains_line(r.out, "2,4,10"));
    CHECK(contains_line(r.out, "2,2,1"));
}

TEST_CASE("durfee counts") {
    const auto r = cli({"durfee-count", "--marks", "4", "--nmax", "6", "--backend", "both"});
    CHECK(r.code == 0);
    CHECK(contains_line(r.out, "4,4,1"));
    CHECK(contains_line(r.out, "4,5,8"));
    CHECK(contains_line(r.out, "4,3,0"));

    // cap produces a usage error without --force
    const auto capped = cli({"durfee-count", "--marks", "4", "--nmax", "41",
                             "--backend", "enumerate"});
    CHECK(capped.code == 2);
}

TEST_CASE("fullrank table with backend agreement") {
    const auto r = cli({"fullrank", "--marks", "4", "--modulus", "9", "--nmax", "6",
                        "--backend", "both"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 16) == "n,b,count,agree\n");
    CHECK(contains_line(r.out, "4,0,1,1"));
    CHECK(contains_line(r.out, "5,1,1,1"));
    CHECK(contains_line(r.out, "6,0,4,1"));

    const auto single = cli({"fullrank", "--marks", "2", "--modulus", "5", "--nmax", "5",
                             "--backend", "genfun"});
    CHECK(single.code == 0);
    CHECK(single.out.substr(0, 10) == "n,b,count\n");
}

TEST_CASE("genfun coefficients and root evaluation") {
    const auto c = cli({"genfun-coeffs", "--marks", "4", "--nmax", "5"});
    CHECK(c.code == 0);
    CHECK(contains_line(c.out, "4,0,1"));

    const auto r = cli({"roots-eval", "--marks", "4", "--modulus", "9", "--divisor", "3",
                        "--nmax", "5"});
    CHECK(r.code == 0);
    CHECK(contains_line(r.out, "4,0,1"));
    CHECK(contains_line(r.out, "0,0,0"));
}

TEST_CASE("verify subcommand") {
    const auto all = cli({"verify", "all", "--nmax", "8"});
    CHECK(all.code == 0);
    CHECK(all.out.find("PASS equidistribution") != std::string::npos);
    CHECK(all.out.find("PASS c9") != std::string::npos);
    CHECK(all.out.find("FAIL") == std::string::npos);

    const auto single = cli({"verify", "evenness", "--nmax", "10"});
    CHECK(single.code == 0);

    const auto unknown = cli({"verify", "bogus"});
    CHECK(unknown.code == 2);
    CHECK_FALSE(unknown.err.empty());
}

TEST_CASE("verify json output round-trips") {
    const auto r = cli({"verify", "congruences", "--nmax", "10", "--format", "json"});
    CHECK(r.code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    const CheckReport report = CheckReport::from_json(parsed[0]);
    CHECK(report.check == "congruences");
    CHECK(report.passed());
    CHECK(report.to_json() == parsed[0]);
}

TEST_CASE("output file matches stdout") {
    const std::string path = "cli_test_output.csv";
    const auto to_file = cli({"ranks", "--nmax", "4", "--out", path});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    const auto direct = cli({"ranks", "--nmax", "4"});
    CHECK(content.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"ranks", "--bogus-flag"}).code == 2);
    CHECK(cli({"moments", "--nmax", "4"}).code == 2);      // missing --marks
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({"ranks", "--backend", "nonsense"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}
