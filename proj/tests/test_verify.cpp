#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrank/verify.hpp"

using namespace qrank;

TEST_CASE("equidistribution holds and the harness can fail") {
    // NF_2(b, 5, 9): the 1,4 progression mod 5 is fully equidistributed
    std::vector<Int> counts(5);
    for (long b = 0; b < 5; ++b) counts[static_cast<std::size_t>(b)] = nf_class(2, b, 5, 9);
    CHECK(equidistribution_witnesses(5, 9, counts).empty());

    // harness sanity: a perturbed table must produce a witness
    counts[2] += 1;
    const auto witnesses = equidistribution_witnesses(5, 9, counts);
    REQUIRE_FALSE(witnesses.empty());
    CHECK(witnesses.front().n == 9);

    // class 0 is its own gcd group for prime modulus, so bumping it alone
    // stays silent
    std::vector<Int> counts0(5);
    for (long b = 0; b < 5; ++b) counts0[static_cast<std::size_t>(b)] = nf_class(2, b, 5, 9);
    counts0[0] += 7;
    CHECK(equidistribution_witnesses(5, 9, counts0).empty());
}

TEST_CASE("equidistribution check across backends") {
    Workspace ws;
    for (long l : {2L, 3L, 4L}) {
        const auto report = check_equidistribution(l, 2 * l + 1, 10, NfBackend::Both, ws);
        CHECK(report.passed());
        CHECK(report.check == "equidistribution");
        CHECK(report.params.at("l") == std::to_string(l));
    }
    // the c=9 gcd classes {3,6} and {1,2,4,5,7,8} really are distinct groups:
    // at n=7 the class counts differ between the groups but match inside them
    CHECK(ws.nf_class_genfun(4, 3, 9, 7) == ws.nf_class_genfun(4, 6, 9, 7));
    CHECK(ws.nf_class_genfun(4, 1, 9, 7) == ws.nf_class_genfun(4, 8, 9, 7));
    CHECK(ws.nf_class_genfun(4, 3, 9, 7) != ws.nf_class_genfun(4, 1, 9, 7));
}

TEST_CASE("integer form check") {
    Workspace ws;
    for (long l : {2L, 3L, 4L}) {
        const auto report = check_integer_form(l, 12, ws);
        CHECK(report.passed());
    }
    // n with D_l(n) = 0 still checked: 0 = N(l-1,c,n) - N(l,c,n)
    const auto& table = ws.ranks(3);
    for (long n = 0; n <= 3; ++n)
        CHECK(rank_class_count(3, 9, n, table) == rank_class_count(4, 9, n, table));
}

TEST_CASE("congruence and c9 checks") {
    Workspace ws;
    CHECK(check_congruences(16, ws).passed());
    CHECK(check_c9(14, ws).passed());
    CHECK(check_evenness(16, ws).passed());
}

TEST_CASE("cyclotomic lemmas check") {
    const auto report = check_cyclotomic_lemmas(5);
    CHECK(report.passed());
    CHECK(report.params.at("lmax") == "5");
}

TEST_CASE("workspace caches are consistent across growth") {
    Workspace ws;
    CHECK(ws.nf_class_genfun(2, 0, 5, 4) == nf_class(2, 0, 5, 4));
    // growing the series afterwards must not stale the reductions
    ws.rk(2, 9);
    CHECK(ws.nf_class_genfun(2, 1, 5, 9) == nf_class(2, 1, 5, 9));
    CHECK(ws.nf_class_genfun(2, 0, 5, 4) == nf_class(2, 0, 5, 4));
    CHECK(ws.nf_class_enumerated(2, 1, 5, 9) == nf_class(2, 1, 5, 9));
}

TEST_CASE("full suite at reduced depth") {
    Workspace ws;
    const auto reports = run_all_checks(10, ws);
    REQUIRE(reports.size() == 14);
    for (const auto& r : reports) {
        CHECK(r.passed());
        CHECK(r.status() == "pass");
    }
    const std::vector<std::string> expected_names{
        "equidistribution", "equidistribution", "equidistribution",
        "integer-form",     "integer-form",     "integer-form",
        "integer-form",     "integer-form",     "integer-form",
        "integer-form",     "congruences",      "c9",
        "cyclotomic-lemmas", "evenness"};
    for (std::size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].check == expected_names[i]);
    // the larger moduli run at reduced depth
    CHECK(reports[6].params.at("c") == "11");
    CHECK(reports[9].params.at("c") == "19");
    CHECK(reports[9].params.at("nmax") == "6");
}

TEST_CASE("reports serialize losslessly") {
    CheckReport r;
    r.check = "equidistribution";
    r.params = {{"l", "4"}, {"c", "9"}, {"nmax", "18"}};
    r.witnesses = {{7, "NF(1) = 13", "NF(2) = 14"}, {9, "NF(3) = 93", "NF(6) = 92"}};
    r.millis = 42;

    const auto j = r.to_json();
    CHECK(j.at("status") == "fail");
    const CheckReport back = CheckReport::from_json(j);
    CHECK(back.check == r.check);
    CHECK(back.params == r.params);
    CHECK(back.witnesses == r.witnesses);
    CHECK(back.millis == r.millis);
    CHECK(back.to_json() == j);

    // passing report round-trips too
    CheckReport ok;
    ok.check = "evenness";
    ok.params = {{"nmax", "16"}};
    ok.millis = 3;
    CHECK(CheckReport::from_json(ok.to_json()).to_json() == ok.to_json());

    // tampered status is rejected
    auto bad = ok.to_json();
    bad["status"] = "fail";
    CHECK_THROWS_AS(CheckReport::from_json(bad), std::invalid_argument);
}
