#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qrank/errors.hpp"
#include "qrank/qseries.hpp"
#include "qrank/ranktable.hpp"

using namespace qrank;

namespace {

QSeries<Int> random_series(std::mt19937& rng, long order) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    QSeries<Int> s(order, Int(0));
    for (long n = 0; n <= order; ++n) s.coeff(n) = coeff(rng);
    return s;
}

QSeries<LaurentPoly> random_lp_series(std::mt19937& rng, long order) {
    std::uniform_int_distribution<int> coeff(-4, 4), exp(-3, 3), nterms(0, 3);
    QSeries<LaurentPoly> s(order, LaurentPoly{});
    for (long n = 0; n <= order; ++n) {
        const int k = nterms(rng);
        for (int i = 0; i < k; ++i) s.coeff(n) += LaurentPoly::monomial(coeff(rng), exp(rng));
    }
    return s;
}

} // namespace

TEST_CASE("multiplication basics") {
    // (1+q)(1-q) = 1-q^2
    QSeries<Int> a(4, 0), b(4, 0);
    a.coeff(0) = 1;
    a.coeff(1) = 1;
    b.coeff(0) = 1;
    b.coeff(1) = -1;
    const auto p = a * b;
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(3) == 0);

    // identity and annihilation by (1-q) of the geometric series
    const auto one = qs_one(4, Int(0));
    CHECK(a * one == a);
    QSeries<Int> geo(4, 1); // 1 + q + q^2 + ...
    const auto collapsed = b * geo;
    CHECK(collapsed.coeff(0) == 1);
    for (long n = 1; n <= 4; ++n) CHECK(collapsed.coeff(n) == 0);
}

TEST_CASE("order truncates to the minimum") {
    QSeries<Int> a(6, 1), b(3, 1);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK(a.truncated(2).order() == 2);
}

TEST_CASE("pochhammer products") {
    // (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
    const auto p2 = qs_pochhammer(5, Int(1), 1, 2);
    CHECK(p2.coeff(0) == 1);
    CHECK(p2.coeff(1) == -1);
    CHECK(p2.coeff(2) == -1);
    CHECK(p2.coeff(3) == 1);
    CHECK(p2.coeff(4) == 0);

    // (zq;q)_1 = 1 - z q
    const auto zq = qs_pochhammer(3, LaurentPoly::z(), 1, 1);
    CHECK(zq.coeff(0) == LaurentPoly::constant(1));
    CHECK(zq.coeff(1) == -LaurentPoly::z());
    CHECK(zq.coeff(2).is_zero());

    // coefficient of q^4 in 1/(q;q)_inf is p(4) = 5
    const auto euler = qs_invert(qs_pochhammer(10, Int(1), 1));
    CHECK(euler.coeff(4) == 5);
    for (long n = 0; n <= 10; ++n) CHECK(euler.coeff(n) == partition_count(n));
}

TEST_CASE("inversion") {
    // 1/(1-q) = 1 + q + q^2 + ...
    auto denom = qs_one(6, Int(0));
    denom.coeff(1) = -1;
    const auto inv = qs_invert(denom);
    for (long n = 0; n <= 6; ++n) CHECK(inv.coeff(n) == 1);

    CHECK(qs_invert(qs_one(4, Int(0))) == qs_one(4, Int(0)));

    QSeries<Int> nonunit(4, 0);
    nonunit.coeff(1) = 1;
    nonunit.coeff(2) = 1;
    CHECK_THROWS_AS(qs_invert(nonunit), NonUnitConstantTerm);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_series(rng, 8);
        s.coeff(0) = trial % 2 ? 1 : -1;
        CHECK(s * qs_invert(s) == qs_one(8, Int(0)));
    }

    // a Laurent unit constant term (monomial) inverts too
    QSeries<LaurentPoly> ls(3, LaurentPoly{});
    ls.coeff(0) = LaurentPoly::monomial(-1, 2);
    ls.coeff(1) = LaurentPoly::z();
    CHECK(ls * qs_invert(ls) == qs_one(3, LaurentPoly{}));
}

TEST_CASE("termwise z-differentiation") {
    // d/dz of (z + z^{-1}) q^2
    QSeries<LaurentPoly> s(3, LaurentPoly{});
    s.coeff(2) = LaurentPoly::z() + LaurentPoly::monomial(1, -1);
    const auto d = qs_dz(s);
    CHECK(d.coeff(2) == LaurentPoly::constant(1) + LaurentPoly::monomial(-1, -2));
    CHECK(d.coeff(0).is_zero());

    const auto zero = qs_dz(qs_one(3, LaurentPoly{}));
    for (long n = 0; n <= 3; ++n) CHECK(zero.coeff(n).is_zero());

    // linearity and the product rule on random series
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_lp_series(rng, 5);
        const auto b = random_lp_series(rng, 5);
        CHECK(qs_dz(a + b) == qs_dz(a) + qs_dz(b));
        CHECK(qs_dz(a * b) == qs_dz(a) * b + a * qs_dz(b));
    }
}

TEST_CASE("second derivative reflection of the rank series") {
    // per-coefficient symmetry p(z) = p(1/z) forces
    // p''(1/z) = z^4 p''(z) + 2 z^3 p'(z)
    const auto r1 = r1_series(12);
    for (long n = 0; n <= 12; ++n) {
        const LaurentPoly p1 = r1.coeff(n).derivative();
        const LaurentPoly p2 = p1.derivative();
        const LaurentPoly lhs = p2.substitute_power(-1);
        const LaurentPoly rhs =
            LaurentPoly::monomial(1, 4) * p2 + LaurentPoly::monomial(2, 3) * p1;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mul commutes and associates on random series") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, 6), b = random_series(rng, 6),
                   c = random_series(rng, 6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("rings must match") {
    QSeries<CyclotomicElt> a(2, CyclotomicElt(5));
    QSeries<CyclotomicElt> b(2, CyclotomicElt(7));
    CHECK_THROWS_AS(a + b, RingMismatch);
    CHECK_THROWS_AS(a * b, RingMismatch);
    CHECK_THROWS_AS(QSeries<CyclotomicElt>(std::vector<CyclotomicElt>{
                        CyclotomicElt(5), CyclotomicElt(7)}),
                    RingMismatch);
}
