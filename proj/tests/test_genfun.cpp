#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qrank/durfee.hpp"
#include "qrank/errors.hpp"
#include "qrank/genfun.hpp"

using namespace qrank;

namespace {

LaurentPoly hist_poly(const std::map<long, Int>& hist) {
    LaurentPoly p;
    for (const auto& [m, v] : hist) p += LaurentPoly::monomial(v, m);
    return p;
}

} // namespace

TEST_CASE("one mark reduces to the rank series") {
    const auto direct = r1_series(12);
    const RkSeries s = rk_coefficients(1, 12);
    for (long n = 0; n <= 12; ++n) CHECK(s.coeff(n) == direct.coeff(n));
}

TEST_CASE("series coefficients match brute-force symbol counts") {
    for (long k = 1; k <= 4; ++k) {
        const RkSeries s = rk_coefficients(k, 12);
        for (long n = 0; n <= 12; ++n) {
            CHECK(s.coeff(n) == hist_poly(nf_counts(k, n)));
            CHECK(s.coeff(n).is_symmetric());
        }
    }
}

TEST_CASE("four marks at weight four") {
    const RkSeries s = rk_coefficients(4, 6);
    for (long n = 0; n <= 3; ++n) CHECK(s.coeff(n).is_zero());
    CHECK(s.coeff(4) == LaurentPoly::constant(1));
}

TEST_CASE("reduction mod z^c - 1 gives residue class counts") {
    const RkSeries s = rk_coefficients(4, 10);
    const auto residues = reduce_mod(s, 9);

    CHECK(residues[4].residue() == LaurentPoly::constant(1));

    for (long n = 0; n <= 10; ++n) {
        Int total = 0;
        for (const auto& [e, c] : residues[static_cast<std::size_t>(n)].residue().terms()) {
            CHECK(c > 0);
            total += c;
        }
        CHECK(total == d_count(4, n, DurfeeBackend::Enumerate));
        for (long b = 0; b < 9; ++b)
            CHECK(residues[static_cast<std::size_t>(n)].residue().coeff(b) ==
                  nf_class(4, b, 9, n));
    }
}

TEST_CASE("reduction is fixed exactly by coprime power maps") {
    const RkSeries s = rk_coefficients(4, 8);
    const auto residues = reduce_mod(s, 9);
    for (long n = 0; n <= 8; ++n) {
        const auto& r = residues[static_cast<std::size_t>(n)];
        for (long m = 1; m < 9; ++m)
            if (std::gcd(m, 9L) == 1) CHECK(r.substitute_power(m) == r);
    }
    // a non-coprime witness must move it somewhere in the range
    bool moved = false;
    for (long n = 0; n <= 8; ++n) {
        const auto& r = residues[static_cast<std::size_t>(n)];
        if (r.substitute_power(3) != r) moved = true;
    }
    CHECK(moved);
}

TEST_CASE("root substitution") {
    const RkSeries s = rk_coefficients(4, 10);

    // z = 1 (d = c) sums every class: D_k(n)
    const auto at_one = substitute_root(s, 9, 9);
    for (long n = 0; n <= 10; ++n) {
        CHECK(at_one.coeff(n).is_rational_integer());
        CHECK(at_one.coeff(n).as_integer() == d_count(4, n, DurfeeBackend::Enumerate));
    }

    // d = 1: NF4(0,9,n) - NF4(3,9,n), an ordinary integer
    const RankTable t = rank_table(10, RankBackend::Enumerate);
    const auto at_zeta = substitute_root(s, 9, 1);
    for (long n = 0; n <= 10; ++n) {
        CHECK(at_zeta.coeff(n).is_rational_integer());
        const Int expected = nf_class(4, 0, 9, n) - nf_class(4, 3, 9, n);
        CHECK(at_zeta.coeff(n).as_integer() == expected);
        CHECK(at_zeta.coeff(n).as_integer() ==
              rank_class_count(3, 9, n, t) - rank_class_count(4, 9, n, t));
    }

    // d = 3: NF4(0) - 3 NF4(1) + 2 NF4(3)
    const auto at_zeta3 = substitute_root(s, 9, 3);
    for (long n = 0; n <= 10; ++n) {
        CHECK(at_zeta3.coeff(n).is_rational_integer());
        const Int expected =
            nf_class(4, 0, 9, n) - 3 * nf_class(4, 1, 9, n) + 2 * nf_class(4, 3, 9, n);
        CHECK(at_zeta3.coeff(n).as_integer() == expected);
    }
}

TEST_CASE("root-of-unity coefficients from the divisor formula") {
    CHECK(mobius_coeff(4, 9, 1, 9) == 1);
    CHECK(mobius_coeff(4, 9, 1, 1) == 0);
    CHECK(mobius_coeff(4, 9, 1, 3) == -1);

    CHECK(mobius_coeff(4, 9, 3, 9) == 1);
    CHECK(mobius_coeff(4, 9, 3, 1) == -3);
    CHECK(mobius_coeff(4, 9, 3, 3) == 2);

    for (long c : {3L, 5L, 9L, 15L}) CHECK(mobius_coeff(2, c, c, c) == 1);

    CHECK_THROWS_AS(mobius_coeff(4, 9, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(mobius_coeff(4, 9, 3, 4), std::invalid_argument);
}

TEST_CASE("divisor formula matches the substituted series") {
    const RkSeries s = rk_coefficients(4, 18);
    for (long d : {1L, 3L}) {
        const auto values = substitute_root(s, 9, d);
        for (long n = 0; n <= 18; ++n) {
            Int combo = 0;
            for (long r : {1L, 3L, 9L})
                combo += mobius_coeff(4, 9, d, r) * nf_class(4, r % 9, 9, n);
            CHECK(values.coeff(n).is_rational_integer());
            CHECK(values.coeff(n).as_integer() == combo);
        }
    }
}

TEST_CASE("the explicit c=9 derivative pipeline") {
    const long order = 14;
    const auto pipeline = c9_pipeline(order);
    const auto direct = substitute_root(rk_coefficients(4, order), 9, 3);
    for (long n = 0; n <= order; ++n) {
        CHECK(pipeline.coeff(n).modulus() == 3);
        CHECK(embed_root_power(pipeline.coeff(n), 9) == direct.coeff(n));
    }

    // q^4 coefficient is 1 = NF4(0,9,4) - 3 NF4(1,9,4) + 2 NF4(3,9,4)
    CHECK(pipeline.coeff(4) == CyclotomicElt::from_integer(3, 1));
}

TEST_CASE("zeta_3 component of the regrouped expansion vanishes") {
    const long order = 14;
    const RankTable t = rank_table(order, RankBackend::Enumerate);
    const auto pipeline = c9_pipeline(order);
    for (long n = 0; n <= order; ++n) {
        const auto [unit, zeta] = zeta_three_sum(n, t);
        CHECK(zeta == 0);
        CHECK(unit % 54 == 0);
        CHECK(CyclotomicElt::from_integer(3, unit / 54) == pipeline.coeff(n));
    }
}
