#include "qrank/genfun.hpp"

#include <numeric>
#include <stdexcept>

#include "qrank/errors.hpp"
#include "qrank/ratfunc.hpp"

namespace qrank {

RkSeries::RkSeries(long marks, std::vector<LaurentPoly> coeffs)
    : marks_(marks), coeffs_(std::move(coeffs)) {
    if (marks_ < 1) throw std::invalid_argument("RkSeries: marks must be >= 1");
    if (coeffs_.empty()) throw std::invalid_argument("RkSeries: empty coefficient list");
}

RkSeries rk_coefficients(long k, long order) {
    if (k < 1) throw std::invalid_argument("rk_coefficients: k must be >= 1");
    if (order < 0) throw std::invalid_argument("rk_coefficients: order must be >= 0");

    std::vector<LaurentPoly> dens;
    dens.reserve(static_cast<std::size_t>(k));
    for (long i = 1; i <= k; ++i) {
        LaurentPoly d = LaurentPoly::constant(1);
        for (long j = 1; j <= k; ++j) {
            if (j == i) continue;
            d *= LaurentPoly::monomial(1, i) - LaurentPoly::monomial(1, j);
            d *= LaurentPoly::one_minus_z(-(i + j));
        }
        dens.push_back(std::move(d));
    }
    LaurentPoly common = LaurentPoly::constant(1);
    for (const auto& d : dens) common *= d;

    const QSeries<LaurentPoly> r1 = r1_series(order);
    QSeries<LaurentPoly> numerator(order, LaurentPoly{});
    for (long i = 1; i <= k; ++i) {
        LaurentPoly cofactor = LaurentPoly::constant(1);
        for (long j = 1; j <= k; ++j)
            if (j != i) cofactor *= dens[static_cast<std::size_t>(j) - 1];
        numerator = numerator + qs_map(r1, [&](const LaurentPoly& p) {
                        return p.substitute_power(i) * cofactor;
                    });
    }

    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) {
        try {
            coeffs.push_back(exact_div(numerator.coeff(n), common));
        } catch (const NotDivisible&) {
            throw ExactDivisionFailed("rk_coefficients: coefficient of q^" + std::to_string(n) +
                                      " is not polynomial (bug)");
        }
    }
    return RkSeries(k, std::move(coeffs));
}

std::vector<CyclicResidue> reduce_mod(const RkSeries& s, long c) {
    if (c < 2) throw std::invalid_argument("reduce_mod: c must be >= 2");
    std::vector<CyclicResidue> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (long n = 0; n <= s.order(); ++n) out.push_back(cyclic_reduce(s.coeff(n), c));
    return out;
}

QSeries<CyclotomicElt> substitute_root(const RkSeries& s, long c, long d) {
    if (c < 2) throw std::invalid_argument("substitute_root: c must be >= 2");
    if (d < 1 || d > c) throw std::invalid_argument("substitute_root: need 1 <= d <= c");
    std::vector<CyclotomicElt> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (long n = 0; n <= s.order(); ++n)
        out.emplace_back(cyc_eval(s.coeff(n).substitute_power(d), c));
    return QSeries<CyclotomicElt>(std::move(out));
}

Int mobius_coeff(long l, long c, long d, long r) {
    if (l < 1) throw std::invalid_argument("mobius_coeff: l must be >= 1");
    if (c < 1 || d < 1 || r < 1 || c % d != 0 || c % r != 0)
        throw std::invalid_argument("mobius_coeff: need d | c and r | c");
    const long g = std::gcd(r, c / d);
    const long num = totient(c / r);
    const long den = totient(c / (g * d));
    if (num % den != 0)
        throw NonIntegerCoefficient("mobius_coeff: totient quotient not integral");
    return Int(mobius(c / (g * d))) * (num / den);
}

QSeries<CyclotomicElt> c9_pipeline(long order) {
    const QSeries<LaurentPoly> r1 = r1_series(order);
    const QSeries<LaurentPoly> r1d = qs_dz(r1);
    const QSeries<LaurentPoly> r1dd = qs_dz(r1d);

    auto lift = [](const QSeries<LaurentPoly>& s) {
        return qs_map(s, [](const LaurentPoly& p) { return RatFunc(p); });
    };
    const QSeries<RatFunc> r1_at_one = qs_map(r1, [](const LaurentPoly& p) {
        return RatFunc(LaurentPoly::constant(p.evaluate_at_one()));
    });

    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly omz = LaurentPoly::one_minus_z(1);
    const LaurentPoly omzi = LaurentPoly::one_minus_z(-1);
    const LaurentPoly omz2 = LaurentPoly::one_minus_z(2);
    const LaurentPoly omz2i = LaurentPoly::one_minus_z(-2);
    const LaurentPoly zm1 = LaurentPoly::z() - one; // z - 1

    // R1(1;q) / ((1-z)^3 (1-z^{-1})^3)
    const RatFunc head(one, pow(omz, 3) * pow(omzi, 3));

    // bracket = R1'' z^4 (z-1)^2 (1-z^{-1})^2 (1-z^{-2})
    //         + 2 R1' (1-z)^2 (1-z^{-1})^2 (-z^3 - 2z^2 - 2z)
    //         + 2 R1 (1-z^2)^2 (1-z^{-2})
    const LaurentPoly b_dd = LaurentPoly::monomial(1, 4) * pow(zm1, 2) * pow(omzi, 2) * omz2i;
    LaurentPoly cubic;
    cubic += LaurentPoly::monomial(-1, 3);
    cubic += LaurentPoly::monomial(-2, 2);
    cubic += LaurentPoly::monomial(-2, 1);
    const LaurentPoly b_d = Int(2) * (pow(omz, 2) * pow(omzi, 2) * cubic);
    const LaurentPoly b_0 = Int(2) * (pow(omz2, 2) * omz2i);

    const QSeries<RatFunc> bracket = lift(r1dd).scaled(RatFunc(b_dd)) +
                                     lift(r1d).scaled(RatFunc(b_d)) +
                                     lift(r1).scaled(RatFunc(b_0));

    // (-z^{-4}) / (2 (1-z)^3 (1-z^{-1})^3 (1-z^{-2})^3)
    const RatFunc prefactor(LaurentPoly::monomial(-1, -4),
                            Int(2) * (pow(omz, 3) * pow(omzi, 3) * pow(omz2i, 3)));

    const QSeries<RatFunc> total = r1_at_one.scaled(head) + bracket.scaled(prefactor);

    std::vector<CyclotomicElt> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) {
        LaurentPoly exact;
        try {
            exact = total.coeff(n).to_laurent();
        } catch (const NotDivisible&) {
            throw ExactDivisionFailed("c9_pipeline: coefficient of q^" + std::to_string(n) +
                                      " is not polynomial (bug)");
        }
        out.push_back(cyc_eval(exact, 3));
    }
    return QSeries<CyclotomicElt>(std::move(out));
}

ZetaThreeTerms zeta_three_sum(long n, const RankTable& table) {
    // Per-k coefficients of the termwise-derivative regrouping by the
    // residue of the rank mod 3:
    //   C0 = (27k^2 - 3k) N(3k)   - 6k N(3k+1)       + 2 N(3k+2)
    //   C1 = (27k^2 + 15k) N(3k+1) - (6k+4) N(3k+2)
    //   C2 = (27k^2 + 33k + 8) N(3k+2) - 6k N(3k)
    // and zeta_3^2 = -1 - zeta_3 folds the value to (C0-C2) + (C1-C2) zeta_3.
    Int c0 = 0, c1 = 0, c2 = 0;
    const long kmax = n / 3 + 2;
    for (long k = -kmax; k <= kmax; ++k) {
        const Int n0 = table.count(3 * k, n);
        const Int n1 = table.count(3 * k + 1, n);
        const Int n2 = table.count(3 * k + 2, n);
        c0 += (27 * k * k - 3 * k) * n0 - 6 * k * n1 + 2 * n2;
        c1 += (27 * k * k + 15 * k) * n1 - (6 * k + 4) * n2;
        c2 += (27 * k * k + 33 * k + 8) * n2 - 6 * k * n0;
    }
    return ZetaThreeTerms{c0 - c2, c1 - c2};
}

} // namespace qrank
