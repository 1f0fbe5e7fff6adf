#ifndef QRANK_GENFUN_HPP
#define QRANK_GENFUN_HPP

#include <vector>

#include "qrank/cyclotomic.hpp"
#include "qrank/qseries.hpp"
#include "qrank/ranktable.hpp"

namespace qrank {

/// The k-variable full-rank generating function specialized at
/// x_i = z^i: the coefficient of q^n is the exact Laurent polynomial
/// sum_m NF_k(m,n) z^m, a finite symmetric polynomial in z.
class RkSeries {
public:
    RkSeries(long marks, std::vector<LaurentPoly> coeffs);

    long marks() const { return marks_; }
    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const LaurentPoly& coeff(long n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

private:
    long marks_;
    std::vector<LaurentPoly> coeffs_;
};

/// Expand sum_{i=1}^{k} R1(z^i;q) / prod_{j!=i} (z^i - z^j)(1 - z^{-i-j})
/// over the literal common denominator and recover each q^n coefficient
/// by exact Laurent division.  Polynomiality is guaranteed, so a failed
/// division throws ExactDivisionFailed (an implementation bug, not bad
/// input).  The singular specializations z -> zeta_c^d (d > 1) need no
/// limit process on this exact form.
RkSeries rk_coefficients(long k, long order);

/// Per-n reduction into Z[z]/(z^c - 1): the coefficient of z^b is
/// NF_k(b, c, n).
std::vector<CyclicResidue> reduce_mod(const RkSeries& s, long c);

/// Per-n evaluation at z = zeta_c^d in Z[z]/Phi_c, 1 <= d <= c.
QSeries<CyclotomicElt> substitute_root(const RkSeries& s, long c, long d);

/// Coefficient of NF_l(class r, c, n) in the root-of-unity evaluation at
/// zeta_c^d: mu(c/(g d)) * phi(c/r) / phi(c/(g d)) with g = gcd(r, c/d).
/// Requires d | c and r | c; r = c denotes the zero class.  Throws
/// NonIntegerCoefficient when the totient quotient is not integral.
Int mobius_coeff(long l, long c, long d, long r);

/// The explicit c = 9 evaluation: the closed form for
/// R_4(z, z^{-1}, 1, z; q) built from the rank series and its first and
/// second z-derivatives over exact rational-function algebra, evaluated
/// at z = zeta_3.  Must agree termwise with
/// substitute_root(rk_coefficients(4, order), 9, 3) under the embedding
/// zeta_3 = zeta_9^3.
QSeries<CyclotomicElt> c9_pipeline(long order);

/// Component sums of the zeta_3-regrouped expansion of the c = 9
/// evaluation: value = (unit + zeta * zeta_3) / 54.  The zeta component
/// vanishes for every n as a consequence of the evenness of the rank.
struct ZetaThreeTerms {
    Int unit;
    Int zeta;
};
ZetaThreeTerms zeta_three_sum(long n, const RankTable& table);

} // namespace qrank

#endif
