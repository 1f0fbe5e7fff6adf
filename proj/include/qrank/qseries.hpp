#ifndef QRANK_QSERIES_HPP
#define QRANK_QSERIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qrank/cyclotomic.hpp"
#include "qrank/errors.hpp"
#include "qrank/integers.hpp"
#include "qrank/laurent.hpp"
#include "qrank/ratfunc.hpp"

namespace qrank {

/// Customization point telling QSeries how to make ring constants that
/// live in the same ring as an existing element, whether two elements
/// belong to the same ring, and how to invert units.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Int> {
    static Int zero_like(const Int&) { return 0; }
    static Int one_like(const Int&) { return 1; }
    static bool same_ring(const Int&, const Int&) { return true; }
    static std::optional<Int> try_invert(const Int& x) {
        if (x == 1 || x == -1) return x;
        return std::nullopt;
    }
};

template <>
struct RingTraits<LaurentPoly> {
    static LaurentPoly zero_like(const LaurentPoly&) { return {}; }
    static LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly::constant(1); }
    static bool same_ring(const LaurentPoly&, const LaurentPoly&) { return true; }
    // Units of Z((z)) restricted to polynomials: +-z^k.
    static std::optional<LaurentPoly> try_invert(const LaurentPoly& x) {
        if (x.term_count() != 1) return std::nullopt;
        const auto& [e, c] = *x.terms().begin();
        if (c != 1 && c != -1) return std::nullopt;
        return LaurentPoly::monomial(c, -e);
    }
};

template <>
struct RingTraits<RatFunc> {
    static RatFunc zero_like(const RatFunc&) { return {}; }
    static RatFunc one_like(const RatFunc&) { return RatFunc(LaurentPoly::constant(1)); }
    static bool same_ring(const RatFunc&, const RatFunc&) { return true; }
    static std::optional<RatFunc> try_invert(const RatFunc& x) {
        if (x.is_zero()) return std::nullopt;
        return x.reciprocal();
    }
};

template <>
struct RingTraits<CyclotomicElt> {
    static CyclotomicElt zero_like(const CyclotomicElt& x) { return CyclotomicElt(x.modulus()); }
    static CyclotomicElt one_like(const CyclotomicElt& x) {
        return CyclotomicElt::from_integer(x.modulus(), 1);
    }
    static bool same_ring(const CyclotomicElt& a, const CyclotomicElt& b) {
        return a.modulus() == b.modulus();
    }
    static std::optional<CyclotomicElt> try_invert(const CyclotomicElt& x) {
        if (x == one_like(x)) return x;
        if (x == -one_like(x)) return x;
        return std::nullopt;
    }
};

/// Truncated formal power series in q over a coefficient ring R,
/// tracking coefficients of q^0 .. q^order exactly.  Binary operations
/// truncate to the smaller order (working mod q^{order+1}) and require
/// both operands to live over the same ring.
template <class R>
class QSeries {
public:
    QSeries(long order, const R& zero) : coeffs_(static_cast<std::size_t>(order) + 1, zero) {}

    explicit QSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("QSeries: empty coefficient list");
        for (const auto& c : coeffs_)
            if (!RingTraits<R>::same_ring(c, coeffs_.front()))
                throw RingMismatch("QSeries: coefficients from different rings");
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    const R& coeff(long n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    R& coeff(long n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    bool operator==(const QSeries&) const = default;

    QSeries truncated(long new_order) const {
        if (new_order >= order()) return *this;
        std::vector<R> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
        return QSeries(std::move(c));
    }

    QSeries operator-() const {
        QSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        check_rings(a, b);
        const long n = std::min(a.order(), b.order());
        QSeries r = a.truncated(n);
        for (long i = 0; i <= n; ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        check_rings(a, b);
        const long n = std::min(a.order(), b.order());
        QSeries r = a.truncated(n);
        for (long i = 0; i <= n; ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }

    /// Cauchy product mod q^{order+1}.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        check_rings(a, b);
        const long n = std::min(a.order(), b.order());
        QSeries r(n, RingTraits<R>::zero_like(a.coeffs_.front()));
        for (long i = 0; i <= n; ++i)
            for (long j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return r;
    }

    /// Multiply every coefficient by a fixed ring element.
    QSeries scaled(const R& s) const {
        QSeries r = *this;
        for (auto& c : r.coeffs_) c = c * s;
        return r;
    }

    /// Multiply by q^j (coefficients shifted up, overflow truncated).
    QSeries shifted_q(long j) const {
        QSeries r(order(), RingTraits<R>::zero_like(coeffs_.front()));
        for (long i = 0; i + j <= order(); ++i) r.coeffs_[i + j] = coeffs_[i];
        return r;
    }

private:
    std::vector<R> coeffs_;

    static void check_rings(const QSeries& a, const QSeries& b) {
        if (!RingTraits<R>::same_ring(a.coeffs_.front(), b.coeffs_.front()))
            throw RingMismatch("QSeries: operands over different rings");
    }
};

template <class R>
QSeries<R> qs_one(long order, const R& like) {
    QSeries<R> r(order, RingTraits<R>::zero_like(like));
    r.coeff(0) = RingTraits<R>::one_like(like);
    return r;
}

/// Pochhammer-style product of the factors (1 - u q^{start + i}) for
/// i = 0 .. count-1; with count omitted the product runs to the
/// truncation order (factors beyond it are 1 mod q^{order+1}).
template <class R>
QSeries<R> qs_pochhammer(long order, const R& u, long start,
                         std::optional<long> count = std::nullopt) {
    QSeries<R> r = qs_one(order, u);
    const long last = count ? start + *count - 1 : order;
    for (long e = start; e <= last && e <= order; ++e) {
        QSeries<R> factor = qs_one(order, u);
        if (e <= order) factor.coeff(e) = -u;
        r = r * factor;
    }
    return r;
}

/// Multiplicative inverse mod q^{order+1}; the constant term must be a
/// unit of the coefficient ring.
template <class R>
QSeries<R> qs_invert(const QSeries<R>& a) {
    const auto u = RingTraits<R>::try_invert(a.coeff(0));
    if (!u) throw NonUnitConstantTerm("qs_invert: constant term is not a unit");
    QSeries<R> b(a.order(), RingTraits<R>::zero_like(a.coeff(0)));
    b.coeff(0) = *u;
    for (long n = 1; n <= a.order(); ++n) {
        R acc = a.coeff(1) * b.coeff(n - 1);
        for (long k = 2; k <= n; ++k) acc += a.coeff(k) * b.coeff(n - k);
        b.coeff(n) = -(*u * acc);
    }
    return b;
}

/// Termwise formal derivative in z of every q-coefficient.
template <class R>
    requires requires(const R& r) { { r.derivative() } -> std::convertible_to<R>; }
QSeries<R> qs_dz(const QSeries<R>& a) {
    QSeries<R> r = a;
    for (long n = 0; n <= a.order(); ++n) r.coeff(n) = a.coeff(n).derivative();
    return r;
}

/// Apply a coefficient transformation, possibly into another ring.
template <class R, class F>
auto qs_map(const QSeries<R>& a, F&& f) {
    using R2 = std::decay_t<decltype(f(a.coeff(0)))>;
    std::vector<R2> out;
    out.reserve(a.order() + 1);
    for (long n = 0; n <= a.order(); ++n) out.push_back(f(a.coeff(n)));
    return QSeries<R2>(std::move(out));
}

} // namespace qrank

#endif
