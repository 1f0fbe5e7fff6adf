#ifndef QRANK_LAURENT_HPP
#define QRANK_LAURENT_HPP

#include <map>
#include <string>

#include "qrank/integers.hpp"

namespace qrank {

/// Laurent polynomial in z with exact integer coefficients, stored as a
/// sparse exponent -> coefficient map.  Canonical form: no zero
/// coefficients are ever stored, so equality is plain map equality and
/// the zero polynomial is the empty map.
class LaurentPoly {
public:
    using Terms = std::map<long, Int>;

    LaurentPoly() = default; // zero

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(Int c, long exp);
    /// The variable z itself.
    static LaurentPoly z();
    /// 1 - z^exp, a recurring factor throughout.
    static LaurentPoly one_minus_z(long exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient of z^exp (zero when absent).
    Int coeff(long exp) const;
    /// Lowest/highest exponent; polynomial must be nonzero.
    long min_exp() const;
    long max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Int& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Int& s) { return a *= s; }
    friend LaurentPoly operator*(const Int& s, LaurentPoly a) { return a *= s; }

    bool operator==(const LaurentPoly&) const = default;

    /// z -> z^m on every term (m may be zero or negative).
    LaurentPoly substitute_power(long m) const;
    /// Formal d/dz.
    LaurentPoly derivative() const;
    /// Value at z = 1, i.e. the coefficient sum.
    Int evaluate_at_one() const;
    /// Fixed under z -> z^{-1}?
    bool is_symmetric() const;
    /// gcd of all coefficients (0 for the zero polynomial).
    Int content() const;
    /// Divide every coefficient by s, checked exact.
    LaurentPoly divide_scalar(const Int& s) const;

    std::string str() const;

private:
    Terms terms_;

    void add_term(long exp, const Int& c);
    friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
};

/// Exact quotient a / b in the Laurent ring; throws NotDivisible when no
/// Laurent-polynomial quotient exists (b must be nonzero).
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly pow(const LaurentPoly& base, unsigned long e);

} // namespace qrank

#endif
