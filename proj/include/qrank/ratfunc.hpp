#ifndef QRANK_RATFUNC_HPP
#define QRANK_RATFUNC_HPP

#include <string>

#include "qrank/laurent.hpp"

namespace qrank {

/// Quotient of two integer Laurent polynomials.  The representation is
/// canonicalized only by sign (positive leading denominator coefficient)
/// and by removal of the common integer content of the pair; no
/// polynomial gcd reduction is performed, so value equality is tested by
/// cross multiplication.
class RatFunc {
public:
    RatFunc(); // zero = 0/1
    explicit RatFunc(LaurentPoly num);
    RatFunc(LaurentPoly num, LaurentPoly den); // den must be nonzero

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }

    /// Value equality: a/b == c/d iff ad == cb.
    bool operator==(const RatFunc& o) const;

    /// Formal d/dz by the quotient rule (denominator squares; no reduction).
    RatFunc derivative() const;
    /// den/num; throws NotDivisible on zero.
    RatFunc reciprocal() const;
    /// Exact conversion to a Laurent polynomial; throws NotDivisible when
    /// the value is not polynomial.
    LaurentPoly to_laurent() const;

    std::string str() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;

    void canonicalize();
};

} // namespace qrank

#endif
