#ifndef QRANK_CYCLOTOMIC_HPP
#define QRANK_CYCLOTOMIC_HPP

#include <string>

#include "qrank/laurent.hpp"

namespace qrank {

/// The c-th cyclotomic polynomial, c >= 1, computed by exact division of
/// z^c - 1 by the product of the cyclotomic polynomials of the proper
/// divisors of c.  Results are cached.
LaurentPoly cyclotomic_poly(long c);

/// Element of Z[z]/(z^c - 1): a polynomial of degree < c with exponents
/// folded modulo c.
class CyclicResidue {
public:
    explicit CyclicResidue(long modulus);
    CyclicResidue(long modulus, const LaurentPoly& p);

    long modulus() const { return modulus_; }
    const LaurentPoly& residue() const { return residue_; }

    bool operator==(const CyclicResidue&) const = default;

    CyclicResidue& operator+=(const CyclicResidue& o);
    CyclicResidue& operator*=(const CyclicResidue& o);
    friend CyclicResidue operator+(CyclicResidue a, const CyclicResidue& b) { return a += b; }
    friend CyclicResidue operator*(CyclicResidue a, const CyclicResidue& b) { return a *= b; }

    /// The residue determined by z -> z^m; a ring map, and a coefficient
    /// permutation exactly when gcd(m, c) = 1.
    CyclicResidue substitute_power(long m) const;

    std::string str() const { return residue_.str(); }

private:
    long modulus_;
    LaurentPoly residue_;
};

/// Fold a Laurent polynomial into Z[z]/(z^c - 1), c >= 1.
CyclicResidue cyclic_reduce(const LaurentPoly& p, long c);

/// Element of Z[z]/Phi_c(z), i.e. the ring Z[zeta_c] with zeta_c a
/// primitive c-th root of unity.  The residue is fully reduced: its
/// exponents lie in [0, deg Phi_c).  Reduction is by repeated subtraction
/// of shifted Phi_c, which is monic, so all arithmetic stays integral.
class CyclotomicElt {
public:
    explicit CyclotomicElt(long modulus);             // zero
    CyclotomicElt(long modulus, const LaurentPoly& p); // reduces p

    static CyclotomicElt from_integer(long modulus, Int v);

    long modulus() const { return modulus_; }
    const LaurentPoly& residue() const { return residue_; }

    bool is_zero() const { return residue_.is_zero(); }
    /// True when the element lies in Z (constant residue).
    bool is_rational_integer() const { return residue_.is_constant(); }
    Int as_integer() const;

    bool operator==(const CyclotomicElt&) const = default;

    CyclotomicElt operator-() const;
    CyclotomicElt& operator+=(const CyclotomicElt& o);
    CyclotomicElt& operator-=(const CyclotomicElt& o);
    CyclotomicElt& operator*=(const CyclotomicElt& o);
    CyclotomicElt& operator*=(const Int& s);
    friend CyclotomicElt operator+(CyclotomicElt a, const CyclotomicElt& b) { return a += b; }
    friend CyclotomicElt operator-(CyclotomicElt a, const CyclotomicElt& b) { return a -= b; }
    friend CyclotomicElt operator*(CyclotomicElt a, const CyclotomicElt& b) { return a *= b; }
    friend CyclotomicElt operator*(CyclotomicElt a, const Int& s) { return a *= s; }
    friend CyclotomicElt operator*(const Int& s, CyclotomicElt a) { return a *= s; }

    std::string str() const;

private:
    long modulus_;
    LaurentPoly residue_;

    void reduce();
    void check_same_ring(const CyclotomicElt& o) const;
};

/// Image of p under z -> zeta_c, c >= 2.
CyclotomicElt cyc_eval(const LaurentPoly& p, long c);

/// Embed Z[zeta_c] into Z[zeta_t] for c | t, via zeta_c = zeta_t^{t/c}.
CyclotomicElt embed_root_power(const CyclotomicElt& x, long target_modulus);

} // namespace qrank

#endif
