#include "qrank/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "qrank/errors.hpp"

namespace qrank {

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int c, long exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exp, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::z() { return monomial(1, 1); }

LaurentPoly LaurentPoly::one_minus_z(long exp) {
    LaurentPoly p = constant(1);
    p.add_term(exp, -1);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Int LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentPoly LaurentPoly::substitute_power(long m) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e * m, c);
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        if (e != 0) r.add_term(e - 1, c * e);
    return r;
}

Int LaurentPoly::evaluate_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::is_symmetric() const {
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::divide_scalar(const Int& s) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, exact_div(c, s));
    return r;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NotDivisible("exact_div: division by zero polynomial");
    if (a.is_zero()) return {};
    // Shift both operands to ordinary polynomials with nonzero constant
    // term; since z^k is a unit, a Laurent quotient exists iff the shifted
    // polynomial quotient does, and valuations force that quotient to be
    // an ordinary polynomial.
    const long offset = a.min_exp() - b.min_exp();
    LaurentPoly rem = LaurentPoly::monomial(1, -a.min_exp()) * a;
    const LaurentPoly div = LaurentPoly::monomial(1, -b.min_exp()) * b;
    const long ddeg = div.max_exp();
    const Int lead = div.terms().rbegin()->second;

    LaurentPoly quot;
    while (!rem.is_zero()) {
        const long rdeg = rem.max_exp();
        if (rdeg < ddeg) throw NotDivisible("exact_div: nonzero remainder");
        const Int rlead = rem.terms().rbegin()->second;
        if (!divides(lead, rlead))
            throw NotDivisible("exact_div: leading coefficient not divisible");
        Int t = exact_div(rlead, lead);
        quot.add_term(rdeg - ddeg, t);
        rem -= LaurentPoly::monomial(t, rdeg - ddeg) * div;
    }
    return LaurentPoly::monomial(1, offset) * quot;
}

LaurentPoly pow(const LaurentPoly& base, unsigned long e) {
    LaurentPoly r = LaurentPoly::constant(1);
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int ac = abs(c);
        if (e == 0) {
            os << ac;
        } else {
            if (ac != 1) os << ac << "*";
            os << "z";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace qrank
