#include "qrank/ratfunc.hpp"

#include <stdexcept>
#include <utility>

#include "qrank/errors.hpp"

namespace qrank {

RatFunc::RatFunc() : den_(LaurentPoly::constant(1)) {}

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(1);
        return;
    }
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.content().get_mpz_t());
    if (g > 1) {
        num_ = num_.divide_scalar(g);
        den_ = den_.divide_scalar(g);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    if (num_.is_zero()) den_ = LaurentPoly::constant(1);
    canonicalize();
    return *this;
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::reciprocal() const {
    if (num_.is_zero()) throw NotDivisible("RatFunc::reciprocal of zero");
    return RatFunc(den_, num_);
}

LaurentPoly RatFunc::to_laurent() const { return exact_div(num_, den_); }

std::string RatFunc::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

} // namespace qrank
