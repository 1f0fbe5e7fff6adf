#include "qrank/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "qrank/errors.hpp"

namespace qrank {

namespace {

LaurentPoly cyclotomic_uncached(long c, const std::unordered_map<long, LaurentPoly>& cache) {
    LaurentPoly num = LaurentPoly::monomial(1, c) - LaurentPoly::constant(1);
    for (long d = 1; d < c; ++d)
        if (c % d == 0) num = exact_div(num, cache.at(d));
    return num;
}

} // namespace

LaurentPoly cyclotomic_poly(long c) {
    if (c < 1) throw std::invalid_argument("cyclotomic_poly: c must be >= 1");
    static std::mutex mu;
    static std::unordered_map<long, LaurentPoly> cache;
    std::lock_guard lock(mu);
    for (long d = 1; d <= c; ++d)
        if (c % d == 0 && !cache.count(d)) cache.emplace(d, cyclotomic_uncached(d, cache));
    return cache.at(c);
}

// ---- CyclicResidue ----

CyclicResidue::CyclicResidue(long modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("CyclicResidue: modulus must be >= 1");
}

CyclicResidue::CyclicResidue(long modulus, const LaurentPoly& p) : CyclicResidue(modulus) {
    for (const auto& [e, c] : p.terms()) {
        long f = e % modulus_;
        if (f < 0) f += modulus_;
        residue_ += LaurentPoly::monomial(c, f);
    }
}

CyclicResidue& CyclicResidue::operator+=(const CyclicResidue& o) {
    if (modulus_ != o.modulus_) throw RingMismatch("CyclicResidue: modulus mismatch");
    residue_ += o.residue_;
    return *this;
}

CyclicResidue& CyclicResidue::operator*=(const CyclicResidue& o) {
    if (modulus_ != o.modulus_) throw RingMismatch("CyclicResidue: modulus mismatch");
    *this = CyclicResidue(modulus_, residue_ * o.residue_);
    return *this;
}

CyclicResidue CyclicResidue::substitute_power(long m) const {
    return CyclicResidue(modulus_, residue_.substitute_power(m));
}

CyclicResidue cyclic_reduce(const LaurentPoly& p, long c) { return CyclicResidue(c, p); }

// ---- CyclotomicElt ----

CyclotomicElt::CyclotomicElt(long modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("CyclotomicElt: modulus must be >= 1");
}

CyclotomicElt::CyclotomicElt(long modulus, const LaurentPoly& p) : CyclotomicElt(modulus) {
    // zeta^e = zeta^{e mod c}, so fold exponents before polynomial reduction
    for (const auto& [e, c] : p.terms()) {
        long f = e % modulus_;
        if (f < 0) f += modulus_;
        residue_ += LaurentPoly::monomial(c, f);
    }
    reduce();
}

CyclotomicElt CyclotomicElt::from_integer(long modulus, Int v) {
    return CyclotomicElt(modulus, LaurentPoly::constant(std::move(v)));
}

void CyclotomicElt::reduce() {
    const LaurentPoly phi = cyclotomic_poly(modulus_);
    const long deg = phi.max_exp();
    while (!residue_.is_zero() && residue_.max_exp() >= deg) {
        const long d = residue_.max_exp();
        const Int lead = residue_.terms().rbegin()->second;
        residue_ -= LaurentPoly::monomial(lead, d - deg) * phi;
    }
}

void CyclotomicElt::check_same_ring(const CyclotomicElt& o) const {
    if (modulus_ != o.modulus_) throw RingMismatch("CyclotomicElt: modulus mismatch");
}

Int CyclotomicElt::as_integer() const {
    if (!is_rational_integer())
        throw std::logic_error("CyclotomicElt::as_integer: residue " + residue_.str() +
                               " is not a rational integer");
    return residue_.evaluate_at_one();
}

CyclotomicElt CyclotomicElt::operator-() const {
    CyclotomicElt r(modulus_);
    r.residue_ = -residue_;
    return r;
}

CyclotomicElt& CyclotomicElt::operator+=(const CyclotomicElt& o) {
    check_same_ring(o);
    residue_ += o.residue_;
    return *this;
}

CyclotomicElt& CyclotomicElt::operator-=(const CyclotomicElt& o) {
    check_same_ring(o);
    residue_ -= o.residue_;
    return *this;
}

CyclotomicElt& CyclotomicElt::operator*=(const CyclotomicElt& o) {
    check_same_ring(o);
    residue_ *= o.residue_;
    reduce();
    return *this;
}

CyclotomicElt& CyclotomicElt::operator*=(const Int& s) {
    residue_ *= s;
    return *this;
}

std::string CyclotomicElt::str() const { return residue_.str(); }

CyclotomicElt cyc_eval(const LaurentPoly& p, long c) {
    if (c < 2) throw std::invalid_argument("cyc_eval: c must be >= 2");
    return CyclotomicElt(c, p);
}

CyclotomicElt embed_root_power(const CyclotomicElt& x, long target_modulus) {
    if (target_modulus % x.modulus() != 0)
        throw std::invalid_argument("embed_root_power: target modulus not a multiple");
    const long step = target_modulus / x.modulus();
    return CyclotomicElt(target_modulus, x.residue().substitute_power(step));
}

} // namespace qrank
