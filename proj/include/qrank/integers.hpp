#ifndef QRANK_INTEGERS_HPP
#define QRANK_INTEGERS_HPP

#include <gmpxx.h>
#include <vector>

namespace qrank {

/// Arbitrary-precision integer used for every coefficient in the library.
using Int = mpz_class;

/// a / b checked exact; throws NotDivisible otherwise.
Int exact_div(const Int& a, const Int& b);

bool divides(const Int& b, const Int& a);

/// Binomial coefficient C(x, k) in the polynomial extension
/// x(x-1)...(x-k+1)/k!, valid for any integer x (including negative).
Int binomial_poly(const Int& x, long k);

/// Moebius function, n >= 1.
long mobius(long n);

/// Euler totient, n >= 1.
long totient(long n);

/// Divisors of n in increasing order, n >= 1.
std::vector<long> divisors(long n);

} // namespace qrank

#endif
