#include "qrank/integers.hpp"

#include "qrank/errors.hpp"

namespace qrank {

bool divides(const Int& b, const Int& a) {
    if (b == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || !divides(b, a))
        throw NotDivisible("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int binomial_poly(const Int& x, long k) {
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= x - i;
    Int fact = 1;
    for (long i = 2; i <= k; ++i) fact *= i;
    return exact_div(num, fact);
}

long mobius(long n) {
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

long totient(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace qrank
