#ifndef QRANK_ERRORS_HPP
#define QRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrank {

/// No exact quotient exists (polynomial or integer division).
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series inversion requires the constant term to be a unit of the ring.
struct NonUnitConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary operation on elements of different coefficient rings.
struct RingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The per-coefficient exact division in the generating-function route
/// failed; the series coefficients are guaranteed polynomial, so this
/// signals an implementation bug, never bad input.
struct ExactDivisionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root-of-unity coefficient formula evaluated at arguments where the
/// totient quotient is not integral.
struct NonIntegerCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independent computation backends disagree.  Carries the first
/// witness position.
struct BackendMismatch : std::runtime_error {
    long m;
    long n;
    BackendMismatch(std::string what, long m_, long n_)
        : std::runtime_error(std::move(what)), m(m_), n(n_) {}
};

/// Brute-force symbol enumeration refused: n too large for the requested
/// number of marks without an explicit override.
struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qrank

#endif
