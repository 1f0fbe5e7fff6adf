#ifndef QRANK_RANKTABLE_HPP
#define QRANK_RANKTABLE_HPP

#include <map>
#include <vector>

#include "qrank/partitions.hpp"
#include "qrank/qseries.hpp"

namespace qrank {

enum class RankBackend { Enumerate, GenFun, Both };

/// Exact table of the rank counts N(m,n) for 0 <= n <= nmax, |m| <= n.
class RankTable {
public:
    explicit RankTable(long nmax) : rows_(static_cast<std::size_t>(nmax) + 1) {}

    long nmax() const { return static_cast<long>(rows_.size()) - 1; }

    /// N(m,n); zero outside the stored triangle, throws on n out of range.
    Int count(long m, long n) const;

    const std::map<long, Int>& row(long n) const;

    void add(long m, long n, const Int& v);

    bool operator==(const RankTable&) const = default;

private:
    std::vector<std::map<long, Int>> rows_;
};

/// The rank generating function: coefficient of q^n is
/// sum_m N(m,n) z^m, built from the theta-like quotient series
/// sum_j q^{j^2} / ((zq;q)_j (q/z;q)_j).
QSeries<LaurentPoly> r1_series(long order);

/// Build the table by direct partition enumeration, by expansion of the
/// generating function, or by both with a hard equality cross-check
/// (BackendMismatch carries the first differing (m,n)).
RankTable rank_table(long nmax, RankBackend backend = RankBackend::Both);

/// N(b,c,n): partitions of n with rank congruent to b mod c.
Int rank_class_count(long b, long c, long n, const RankTable& table);

/// Atkin's difference sequence: term t is N(a,c,ct+d) - N(b,c,ct+d),
/// for t = 0 .. len-1.
std::vector<Int> atkin_r(long a, long b, long c, long d, long len, const RankTable& table);

/// Symmetrized rank moment: sum_m C(m + floor((k-1)/2), k) N(m,n), with
/// the binomial in its polynomial extension.
Int eta_moment(long k, long n, const RankTable& table);

} // namespace qrank

#endif
