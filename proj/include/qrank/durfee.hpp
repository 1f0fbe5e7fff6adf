#ifndef QRANK_DURFEE_HPP
#define QRANK_DURFEE_HPP

#include <functional>
#include <map>
#include <vector>

#include "qrank/ranktable.hpp"

namespace qrank {

/// k-marked Durfee symbol: a Durfee square side plus two rows of
/// (size, subscript) parts.  Rows are stored left to right with both the
/// size sequence and the subscript sequence weakly decreasing.
///
/// Validity rules (each separately testable):
///   1. sizes lie in [1, side], subscripts in [1, marks];
///   2. sizes weakly decrease along each row;
///   3. subscripts weakly decrease along each row;
///   4. every subscript 1 .. marks-1 appears in the top row;
///   5. a bottom part of subscript e has size in [M_{e-1}, M_e], where
///      M_e is the largest top-row size of subscript e, M_0 = 1 and
///      M_marks = side.
/// The weight is side^2 plus the sum of all part sizes.
struct MarkedDurfeeSymbol {
    long marks = 1;
    long side = 0;
    std::vector<std::pair<long, long>> top;    // (size, subscript)
    std::vector<std::pair<long, long>> bottom;

    long weight() const;
    bool operator==(const MarkedDurfeeSymbol&) const = default;
};

bool rule_part_ranges(const MarkedDurfeeSymbol& s);
bool rule_sizes_weakly_decreasing(const MarkedDurfeeSymbol& s);
bool rule_subscripts_weakly_decreasing(const MarkedDurfeeSymbol& s);
bool rule_top_subscript_coverage(const MarkedDurfeeSymbol& s);
bool rule_bottom_intervals(const MarkedDurfeeSymbol& s);
bool is_valid_symbol(const MarkedDurfeeSymbol& s);

struct EnumerationLimits {
    bool force = false; // lift the n > 40, marks >= 3 refusal
};

/// Visit every k-marked Durfee symbol of n exactly once, in a fixed
/// deterministic order.  Throws EnumerationCapExceeded for n > 40 with
/// k >= 3 unless forced (symbol counts explode; the generating-function
/// route covers larger n).
void for_each_symbol(long k, long n, const std::function<void(const MarkedDurfeeSymbol&)>& visit,
                     EnumerationLimits limits = {});

std::vector<MarkedDurfeeSymbol> enumerate_symbols(long k, long n, EnumerationLimits limits = {});

/// The vector (rho_1, ..., rho_k): rho_i = tau_i - beta_i - 1 for i < k
/// and tau_k - beta_k for i = k, with tau/beta the per-subscript part
/// counts of the top/bottom row.
std::vector<long> ith_ranks(const MarkedDurfeeSymbol& s);

/// rho_1 + 2 rho_2 + ... + k rho_k.
long full_rank(const MarkedDurfeeSymbol& s);

enum class DurfeeBackend { Enumerate, Moments, Both };

/// D_k(n), the number of k-marked Durfee symbols of n.  The moments
/// backend returns eta_{2k-2}(n) for k >= 2 and p(n) for k = 1; with
/// Both the two backends are cross-checked (BackendMismatch on
/// disagreement).  A rank table with nmax >= n may be supplied to avoid
/// rebuilding one.
Int d_count(long k, long n, DurfeeBackend backend = DurfeeBackend::Both,
            const RankTable* table = nullptr, EnumerationLimits limits = {});

/// Full-rank histogram: NF_l(m, n) for every attained m.
std::map<long, Int> nf_counts(long l, long n, EnumerationLimits limits = {});

/// NF_l(b, c, n): symbols with full rank congruent to b mod c.
Int nf_class(long l, long b, long c, long n, EnumerationLimits limits = {});

/// D_k(m_1, ..., m_k; n): counts by the whole i-th-rank vector.
std::map<std::vector<long>, Int> vector_rank_counts(long k, long n, EnumerationLimits limits = {});

} // namespace qrank

#endif
