#include "qrank/durfee.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrank/errors.hpp"

namespace qrank {

long MarkedDurfeeSymbol::weight() const {
    long w = side * side;
    for (const auto& [size, sub] : top) w += size;
    for (const auto& [size, sub] : bottom) w += size;
    return w;
}

// ---- rule predicates ----

bool rule_part_ranges(const MarkedDurfeeSymbol& s) {
    auto ok = [&](const std::vector<std::pair<long, long>>& row) {
        return std::all_of(row.begin(), row.end(), [&](const auto& p) {
            return p.first >= 1 && p.first <= s.side && p.second >= 1 && p.second <= s.marks;
        });
    };
    return ok(s.top) && ok(s.bottom);
}

bool rule_sizes_weakly_decreasing(const MarkedDurfeeSymbol& s) {
    auto ok = [](const std::vector<std::pair<long, long>>& row) {
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i - 1].first < row[i].first) return false;
        return true;
    };
    return ok(s.top) && ok(s.bottom);
}

bool rule_subscripts_weakly_decreasing(const MarkedDurfeeSymbol& s) {
    auto ok = [](const std::vector<std::pair<long, long>>& row) {
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i - 1].second < row[i].second) return false;
        return true;
    };
    return ok(s.top) && ok(s.bottom);
}

bool rule_top_subscript_coverage(const MarkedDurfeeSymbol& s) {
    for (long e = 1; e < s.marks; ++e) {
        bool found = std::any_of(s.top.begin(), s.top.end(),
                                 [&](const auto& p) { return p.second == e; });
        if (!found) return false;
    }
    return true;
}

namespace {

// M_0 .. M_marks as in rule 5; requires coverage of 1..marks-1.
std::vector<long> top_maxima(const MarkedDurfeeSymbol& s) {
    std::vector<long> M(static_cast<std::size_t>(s.marks) + 1, 0);
    M[0] = 1;
    for (const auto& [size, sub] : s.top)
        M[static_cast<std::size_t>(sub)] = std::max(M[static_cast<std::size_t>(sub)], size);
    M[static_cast<std::size_t>(s.marks)] = s.side;
    return M;
}

} // namespace

bool rule_bottom_intervals(const MarkedDurfeeSymbol& s) {
    const auto M = top_maxima(s);
    for (const auto& [size, sub] : s.bottom)
        if (size < M[static_cast<std::size_t>(sub) - 1] || size > M[static_cast<std::size_t>(sub)])
            return false;
    return true;
}

bool is_valid_symbol(const MarkedDurfeeSymbol& s) {
    if (s.marks < 1 || s.side < 0) return false;
    if (s.side == 0 && !(s.top.empty() && s.bottom.empty())) return false;
    return rule_part_ranges(s) && rule_sizes_weakly_decreasing(s) &&
           rule_subscripts_weakly_decreasing(s) && rule_top_subscript_coverage(s) &&
           rule_bottom_intervals(s);
}

// ---- enumeration ----

namespace {

struct Enumerator {
    long marks;
    long n;
    const std::function<void(const MarkedDurfeeSymbol&)>& visit;

    // per-subscript size blocks, weakly decreasing within each block
    std::vector<std::vector<long>> top_blocks;
    std::vector<std::vector<long>> bottom_blocks;
    MarkedDurfeeSymbol scratch;

    void run() {
        top_blocks.assign(static_cast<std::size_t>(marks), {});
        bottom_blocks.assign(static_cast<std::size_t>(marks), {});
        if (n == 0) {
            // Side-0 symbol: both rows empty.  It exists only for one
            // mark, where the coverage rule is vacuous.
            if (marks == 1) emit(0);
            return;
        }
        for (long side = 1; side * side <= n; ++side)
            choose_top(side, marks, side, n - side * side);
    }

    std::vector<long>& block_of(std::vector<std::vector<long>>& blocks, long e) {
        return blocks[static_cast<std::size_t>(e) - 1];
    }

    // Pick the whole top block for subscript e (blocks are chosen from
    // subscript marks down to 1, which is left to right in the row); cap
    // keeps the flattened size sequence weakly decreasing.  wleft is the
    // weight still available for the remaining top blocks plus the
    // bottom row.
    void choose_top(long side, long e, long cap, long wleft) {
        if (e == 0) {
            bottoms(side, wleft);
            return;
        }
        if (e == marks) choose_top(side, e - 1, cap, wleft); // only subscript k may be absent
        grow_top(side, e, cap, wleft);
    }

    // Append one more part to the block for subscript e, then either
    // close the block (descend to subscript e-1 with the tightened cap)
    // or keep extending.  Subscripts e-1 .. 1 each still need one part,
    // hence the reserve.
    void grow_top(long side, long e, long cap, long wleft) {
        const long reserve = e - 1;
        auto& block = block_of(top_blocks, e);
        for (long part = std::min(cap, wleft - reserve); part >= 1; --part) {
            block.push_back(part);
            choose_top(side, e - 1, part, wleft - part);
            grow_top(side, e, part, wleft - part);
            block.pop_back();
        }
    }

    void bottoms(long side, long wleft) {
        std::vector<long> M(static_cast<std::size_t>(marks) + 1, 1);
        for (long e = 1; e < marks; ++e)
            M[static_cast<std::size_t>(e)] = block_of(top_blocks, e).front();
        M[static_cast<std::size_t>(marks)] = side;
        choose_bottom(side, M, 1, wleft);
    }

    // Bottom blocks from subscript 1 up to marks; part sizes confined to
    // [M_{e-1}, M_e].  The remaining weight must be consumed exactly.
    void choose_bottom(long side, const std::vector<long>& M, long e, long wleft) {
        if (e > marks) {
            if (wleft == 0) emit(side);
            return;
        }
        choose_bottom(side, M, e + 1, wleft); // empty block
        grow_bottom(side, M, e, M[static_cast<std::size_t>(e)], wleft);
    }

    void grow_bottom(long side, const std::vector<long>& M, long e, long cap, long wleft) {
        const long lo = M[static_cast<std::size_t>(e) - 1];
        auto& block = block_of(bottom_blocks, e);
        for (long part = std::min(cap, wleft); part >= lo; --part) {
            block.push_back(part);
            choose_bottom(side, M, e + 1, wleft - part);
            grow_bottom(side, M, e, part, wleft - part);
            block.pop_back();
        }
    }

    void emit(long side) {
        scratch.marks = marks;
        scratch.side = side;
        scratch.top.clear();
        scratch.bottom.clear();
        for (long e = marks; e >= 1; --e) {
            for (long size : block_of(top_blocks, e)) scratch.top.emplace_back(size, e);
            for (long size : block_of(bottom_blocks, e)) scratch.bottom.emplace_back(size, e);
        }
        visit(scratch);
    }
};

} // namespace

void for_each_symbol(long k, long n, const std::function<void(const MarkedDurfeeSymbol&)>& visit,
                     EnumerationLimits limits) {
    if (k < 1) throw std::invalid_argument("for_each_symbol: marks must be >= 1");
    if (n < 0) throw std::invalid_argument("for_each_symbol: n must be >= 0");
    if (n > 40 && k >= 3 && !limits.force)
        throw EnumerationCapExceeded(
            "for_each_symbol: n > 40 with k >= 3 needs an explicit override");
    Enumerator en{k, n, visit, {}, {}, {}};
    en.run();
}

std::vector<MarkedDurfeeSymbol> enumerate_symbols(long k, long n, EnumerationLimits limits) {
    std::vector<MarkedDurfeeSymbol> out;
    for_each_symbol(k, n, [&](const MarkedDurfeeSymbol& s) { out.push_back(s); }, limits);
    return out;
}

std::vector<long> ith_ranks(const MarkedDurfeeSymbol& s) {
    std::vector<long> tau(static_cast<std::size_t>(s.marks), 0);
    std::vector<long> beta(static_cast<std::size_t>(s.marks), 0);
    for (const auto& [size, sub] : s.top) ++tau[static_cast<std::size_t>(sub) - 1];
    for (const auto& [size, sub] : s.bottom) ++beta[static_cast<std::size_t>(sub) - 1];
    std::vector<long> rho(static_cast<std::size_t>(s.marks));
    for (long i = 1; i <= s.marks; ++i)
        rho[static_cast<std::size_t>(i) - 1] = tau[static_cast<std::size_t>(i) - 1] -
                                               beta[static_cast<std::size_t>(i) - 1] -
                                               (i < s.marks ? 1 : 0);
    return rho;
}

long full_rank(const MarkedDurfeeSymbol& s) {
    // sum_i i (tau_i - beta_i) minus the corrections sum_{i<k} i
    long total = -s.marks * (s.marks - 1) / 2;
    for (const auto& [size, sub] : s.top) total += sub;
    for (const auto& [size, sub] : s.bottom) total -= sub;
    return total;
}

Int d_count(long k, long n, DurfeeBackend backend, const RankTable* table,
            EnumerationLimits limits) {
    auto by_enum = [&] {
        Int count = 0;
        for_each_symbol(k, n, [&](const MarkedDurfeeSymbol&) { ++count; }, limits);
        return count;
    };
    auto by_moments = [&] {
        if (k == 1) return partition_count(n);
        if (table && table->nmax() >= n) return eta_moment(2 * k - 2, n, *table);
        const RankTable local = rank_table(n, RankBackend::Enumerate);
        return eta_moment(2 * k - 2, n, local);
    };
    switch (backend) {
        case DurfeeBackend::Enumerate:
            return by_enum();
        case DurfeeBackend::Moments:
            return by_moments();
        case DurfeeBackend::Both: {
            Int a = by_enum();
            Int b = by_moments();
            if (a != b)
                throw BackendMismatch("d_count: enumeration " + a.get_str() +
                                          " != moments " + b.get_str() + " at k=" +
                                          std::to_string(k) + ", n=" + std::to_string(n),
                                      k, n);
            return a;
        }
    }
    throw std::logic_error("d_count: bad backend");
}

std::map<long, Int> nf_counts(long l, long n, EnumerationLimits limits) {
    std::map<long, Int> hist;
    for_each_symbol(l, n, [&](const MarkedDurfeeSymbol& s) { hist[full_rank(s)] += 1; }, limits);
    return hist;
}

Int nf_class(long l, long b, long c, long n, EnumerationLimits limits) {
    if (c < 1 || b < 0 || b >= c) throw std::invalid_argument("nf_class: need 0 <= b < c");
    Int total = 0;
    for_each_symbol(l, n,
                    [&](const MarkedDurfeeSymbol& s) {
                        long r = full_rank(s) % c;
                        if (r < 0) r += c;
                        if (r == b) total += 1;
                    },
                    limits);
    return total;
}

std::map<std::vector<long>, Int> vector_rank_counts(long k, long n, EnumerationLimits limits) {
    std::map<std::vector<long>, Int> hist;
    for_each_symbol(k, n, [&](const MarkedDurfeeSymbol& s) { hist[ith_ranks(s)] += 1; }, limits);
    return hist;
}

} // namespace qrank
