#include "qrank/partitions.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qrank {

long Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

namespace {

void descend(long remaining, long cap, Partition& scratch,
             const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(scratch);
        return;
    }
    for (long part = std::min(remaining, cap); part >= 1; --part) {
        scratch.parts.push_back(part);
        descend(remaining - part, part, scratch, visit);
        scratch.parts.pop_back();
    }
}

} // namespace

void for_each_partition(long n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
    Partition scratch;
    descend(n, n, scratch, visit);
}

std::vector<Partition> enumerate_partitions(long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

long dyson_rank(const Partition& p) {
    if (p.parts.empty()) return 0;
    return p.parts.front() - static_cast<long>(p.parts.size());
}

Int partition_count(long n) {
    if (n < 0) return 0;
    // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    static std::vector<Int> table{1};
    static std::mutex mu;
    std::lock_guard lock(mu);
    for (long m = static_cast<long>(table.size()); m <= n; ++m) {
        Int v = 0;
        for (long k = 1;; ++k) {
            const long g1 = m - k * (3 * k - 1) / 2;
            const long g2 = m - k * (3 * k + 1) / 2;
            if (g1 < 0 && g2 < 0) break;
            const Int add = (g1 >= 0 ? table[g1] : Int(0)) + (g2 >= 0 ? table[g2] : Int(0));
            if (k % 2 == 1)
                v += add;
            else
                v -= add;
        }
        table.push_back(v);
    }
    return table[n];
}

} // namespace qrank
