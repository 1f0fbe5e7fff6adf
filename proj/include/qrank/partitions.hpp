#ifndef QRANK_PARTITIONS_HPP
#define QRANK_PARTITIONS_HPP

#include <functional>
#include <vector>

#include "qrank/integers.hpp"

namespace qrank {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<long> parts;

    long weight() const;
    bool empty() const { return parts.empty(); }
    bool operator==(const Partition&) const = default;
};

/// Visit every partition of n exactly once, in lexicographically
/// descending order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
void for_each_partition(long n, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(long n);

/// Dyson's rank: largest part minus number of parts.  The empty partition
/// of 0 has rank 0 by convention, so N(0,0) = 1.
long dyson_rank(const Partition& p);

/// p(n) via Euler's pentagonal-number recurrence; independent of the
/// enumeration path.
Int partition_count(long n);

} // namespace qrank

#endif
