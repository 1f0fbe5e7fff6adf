#include "qrank/ranktable.hpp"

#include <stdexcept>

#include "qrank/errors.hpp"

namespace qrank {

Int RankTable::count(long m, long n) const {
    const auto& r = row(n);
    auto it = r.find(m);
    return it == r.end() ? Int(0) : it->second;
}

const std::map<long, Int>& RankTable::row(long n) const {
    if (n < 0 || n > nmax()) throw std::out_of_range("RankTable: n out of range");
    return rows_[static_cast<std::size_t>(n)];
}

void RankTable::add(long m, long n, const Int& v) {
    auto& r = rows_.at(static_cast<std::size_t>(n));
    auto [it, inserted] = r.emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) r.erase(it);
    }
}

QSeries<LaurentPoly> r1_series(long order) {
    QSeries<LaurentPoly> total(order, LaurentPoly{});
    for (long j = 0; j * j <= order; ++j) {
        // q^{j^2} / ((zq;q)_j (q/z;q)_j)
        QSeries<LaurentPoly> den =
            qs_pochhammer(order, LaurentPoly::z(), 1, j) *
            qs_pochhammer(order, LaurentPoly::monomial(1, -1), 1, j);
        total = total + qs_invert(den).shifted_q(j * j);
    }
    return total;
}

namespace {

RankTable table_by_enumeration(long nmax) {
    RankTable t(nmax);
    for (long n = 0; n <= nmax; ++n)
        for_each_partition(n, [&](const Partition& p) { t.add(dyson_rank(p), n, 1); });
    return t;
}

RankTable table_from_genfun(long nmax) {
    RankTable t(nmax);
    const auto series = r1_series(nmax);
    for (long n = 0; n <= nmax; ++n)
        for (const auto& [m, c] : series.coeff(n).terms()) t.add(m, n, c);
    return t;
}

} // namespace

RankTable rank_table(long nmax, RankBackend backend) {
    if (nmax < 0) throw std::invalid_argument("rank_table: nmax must be >= 0");
    switch (backend) {
        case RankBackend::Enumerate:
            return table_by_enumeration(nmax);
        case RankBackend::GenFun:
            return table_from_genfun(nmax);
        case RankBackend::Both: {
            RankTable a = table_by_enumeration(nmax);
            RankTable b = table_from_genfun(nmax);
            if (a != b) {
                for (long n = 0; n <= nmax; ++n)
                    for (long m = -n; m <= n; ++m)
                        if (a.count(m, n) != b.count(m, n))
                            throw BackendMismatch(
                                "rank_table: backends disagree at m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n),
                                m, n);
            }
            return a;
        }
    }
    throw std::logic_error("rank_table: bad backend");
}

Int rank_class_count(long b, long c, long n, const RankTable& table) {
    if (c < 1) throw std::invalid_argument("rank_class_count: c must be >= 1");
    Int total = 0;
    for (const auto& [m, v] : table.row(n)) {
        long r = m % c;
        if (r < 0) r += c;
        if (r == ((b % c) + c) % c) total += v;
    }
    return total;
}

std::vector<Int> atkin_r(long a, long b, long c, long d, long len, const RankTable& table) {
    if (len > 0 && c * (len - 1) + d > table.nmax())
        throw std::out_of_range("atkin_r: rank table too small for requested length");
    std::vector<Int> seq;
    seq.reserve(static_cast<std::size_t>(len));
    for (long t = 0; t < len; ++t)
        seq.push_back(rank_class_count(a, c, c * t + d, table) -
                      rank_class_count(b, c, c * t + d, table));
    return seq;
}

Int eta_moment(long k, long n, const RankTable& table) {
    if (k < 1) throw std::invalid_argument("eta_moment: k must be >= 1");
    Int total = 0;
    for (const auto& [m, v] : table.row(n))
        total += binomial_poly(Int(m) + (k - 1) / 2, k) * v;
    return total;
}

} // namespace qrank
