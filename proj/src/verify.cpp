#include "qrank/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "qrank/errors.hpp"

namespace qrank {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string istr(const Int& v) { return v.get_str(); }

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long positive_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

// ---- CheckReport ----

nlohmann::json CheckReport::to_json() const {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& wit : witnesses)
        w.push_back({{"n", wit.n}, {"expected", wit.expected}, {"actual", wit.actual}});
    return nlohmann::json{{"check", check},
                          {"params", params},
                          {"status", status()},
                          {"witnesses", std::move(w)},
                          {"millis", millis}};
}

CheckReport CheckReport::from_json(const nlohmann::json& j) {
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    for (const auto& w : j.at("witnesses"))
        r.witnesses.push_back(Witness{w.at("n").get<long>(), w.at("expected").get<std::string>(),
                                      w.at("actual").get<std::string>()});
    r.millis = j.at("millis").get<long long>();
    if (j.at("status").get<std::string>() != r.status())
        throw std::invalid_argument("CheckReport: status inconsistent with witnesses");
    return r;
}

// ---- Workspace ----

const RankTable& Workspace::ranks(long nmax) {
    if (!ranks_ || ranks_->nmax() < nmax)
        ranks_ = rank_table(nmax, RankBackend::Enumerate);
    return *ranks_;
}

const RkSeries& Workspace::rk(long l, long order) {
    auto it = rk_.find(l);
    if (it == rk_.end() || it->second.order() < order) {
        const long build = it == rk_.end() ? order : std::max(order, it->second.order());
        it = rk_.insert_or_assign(l, rk_coefficients(l, build)).first;
        // any cached reductions of the old, shorter series are stale
        for (auto rit = reduced_.begin(); rit != reduced_.end();)
            rit = rit->first.first == l ? reduced_.erase(rit) : std::next(rit);
    }
    return it->second;
}

const std::map<long, Int>& Workspace::nf_hist(long l, long n) {
    auto key = std::make_pair(l, n);
    auto it = nf_.find(key);
    if (it == nf_.end()) it = nf_.emplace(key, nf_counts(l, n, limits_)).first;
    return it->second;
}

Int Workspace::nf_class_enumerated(long l, long b, long c, long n) {
    Int total = 0;
    for (const auto& [m, v] : nf_hist(l, n))
        if (positive_mod(m, c) == b) total += v;
    return total;
}

Int Workspace::nf_class_genfun(long l, long b, long c, long n) {
    auto key = std::make_pair(l, c);
    auto it = reduced_.find(key);
    if (it == reduced_.end() || static_cast<long>(it->second.size()) <= n) {
        const RkSeries& s = rk(l, n);
        it = reduced_.insert_or_assign(key, reduce_mod(s, c)).first;
    }
    return it->second[static_cast<std::size_t>(n)].residue().coeff(b);
}

// ---- checks ----

std::vector<Witness> equidistribution_witnesses(long c, long n,
                                                const std::vector<Int>& class_counts) {
    std::vector<Witness> out;
    // group classes by gcd with c; b = 0 has gcd c
    std::map<long, std::vector<long>> groups;
    for (long b = 0; b < c; ++b) groups[std::gcd(b, c)].push_back(b);
    for (const auto& [g, members] : groups) {
        const long lead = members.front();
        const Int& expected = class_counts[static_cast<std::size_t>(lead)];
        for (long b : members)
            if (class_counts[static_cast<std::size_t>(b)] != expected)
                out.push_back(Witness{
                    n, "NF(" + std::to_string(lead) + ") = " + istr(expected),
                    "NF(" + std::to_string(b) + ") = " +
                        istr(class_counts[static_cast<std::size_t>(b)])});
    }
    return out;
}

CheckReport check_equidistribution(long l, long c, long nmax, NfBackend backend, Workspace& ws) {
    Timer timer;
    CheckReport report;
    report.check = "equidistribution";
    report.params = {{"l", std::to_string(l)},
                     {"c", std::to_string(c)},
                     {"nmax", std::to_string(nmax)},
                     {"backend", backend == NfBackend::Enumerate ? "enumerate"
                                 : backend == NfBackend::GenFun  ? "genfun"
                                                                 : "both"}};
    if (backend != NfBackend::Enumerate) ws.rk(l, nmax);
    for (long n = 0; n <= nmax; ++n) {
        std::vector<Int> counts(static_cast<std::size_t>(c));
        for (long b = 0; b < c; ++b) {
            switch (backend) {
                case NfBackend::Enumerate:
                    counts[static_cast<std::size_t>(b)] = ws.nf_class_enumerated(l, b, c, n);
                    break;
                case NfBackend::GenFun:
                    counts[static_cast<std::size_t>(b)] = ws.nf_class_genfun(l, b, c, n);
                    break;
                case NfBackend::Both: {
                    Int e = ws.nf_class_enumerated(l, b, c, n);
                    Int g = ws.nf_class_genfun(l, b, c, n);
                    if (e != g)
                        report.witnesses.push_back(
                            Witness{n, "enumerated NF(" + std::to_string(b) + ") = " + istr(e),
                                    "genfun NF(" + std::to_string(b) + ") = " + istr(g)});
                    counts[static_cast<std::size_t>(b)] = g;
                    break;
                }
            }
        }
        auto w = equidistribution_witnesses(c, n, counts);
        report.witnesses.insert(report.witnesses.end(), w.begin(), w.end());
    }
    report.millis = timer.ms();
    return report;
}

CheckReport check_integer_form(long l, long nmax, Workspace& ws) {
    Timer timer;
    const long c = 2 * l + 1;
    CheckReport report;
    report.check = "integer-form";
    report.params = {{"l", std::to_string(l)}, {"c", std::to_string(c)},
                     {"nmax", std::to_string(nmax)}};
    ws.rk(l, nmax);
    const RankTable& table = ws.ranks(nmax);
    for (long n = 0; n <= nmax; ++n) {
        LaurentPoly combo;
        for (long b = 0; b < c; ++b)
            combo += LaurentPoly::monomial(ws.nf_class_genfun(l, b, c, n), b);
        const CyclotomicElt lhs = cyc_eval(combo, c);
        const Int rhs = rank_class_count(l - 1, c, n, table) - rank_class_count(l, c, n, table);
        if (lhs != CyclotomicElt::from_integer(c, rhs))
            report.witnesses.push_back(Witness{n, istr(rhs), lhs.str()});
        if (is_prime(c)) {
            const Int diff = ws.nf_class_genfun(l, 0, c, n) - ws.nf_class_genfun(l, 1, c, n);
            if (diff != rhs)
                report.witnesses.push_back(
                    Witness{n, "NF(0)-NF(1) = " + istr(rhs), "NF(0)-NF(1) = " + istr(diff)});
        }
    }
    report.millis = timer.ms();
    return report;
}

CheckReport check_congruences(long nmax, Workspace& ws) {
    Timer timer;
    CheckReport report;
    report.check = "congruences";
    report.params = {{"nmax", std::to_string(nmax)}};
    const RankTable& table = ws.ranks(nmax);
    for (long n = 0; n <= nmax; ++n) {
        const Int d2 = eta_moment(2, n, table);
        const Int d3 = eta_moment(4, n, table);
        if ((n % 5 == 1 || n % 5 == 4) && d2 % 5 != 0)
            report.witnesses.push_back(Witness{n, "D2(n) = 0 mod 5", "D2(n) = " + istr(d2)});
        if ((n % 7 == 0 || n % 7 == 1 || n % 7 == 5) && d3 % 7 != 0)
            report.witnesses.push_back(Witness{n, "D3(n) = 0 mod 7", "D3(n) = " + istr(d3)});
        const Int r5 = rank_class_count(1, 5, n, table) - rank_class_count(2, 5, n, table);
        if ((d2 - r5) % 5 != 0)
            report.witnesses.push_back(Witness{
                n, "D2(n) = N(1,5,n)-N(2,5,n) mod 5", istr(d2) + " vs " + istr(r5)});
        const Int r7 = rank_class_count(2, 7, n, table) - rank_class_count(3, 7, n, table);
        if ((d3 - r7) % 7 != 0)
            report.witnesses.push_back(Witness{
                n, "D3(n) = N(2,7,n)-N(3,7,n) mod 7", istr(d3) + " vs " + istr(r7)});
        if (n % 3 == 0) {
            const Int d4 = eta_moment(6, n, table);
            if (d4 % 3 != 0)
                report.witnesses.push_back(Witness{n, "D4(3m) = 0 mod 3", "D4 = " + istr(d4)});
        }
    }
    report.millis = timer.ms();
    return report;
}

CheckReport check_c9(long nmax, Workspace& ws) {
    Timer timer;
    CheckReport report;
    report.check = "c9";
    report.params = {{"nmax", std::to_string(nmax)}};
    ws.rk(4, nmax);
    const RankTable& table = ws.ranks(nmax);
    for (long n = 0; n <= nmax; ++n) {
        const Int nf0 = ws.nf_class_genfun(4, 0, 9, n);
        const Int nf1 = ws.nf_class_genfun(4, 1, 9, n);
        const Int nf3 = ws.nf_class_genfun(4, 3, 9, n);
        const Int diff34 = rank_class_count(3, 9, n, table) - rank_class_count(4, 9, n, table);

        if (nf0 - nf3 != diff34)
            report.witnesses.push_back(Witness{n, "NF4(0)-NF4(3) = " + istr(diff34),
                                               "NF4(0)-NF4(3) = " + istr(nf0 - nf3)});
        if (n % 3 == 0 && diff34 != 0)
            report.witnesses.push_back(
                Witness{n, "N(3,9,3m) = N(4,9,3m)", "difference " + istr(diff34)});

        // S = sum_{k>=1} k^2 N(3k,n) - k(k+1)/2 (N(3k+1,n)+N(3k+2,n))
        Int s = 0;
        for (long k = 1; 3 * k - 2 <= n; ++k)
            s += k * k * table.count(3 * k, n) -
                 (k * (k + 1) / 2) * (table.count(3 * k + 1, n) + table.count(3 * k + 2, n));

        // NF4(0)-NF4(1) = (2 (N(3,9,n)-N(4,9,n)) + S) / 3, exactly
        const Int numer = 2 * diff34 + s;
        if (numer % 3 != 0)
            report.witnesses.push_back(
                Witness{n, "2(N(3,9,n)-N(4,9,n)) + S divisible by 3", istr(numer)});
        else if (nf0 - nf1 != numer / 3)
            report.witnesses.push_back(Witness{n, "NF4(0)-NF4(1) = " + istr(numer / 3),
                                               "NF4(0)-NF4(1) = " + istr(nf0 - nf1)});

        // D4(n) = 9 NF4(0) - 6 (N(3,9,n)-N(4,9,n)) - 2S exactly, hence
        // D4(n) = 3 (N(3,9,n)-N(4,9,n)) - 2S  (mod 9)
        Int d4 = 0;
        for (long b = 0; b < 9; ++b) d4 += ws.nf_class_genfun(4, b, 9, n);
        const Int exact = 9 * nf0 - 6 * diff34 - 2 * s;
        if (d4 != exact)
            report.witnesses.push_back(
                Witness{n, "D4(n) = " + istr(exact), "D4(n) = " + istr(d4)});
        if ((d4 - (3 * diff34 - 2 * s)) % 9 != 0)
            report.witnesses.push_back(
                Witness{n, "D4(n) = 3(N(3,9,n)-N(4,9,n)) - 2S mod 9",
                        istr(d4) + " vs " + istr(3 * diff34 - 2 * s)});
    }
    report.millis = timer.ms();
    return report;
}

CheckReport check_cyclotomic_lemmas(long lmax) {
    Timer timer;
    CheckReport report;
    report.check = "cyclotomic-lemmas";
    report.params = {{"lmax", std::to_string(lmax)}};
    for (long l = 2; l <= lmax; ++l) {
        const long c = 2 * l + 1;
        const CyclotomicElt c_elt = CyclotomicElt::from_integer(c, c);
        const CyclotomicElt zero(c);

        // (a) denominator rewriting: den_i * zeta^{-i(l-1)}(1-zeta^{-i})(1-zeta^{-2i}) = c,
        //     and the sum of the rewritten inverses vanishes
        CyclotomicElt inverse_sum(c);
        for (long i = 1; i <= l; ++i) {
            LaurentPoly den = LaurentPoly::constant(1);
            for (long j = 1; j <= l; ++j) {
                if (j == i) continue;
                den *= LaurentPoly::monomial(1, i) - LaurentPoly::monomial(1, j);
                den *= LaurentPoly::one_minus_z(-(i + j));
            }
            const LaurentPoly winv = LaurentPoly::monomial(1, -i * (l - 1)) *
                                     LaurentPoly::one_minus_z(-i) * LaurentPoly::one_minus_z(-2 * i);
            if (cyc_eval(den * winv, c) != c_elt)
                report.witnesses.push_back(Witness{l, "den_i * rewritten inverse = c at i=" +
                                                          std::to_string(i),
                                                   cyc_eval(den * winv, c).str()});
            inverse_sum += cyc_eval(winv, c);
        }
        if (inverse_sum != zero)
            report.witnesses.push_back(
                Witness{l, "sum of inverse denominators = 0", inverse_sum.str()});

        // (b) epsilon dichotomy of the double sum
        for (long g = 1; g <= l - 1; ++g) {
            LaurentPoly sum;
            for (long i = 1; i <= l; ++i) {
                sum += LaurentPoly::monomial(1, -i * (l - g - 1));
                sum += LaurentPoly::monomial(1, i * (l - g + 2));
                sum += LaurentPoly::monomial(1, -i * (l - g + 2));
                sum += LaurentPoly::monomial(1, i * (l - g - 1));
                sum += LaurentPoly::monomial(-1, -i * (l - g));
                sum += LaurentPoly::monomial(-1, i * (l - g + 1));
                sum += LaurentPoly::monomial(-1, -i * (l - g + 1));
                sum += LaurentPoly::monomial(-1, i * (l - g));
            }
            const CyclotomicElt eps = cyc_eval(sum, c);
            const CyclotomicElt want = g == l - 1 ? c_elt : zero;
            if (eps != want)
                report.witnesses.push_back(Witness{l, "epsilon(g=" + std::to_string(g) + ") = " +
                                                          (g == l - 1 ? std::to_string(c) : "0"),
                                                   eps.str()});
        }

        // (c) exponent multiset {j-i, -i-j} mod c = {1..c-1} \ {-i, -2i}
        for (long i = 1; i <= l; ++i) {
            std::vector<long> exponents;
            for (long j = 1; j <= l; ++j) {
                if (j == i) continue;
                exponents.push_back(positive_mod(j - i, c));
                exponents.push_back(positive_mod(-i - j, c));
            }
            std::sort(exponents.begin(), exponents.end());
            std::vector<long> expected;
            for (long t = 1; t < c; ++t)
                if (t != positive_mod(-i, c) && t != positive_mod(-2 * i, c))
                    expected.push_back(t);
            if (exponents != expected) {
                auto render = [](const std::vector<long>& v) {
                    std::string s = "{";
                    for (std::size_t idx = 0; idx < v.size(); ++idx)
                        s += (idx ? "," : "") + std::to_string(v[idx]);
                    return s + "}";
                };
                report.witnesses.push_back(
                    Witness{l, "exponent multiset at i=" + std::to_string(i) + ": " +
                                   render(expected),
                            render(exponents)});
            }
        }
    }

    // (d) prod_{i=1}^{c-1} (1 - zeta_c^i) = c for odd c
    for (long c = 3; c <= 15; c += 2) {
        CyclotomicElt prod = CyclotomicElt::from_integer(c, 1);
        for (long i = 1; i < c; ++i) prod *= cyc_eval(LaurentPoly::one_minus_z(i), c);
        if (prod != CyclotomicElt::from_integer(c, c))
            report.witnesses.push_back(
                Witness{c, "prod (1 - zeta^i) = " + std::to_string(c), prod.str()});
    }
    report.millis = timer.ms();
    return report;
}

CheckReport check_evenness(long nmax, Workspace& ws) {
    Timer timer;
    CheckReport report;
    report.check = "evenness";
    report.params = {{"nmax", std::to_string(nmax)}};
    const RankTable& table = ws.ranks(nmax);
    for (long n = 0; n <= nmax; ++n) {
        Int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
        const long kmax = n / 3 + 2;
        for (long k = -kmax; k <= kmax; ++k) {
            s1 += k * table.count(3 * k, n);
            s2 += k * table.count(3 * k + 1, n) + (k + 1) * table.count(3 * k + 2, n);
            s3 += k * k * table.count(3 * k + 1, n);
            s4 += (k + 1) * (k + 1) * table.count(3 * k + 2, n);
        }
        if (s1 != 0)
            report.witnesses.push_back(Witness{n, "sum k N(3k,n) = 0", istr(s1)});
        if (s2 != 0)
            report.witnesses.push_back(
                Witness{n, "sum k N(3k+1,n) + (k+1) N(3k+2,n) = 0", istr(s2)});
        if (s3 != s4)
            report.witnesses.push_back(
                Witness{n, "sum k^2 N(3k+1,n) = sum (k+1)^2 N(3k+2,n)",
                        istr(s3) + " vs " + istr(s4)});
    }
    report.millis = timer.ms();
    return report;
}

std::vector<CheckReport> run_all_checks(long nmax, Workspace& ws) {
    std::vector<CheckReport> out;
    for (long l : {2, 3, 4})
        out.push_back(check_equidistribution(l, 2 * l + 1, nmax, NfBackend::Both, ws));
    for (long l : {2, 3, 4}) out.push_back(check_integer_form(l, nmax, ws));
    // larger prime moduli at reduced depth; the series route keeps these cheap
    out.push_back(check_integer_form(5, std::min(nmax, 12L), ws));
    out.push_back(check_integer_form(6, std::min(nmax, 10L), ws));
    out.push_back(check_integer_form(8, std::min(nmax, 8L), ws));
    out.push_back(check_integer_form(9, std::min(nmax, 6L), ws));
    out.push_back(check_congruences(nmax, ws));
    out.push_back(check_c9(nmax, ws));
    out.push_back(check_cyclotomic_lemmas(5));
    out.push_back(check_evenness(nmax, ws));
    return out;
}

} // namespace qrank
