#ifndef QRANK_VERIFY_HPP
#define QRANK_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrank/durfee.hpp"
#include "qrank/genfun.hpp"
#include "qrank/ranktable.hpp"

namespace qrank {

/// One failed comparison inside a check: the position n it occurred at
/// and both sides rendered as strings.
struct Witness {
    long n = 0;
    std::string expected;
    std::string actual;
    bool operator==(const Witness&) const = default;
};

/// Outcome of one verification check.  Checks never abort on the first
/// failure; they sweep the whole requested range and report every
/// witness, so status is pass exactly when the witness list is empty.
struct CheckReport {
    std::string check;
    std::map<std::string, std::string> params;
    std::vector<Witness> witnesses;
    long long millis = 0;

    bool passed() const { return witnesses.empty(); }
    std::string status() const { return passed() ? "pass" : "fail"; }

    nlohmann::json to_json() const;
    static CheckReport from_json(const nlohmann::json& j);
};

/// Shared lazily-built tables so a suite of checks does not recompute
/// rank tables, brute-force symbol histograms, or generating-function
/// expansions.
class Workspace {
public:
    Workspace() = default;
    explicit Workspace(EnumerationLimits limits) : limits_(limits) {}

    /// Rank table built by enumeration (grown on demand).
    const RankTable& ranks(long nmax);
    /// Exact full-rank generating function coefficients for l marks.
    const RkSeries& rk(long l, long order);
    /// Brute-force full-rank histogram NF_l(., n).
    const std::map<long, Int>& nf_hist(long l, long n);

    /// NF_l(b, c, n) via brute force / via the generating function.
    Int nf_class_enumerated(long l, long b, long c, long n);
    Int nf_class_genfun(long l, long b, long c, long n);

private:
    EnumerationLimits limits_;
    std::optional<RankTable> ranks_;
    std::map<long, RkSeries> rk_;
    std::map<std::pair<long, long>, std::map<long, Int>> nf_;
    std::map<std::pair<long, long>, std::vector<CyclicResidue>> reduced_;
};

enum class NfBackend { Enumerate, GenFun, Both };

/// Pairs of residue classes with the same gcd with c must hold equal
/// counts; class_counts[b] = NF_l(b, c, n).  Returns one witness per
/// violating pair.  Exposed so the harness itself can be tested against
/// deliberately perturbed tables.
std::vector<Witness> equidistribution_witnesses(long c, long n, const std::vector<Int>& class_counts);

/// Theorem: NF_l(a, c, n) = NF_l(b, c, n) whenever gcd(a,c) = gcd(b,c),
/// c = 2l+1.  With backend Both the two NF routes are also cross-checked
/// against each other.
CheckReport check_equidistribution(long l, long c, long nmax, NfBackend backend, Workspace& ws);

/// sum_b NF_l(b,c,n) zeta_c^b = N(l-1,c,n) - N(l,c,n) in Z[zeta_c],
/// c = 2l+1; for prime c additionally NF_l(0,c,n) - NF_l(1,c,n) equals
/// the same difference.
CheckReport check_integer_form(long l, long nmax, Workspace& ws);

/// The mod-5 and mod-7 congruences: D_2(n) = 0 mod 5 on n = 1,4 (5) and
/// D_3(n) = 0 mod 7 on n = 0,1,5 (7); D_2(n) = N(1,5,n) - N(2,5,n)
/// mod 5 and D_3(n) = N(2,7,n) - N(3,7,n) mod 7 everywhere; and
/// D_4(3n) = 0 mod 3.
CheckReport check_congruences(long nmax, Workspace& ws);

/// The c = 9 chain: NF_4(0,9,n) - NF_4(3,9,n) = N(3,9,n) - N(4,9,n);
/// N(3,9,3n) = N(4,9,3n); the closed formula for
/// NF_4(0,9,n) - NF_4(1,9,n) (exact integrality and brute agreement);
/// and the resulting exact and mod-9 expressions for D_4(n).
CheckReport check_c9(long nmax, Workspace& ws);

/// Ring lemmas underpinning the main proof, for l = 2..lmax with
/// c = 2l+1: the inverse-denominator rewriting and its vanishing sum,
/// the epsilon dichotomy of the double sum, the exponent-multiset
/// identity, and prod_{i=1}^{c-1}(1 - zeta_c^i) = c for odd c up to 15.
CheckReport check_cyclotomic_lemmas(long lmax);

/// The three evenness summation identities of the rank counts.
CheckReport check_evenness(long nmax, Workspace& ws);

/// Every check at suite defaults; order is fixed.
std::vector<CheckReport> run_all_checks(long nmax, Workspace& ws);

} // namespace qrank

#endif
