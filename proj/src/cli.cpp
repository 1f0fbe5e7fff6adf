#include "qrank/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrank/errors.hpp"
#include "qrank/verify.hpp"

namespace qrank {

namespace {

using nlohmann::json;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_table(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            os << (i ? "," : "") << t.header[i];
        os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << "\n";
        }
    } else if (format == "json") {
        json rows = json::array();
        for (const auto& row : t.rows) {
            json obj;
            for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        os << rows.dump(2) << "\n";
    } else { // text
        std::vector<std::size_t> width(t.header.size());
        for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
        for (const auto& row : t.rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        auto line = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "  " : "");
                os << std::string(width[i] - row[i].size(), ' ') << row[i];
            }
            os << "\n";
        };
        line(t.header);
        for (const auto& row : t.rows) line(row);
    }
}

std::string istr(const Int& v) { return v.get_str(); }

int emit(const Table& t, const CliConfig& cfg, std::ostream& out, std::ostream& err,
         const std::string& default_format) {
    const std::string format = cfg.format.empty() ? default_format : cfg.format;
    if (cfg.out.empty()) {
        write_table(t, format, out);
        return 0;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << cfg.out << "'\n";
        return 2;
    }
    write_table(t, format, file);
    return 0;
}

RankBackend parse_rank_backend(const std::string& s) {
    if (s == "enumerate") return RankBackend::Enumerate;
    if (s == "genfun") return RankBackend::GenFun;
    return RankBackend::Both;
}

int cmd_ranks(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const RankTable table = rank_table(cfg.nmax, parse_rank_backend(cfg.backend));
    Table t;
    t.header = {"m", "n", "count"};
    for (long n = 0; n <= cfg.nmax; ++n)
        for (long m = -n; m <= n; ++m)
            t.rows.push_back({std::to_string(m), std::to_string(n), istr(table.count(m, n))});
    return emit(t, cfg, out, err, "csv");
}

int cmd_moments(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const RankTable table = rank_table(cfg.nmax, RankBackend::Enumerate);
    Table t;
    t.header = {"k", "n", "value"};
    for (long n = 0; n <= cfg.nmax; ++n)
        t.rows.push_back({std::to_string(cfg.marks), std::to_string(n),
                          istr(eta_moment(cfg.marks, n, table))});
    return emit(t, cfg, out, err, "csv");
}

bool over_enumeration_cap(const CliConfig& cfg) {
    return cfg.nmax > 40 && cfg.marks >= 3 && !cfg.force;
}

int cmd_durfee_count(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    DurfeeBackend backend = DurfeeBackend::Both;
    if (cfg.backend == "enumerate") backend = DurfeeBackend::Enumerate;
    else if (cfg.backend == "moments") backend = DurfeeBackend::Moments;
    if (backend != DurfeeBackend::Moments && over_enumeration_cap(cfg)) {
        err << "error: enumeration backend refuses nmax > 40 with marks >= 3 "
               "(pass --force to override)\n";
        return 2;
    }
    const RankTable table = rank_table(cfg.nmax, RankBackend::Enumerate);
    Table t;
    t.header = {"k", "n", "count"};
    for (long n = 0; n <= cfg.nmax; ++n)
        t.rows.push_back({std::to_string(cfg.marks), std::to_string(n),
                          istr(d_count(cfg.marks, n, backend, &table, {cfg.force}))});
    return emit(t, cfg, out, err, "csv");
}

int cmd_fullrank(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    Workspace ws;
    if (cfg.modulus < 1) {
        err << "error: --modulus must be >= 1\n";
        return 2;
    }
    const bool enumerate = cfg.backend == "enumerate" || cfg.backend == "both";
    const bool genfun = cfg.backend == "genfun" || cfg.backend == "both";
    if (enumerate && over_enumeration_cap(cfg)) {
        err << "error: enumeration backend refuses nmax > 40 with marks >= 3 "
               "(pass --force to override)\n";
        return 2;
    }
    if (genfun) ws.rk(cfg.marks, cfg.nmax);
    Table t;
    t.header = {"n", "b", "count"};
    if (cfg.backend == "both") t.header.push_back("agree");
    bool all_agree = true;
    for (long n = 0; n <= cfg.nmax; ++n) {
        for (long b = 0; b < cfg.modulus; ++b) {
            Int ve, vg;
            if (enumerate) ve = nf_class(cfg.marks, b, cfg.modulus, n, {cfg.force});
            if (genfun) vg = ws.nf_class_genfun(cfg.marks, b, cfg.modulus, n);
            std::vector<std::string> row{std::to_string(n), std::to_string(b),
                                         istr(genfun ? vg : ve)};
            if (cfg.backend == "both") {
                const bool agree = ve == vg;
                all_agree = all_agree && agree;
                row.push_back(agree ? "1" : "0");
            }
            t.rows.push_back(std::move(row));
        }
    }
    const int rc = emit(t, cfg, out, err, "csv");
    if (rc != 0) return rc;
    if (!all_agree) {
        err << "error: backends disagree (see agree column)\n";
        return 1;
    }
    return 0;
}

int cmd_genfun_coeffs(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const RkSeries s = rk_coefficients(cfg.marks, cfg.nmax);
    Table t;
    t.header = {"n", "exp", "coeff"};
    for (long n = 0; n <= cfg.nmax; ++n) {
        if (s.coeff(n).is_zero()) {
            t.rows.push_back({std::to_string(n), "0", "0"});
            continue;
        }
        for (const auto& [e, c] : s.coeff(n).terms())
            t.rows.push_back({std::to_string(n), std::to_string(e), istr(c)});
    }
    return emit(t, cfg, out, err, "csv");
}

int cmd_roots_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const RkSeries s = rk_coefficients(cfg.marks, cfg.nmax);
    const auto values = substitute_root(s, cfg.modulus, cfg.divisor);
    Table t;
    t.header = {"n", "exp", "coeff"};
    for (long n = 0; n <= cfg.nmax; ++n) {
        const LaurentPoly& residue = values.coeff(n).residue();
        if (residue.is_zero()) {
            t.rows.push_back({std::to_string(n), "0", "0"});
            continue;
        }
        for (const auto& [e, c] : residue.terms())
            t.rows.push_back({std::to_string(n), std::to_string(e), istr(c)});
    }
    return emit(t, cfg, out, err, "csv");
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    Workspace ws{EnumerationLimits{cfg.force}};
    std::vector<CheckReport> reports;
    const std::string& target = cfg.verify_target;

    auto marks_or = [&](std::vector<long> defaults) {
        return cfg.marks > 0 ? std::vector<long>{cfg.marks} : defaults;
    };

    if (target == "all") {
        reports = run_all_checks(cfg.nmax, ws);
    } else if (target == "equidistribution") {
        for (long l : marks_or({2, 3, 4}))
            reports.push_back(check_equidistribution(l, 2 * l + 1, cfg.nmax, NfBackend::Both, ws));
    } else if (target == "integer-form") {
        for (long l : marks_or({2, 3, 4})) reports.push_back(check_integer_form(l, cfg.nmax, ws));
    } else if (target == "congruences") {
        reports.push_back(check_congruences(cfg.nmax, ws));
    } else if (target == "c9") {
        reports.push_back(check_c9(cfg.nmax, ws));
    } else if (target == "cyclotomic-lemmas") {
        reports.push_back(check_cyclotomic_lemmas(cfg.marks > 0 ? cfg.marks : 5));
    } else if (target == "evenness") {
        reports.push_back(check_evenness(cfg.nmax, ws));
    } else {
        err << "error: unknown check '" << target
            << "' (expected all, equidistribution, integer-form, congruences, c9, "
               "cyclotomic-lemmas, evenness)\n";
        return 2;
    }

    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    std::ostringstream body;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        body << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            body << (r.passed() ? "PASS" : "FAIL") << " " << r.check << " (";
            bool first = true;
            for (const auto& [k, v] : r.params) {
                body << (first ? "" : ", ") << k << "=" << v;
                first = false;
            }
            body << ") [" << r.millis << " ms]\n";
            for (const auto& w : r.witnesses)
                body << "  witness n=" << w.n << ": expected " << w.expected << ", got "
                     << w.actual << "\n";
        }
    }
    if (cfg.out.empty()) {
        out << body.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file '" << cfg.out << "'\n";
            return 2;
        }
        file << body.str();
    }
    for (const auto& r : reports)
        if (!r.passed()) return 1;
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Exact rank statistics of partitions and marked Durfee symbols"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_backend,
                          const std::vector<std::string>& backends = {}) {
        sub->add_option("--nmax", cfg.nmax, "largest n (default 30)");
        sub->add_option("--format", cfg.format, "output format: csv, json or text")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("--out", cfg.out, "write output to a file instead of stdout");
        sub->add_flag("--force", cfg.force, "lift the brute-force enumeration size cap");
        if (with_backend)
            sub->add_option("--backend", cfg.backend, "computation backend")
                ->check(CLI::IsMember(backends));
    };

    CLI::App* ranks = app.add_subcommand("ranks", "rank counts N(m,n)");
    add_common(ranks, true, {"enumerate", "genfun", "both"});

    CLI::App* moments = app.add_subcommand("moments", "symmetrized rank moments");
    add_common(moments, false);
    moments->add_option("--marks", cfg.marks, "moment order k")->required();

    CLI::App* dcount = app.add_subcommand("durfee-count", "k-marked Durfee symbol counts D_k(n)");
    add_common(dcount, true, {"enumerate", "moments", "both"});
    dcount->add_option("--marks", cfg.marks, "number of marks k")->required();

    CLI::App* fullrank = app.add_subcommand("fullrank", "full-rank class counts NF_l(b,c,n)");
    add_common(fullrank, true, {"enumerate", "genfun", "both"});
    fullrank->add_option("--marks", cfg.marks, "number of marks l")->required();
    fullrank->add_option("--modulus", cfg.modulus, "residue modulus c")->required();

    CLI::App* coeffs = app.add_subcommand("genfun-coeffs",
                                          "exact Laurent coefficients of the full-rank series");
    add_common(coeffs, false);
    coeffs->add_option("--marks", cfg.marks, "number of marks k")->required();

    CLI::App* roots = app.add_subcommand("roots-eval",
                                         "series evaluated at z = zeta_c^d in Z[zeta_c]");
    add_common(roots, false);
    roots->add_option("--marks", cfg.marks, "number of marks k")->required();
    roots->add_option("--modulus", cfg.modulus, "root order c")->required();
    roots->add_option("--divisor", cfg.divisor, "power d of the root (default 1)");

    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    add_common(verify, false);
    verify->add_option("name", cfg.verify_target, "check name or 'all'");
    verify->add_option("--marks", cfg.marks, "restrict to one value of l");

    std::vector<const char*> argv;
    argv.push_back("qrank");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ranks->parsed()) return cmd_ranks(cfg, out, err);
        if (moments->parsed()) return cmd_moments(cfg, out, err);
        if (dcount->parsed()) return cmd_durfee_count(cfg, out, err);
        if (fullrank->parsed()) return cmd_fullrank(cfg, out, err);
        if (coeffs->parsed()) return cmd_genfun_coeffs(cfg, out, err);
        if (roots->parsed()) return cmd_roots_eval(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
    } catch (const BackendMismatch& e) {
        err << "backend mismatch: " << e.what() << "\n";
        return 1;
    } catch (const EnumerationCapExceeded& e) {
        err << "error: " << e.what() << " (pass --force to override)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace qrank
