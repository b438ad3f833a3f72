#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fishcheck/families.hpp"
#include "fishcheck/graph_io.hpp"
#include "fishcheck/partition.hpp"
#include "fishcheck/search.hpp"
#include "fishcheck/spectral.hpp"
#include "fishcheck/sturm.hpp"
#include "fishcheck/verify.hpp"

#ifndef FISHCHECK_VERSION
#define FISHCHECK_VERSION "0.0.0"
#endif

namespace fishcheck::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    auto line = [&f](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) f << (i ? "," : "") << csv_field(cells[i]);
        f << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void write_report(const std::string& path, const std::string& command, const json& flags, const json& results,
                  Clock::time_point start) {
    if (path.empty()) return;
    json doc;
    doc["schema-version"] = kSchemaVersion;
    doc["tool-version"] = FISHCHECK_VERSION;
    doc["command"] = command;
    doc["flags"] = flags;
    doc["results"] = results;
    doc["timing"] = {{"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << doc.dump(2) << '\n';
}

void require_even(int m, int min) {
    if (m % 2 != 0) throw UsageError("m must be even, got " + std::to_string(m));
    if (m < min) throw UsageError("m must be at least " + std::to_string(min) + ", got " + std::to_string(m));
}

// ---- rho-prime ------------------------------------------------------------

struct RhoPrimeArgs {
    int m = 0;
    std::string out, csv;
};

int cmd_rho_prime(const RhoPrimeArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    require_even(a.m, 6);
    const RhoPrime r = rho_prime(a.m);
    out << "rho'(" << a.m << ") = " << fixed12(r.value) << '\n';
    out << "isolating interval [" << r.interval.lo << ", " << r.interval.hi << "]\n";
    json res = {{"m", a.m},
                {"rho-prime", r.value},
                {"interval", {r.interval.lo.to_string(), r.interval.hi.to_string()}}};
    write_report(a.out, "rho-prime", {{"m", a.m}, {"out", a.out}, {"csv", a.csv}}, json::array({res}), start);
    if (!a.csv.empty())
        write_csv(a.csv, {"m", "rho-prime", "lo", "hi"},
                  {{std::to_string(a.m), fixed12(r.value), r.interval.lo.to_string(), r.interval.hi.to_string()}});
    return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    int m_max = 500;
    std::string out, csv;
    bool verbose = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    Suite suite;
    try {
        suite = parse_suite(a.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (a.m_max < 24) throw UsageError("--m-max must be at least 24");
    const auto results = run_suite(suite, a.m_max);
    int pass = 0, fail = 0, inconclusive = 0;
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results) {
        switch (r.status) {
            case CheckStatus::Pass: ++pass; break;
            case CheckStatus::Fail: ++fail; break;
            case CheckStatus::Inconclusive: ++inconclusive; break;
        }
        if (a.verbose || r.status != CheckStatus::Pass) {
            out << status_name(r.status) << "  " << r.id;
            if (!r.label.empty()) out << " [" << r.label << "]";
            out << ": " << r.detail;
            if (!r.offending.empty()) out << " | " << r.offending;
            out << '\n';
        } else if (!r.label.empty()) {
            out << status_name(r.status) << "  " << r.id << " [" << r.label << "]: " << r.detail << '\n';
        }
        arr.push_back(r.to_json());
        rows.push_back({r.id, status_name(r.status), std::to_string(r.m_lo), std::to_string(r.m_hi), r.label,
                        r.counterexample_m ? std::to_string(*r.counterexample_m) : "", r.detail, r.offending});
    }
    out << "suite " << suite_name(suite) << ", m-max " << a.m_max << ": " << pass << " pass, " << fail << " fail, "
        << inconclusive << " inconclusive\n";
    write_report(a.out, "verify", {{"suite", a.suite}, {"m-max", a.m_max}, {"out", a.out}, {"csv", a.csv}}, arr,
                 start);
    if (!a.csv.empty())
        write_csv(a.csv, {"check-id", "status", "m-lo", "m-hi", "label", "counterexample-m", "detail", "offending"},
                  rows);
    if (fail) return kVerificationFailure;
    if (inconclusive) return kNumericFailure;
    return kOk;
}

// ---- search ---------------------------------------------------------------

struct SearchArgs {
    std::vector<int> ms{18, 20, 22};
    std::string out, csv;
    bool dump = false;
    std::string dump_dir = ".";
    unsigned jobs = 1;
    double margin = 1e-6;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    for (int m : a.ms) require_even(m, 6);
    if (a.jobs == 0) throw UsageError("--jobs must be positive");
    if (!(a.margin > 0.0)) throw UsageError("--margin must be positive");
    SearchOptions opts;
    opts.jobs = a.jobs;
    opts.margin = a.margin;
    opts.keep_survivors = a.dump;
    const SearchReport rep = run_search(a.ms, opts);
    out << rep.table();

    int code = kOk;
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rep.rows) {
        if (r.has_best && r.verdict != Verdict::Below) {
            out << "m = " << r.m << ": residual maximum " << fixed12(r.best_rho) << " is " << verdict_name(r.verdict)
                << " rho'(m)\n";
            code = kVerificationFailure;
        }
        for (const auto& f : r.failures) out << "m = " << r.m << ": perron failure " << f << '\n';
        if (!r.failures.empty() && code == kOk) code = kNumericFailure;
        if (a.dump) {
            const auto path = std::filesystem::path(a.dump_dir) / ("survivors_m" + std::to_string(r.m) + ".g6");
            std::ofstream f(path);
            if (!f) throw UsageError("cannot write " + path.string());
            for (const auto& s : r.survivors) f << s.graph6 << '\n';
            out << "wrote " << r.survivors.size() << " graphs to " << path.string() << '\n';
        }
        rows.push_back({std::to_string(r.m), fixed12(r.rho_prime.value), r.has_best ? fixed12(r.best_rho) : "",
                        r.has_best ? fixed12(r.gap) : "", std::to_string(r.emitted), std::to_string(r.h43_free),
                        std::to_string(r.unique_h43_free), r.has_best ? verdict_name(r.verdict) : "",
                        r.best_graph6});
    }
    write_report(a.out, "search",
                 {{"m", a.ms}, {"out", a.out}, {"csv", a.csv}, {"dump-graphs", a.dump}, {"dump-dir", a.dump_dir},
                  {"jobs", a.jobs}, {"margin", a.margin}},
                 rep.to_json(), start);
    if (!a.csv.empty())
        write_csv(a.csv, {"m", "rho-prime", "best-rho", "gap", "emitted", "h43-free", "unique-h43-free", "verdict",
                          "best-graph6"},
                  rows);
    return code;
}

// ---- family ---------------------------------------------------------------

struct FamilyArgs {
    std::string name;
    int m = 0;
    std::string out, csv;
    double margin = 1e-6;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    Family f;
    try {
        f = parse_family(a.name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    require_even(a.m, family_min_m(f));
    const Graph g = build_family(f, a.m);
    const QuotientMatrix q = quotient(g, family_partition(f, a.m));
    const UniPoly cp = char_poly(q);
    const RhoComparison cmp = compare_rho(g, a.m, a.margin);

    out << "family " << family_name(f) << ", m = " << a.m << '\n';
    out << "vertices " << g.order() << ", edges " << g.edge_count() << '\n';
    out << "quotient matrix\n";
    json qj = json::array();
    for (const auto& row : q) {
        out << " ";
        json rj = json::array();
        for (const auto& e : row) {
            out << ' ' << e;
            rj.push_back(e.to_string());
        }
        out << '\n';
        qj.push_back(rj);
    }
    out << "char poly " << cp.to_string("x") << '\n';
    out << "rho       " << fixed12(cmp.rho) << '\n';
    out << "rho'(m)   " << fixed12(cmp.rho_prime) << '\n';
    out << "verdict   " << verdict_name(cmp.verdict) << '\n';

    json res = {{"family", family_name(f)},
                {"m", a.m},
                {"vertices", g.order()},
                {"edges", g.edge_count()},
                {"graph6", to_graph6(g)},
                {"quotient", qj},
                {"char-poly", cp.to_string("x")},
                {"rho", cmp.rho},
                {"rho-prime", cmp.rho_prime},
                {"verdict", verdict_name(cmp.verdict)}};
    write_report(a.out, "family", {{"name", a.name}, {"m", a.m}, {"margin", a.margin}, {"out", a.out}, {"csv", a.csv}},
                 json::array({res}), start);
    if (!a.csv.empty())
        write_csv(a.csv, {"family", "m", "vertices", "edges", "rho", "rho-prime", "verdict"},
                  {{family_name(f), std::to_string(a.m), std::to_string(g.order()), std::to_string(g.edge_count()),
                    fixed12(cmp.rho), fixed12(cmp.rho_prime), verdict_name(cmp.verdict)}});
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric checks for the spectral extremal problem for the fish graph H(4,3)"};
    app.name(args.empty() ? "fishcheck" : args.front());
    app.require_subcommand(1);
    app.set_version_flag("--version", FISHCHECK_VERSION);

    RhoPrimeArgs rp;
    auto* c_rp = app.add_subcommand("rho-prime", "largest root of p_m and its isolating interval");
    c_rp->add_option("--m", rp.m, "even m >= 6")->required();
    c_rp->add_option("--out", rp.out, "JSON report path");
    c_rp->add_option("--csv", rp.csv, "CSV report path");

    VerifyArgs va;
    auto* c_v = app.add_subcommand("verify", "run the exact verification suites");
    c_v->add_option("--suite", va.suite, "charpoly|decomp|appendix|thresholds|obstruction|all")
        ->capture_default_str();
    c_v->add_option("--m-max", va.m_max, "largest even m for the per-m sweeps")->capture_default_str();
    c_v->add_option("--out", va.out, "JSON report path");
    c_v->add_option("--csv", va.csv, "CSV report path");
    c_v->add_flag("--verbose", va.verbose, "print passing checks too");

    SearchArgs sa;
    auto* c_s = app.add_subcommand("search", "enumerate residual configurations and rank by spectral radius");
    c_s->add_option("--m", sa.ms, "comma separated even m values")->delimiter(',')->capture_default_str();
    c_s->add_option("--out", sa.out, "JSON report path");
    c_s->add_option("--csv", sa.csv, "CSV report path");
    c_s->add_flag("--dump-graphs", sa.dump, "write graph6 files of the H(4,3)-free survivors");
    c_s->add_option("--dump-dir", sa.dump_dir, "directory for --dump-graphs")->capture_default_str();
    c_s->add_option("--jobs", sa.jobs, "worker threads")->capture_default_str();
    c_s->add_option("--margin", sa.margin, "margin for the comparison with rho'(m)")->capture_default_str();

    FamilyArgs fa;
    auto* c_f = app.add_subcommand("family", "build a named family and compare it with rho'(m)");
    c_f->add_option("--name", fa.name, "s-minus|t|same|dist|mixed")->required();
    c_f->add_option("--m", fa.m, "even m")->required();
    c_f->add_option("--margin", fa.margin, "margin for the verdict")->capture_default_str();
    c_f->add_option("--out", fa.out, "JSON report path");
    c_f->add_option("--csv", fa.csv, "CSV report path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (c_rp->parsed()) return cmd_rho_prime(rp, out);
        if (c_v->parsed()) return cmd_verify(va, out);
        if (c_s->parsed()) return cmd_search(sa, out);
        if (c_f->parsed()) return cmd_family(fa, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const PerronFailure& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const NoRealRoot& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace fishcheck::cli
