#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "fishcheck/canonical.hpp"
#include "fishcheck/graph_io.hpp"
#include "fishcheck/h43.hpp"
#include "fishcheck/search.hpp"

namespace fishcheck {

namespace {

// Two Perron roots this close are treated as a tie and broken by canonical string.
constexpr double kTieWidth = 1e-12;

struct Evaluated {
    bool h43 = false;
    bool failed = false;
    double rho = 0.0;
    std::string canonical;
    std::string error;
};

Evaluated evaluate(const Graph& g, double tol) {
    Evaluated e;
    if (contains_h43(g)) {
        e.h43 = true;
        return e;
    }
    e.canonical = canonical_string(g);
    try {
        e.rho = perron_root(g, tol);
    } catch (const PerronFailure& ex) {
        e.failed = true;
        e.error = ex.what();
    }
    return e;
}

template <class F>
void parallel_for(size_t count, unsigned jobs, F&& body) {
    if (jobs <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

MReport search_one(int m, const SearchOptions& opts) {
    MReport r;
    r.m = m;
    r.rho_prime = rho_prime(m);
    const auto work = enumerate_residual(m);
    r.emitted = static_cast<long>(work.size());

    std::vector<Evaluated> results(work.size());
    parallel_for(work.size(), opts.jobs, [&](size_t i) { results[i] = evaluate(work[i].second, opts.tol); });

    // sequential reduction in enumeration order keeps the report independent of jobs
    std::map<std::string, Survivor> unique;
    size_t best = work.size();
    for (size_t i = 0; i < work.size(); ++i) {
        const Evaluated& e = results[i];
        if (e.h43) continue;
        ++r.h43_free;
        if (e.failed) {
            r.failures.push_back(to_graph6(work[i].second) + ": " + e.error);
            continue;
        }
        unique.try_emplace(e.canonical, Survivor{to_graph6(work[i].second), e.canonical, e.rho});
        if (best == work.size()) {
            best = i;
            continue;
        }
        const Evaluated& b = results[best];
        if (e.rho > b.rho + kTieWidth || (std::fabs(e.rho - b.rho) <= kTieWidth && e.canonical < b.canonical))
            best = i;
    }
    r.unique_h43_free = static_cast<long>(unique.size());
    if (opts.keep_survivors)
        for (auto& [key, s] : unique) r.survivors.push_back(std::move(s));
    if (best != work.size()) {
        r.has_best = true;
        r.best_rho = results[best].rho;
        r.best_canonical = results[best].canonical;
        r.best_graph6 = to_graph6(work[best].second);
        r.best_config = work[best].first;
        r.gap = r.rho_prime.value - r.best_rho;
        if (r.best_rho < r.rho_prime.value - opts.margin) r.verdict = Verdict::Below;
        else if (r.best_rho > r.rho_prime.value + opts.margin) r.verdict = Verdict::Above;
        else r.verdict = Verdict::EqualWithinMargin;
    }
    return r;
}

std::string fixed12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

}  // namespace

SearchReport run_search(const std::vector<int>& ms, const SearchOptions& opts) {
    for (int m : ms)
        if (m % 2 != 0 || m < 6) throw std::invalid_argument("run_search: m must be even and >= 6, got " + std::to_string(m));
    if (!(opts.margin > 0.0)) throw std::invalid_argument("run_search: margin must be positive");
    SearchReport rep;
    for (int m : ms) rep.rows.push_back(search_one(m, opts));
    return rep;
}

nlohmann::json MReport::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["rho-prime"] = rho_prime.value;
    j["rho-prime-interval"] = {rho_prime.interval.lo.to_string(), rho_prime.interval.hi.to_string()};
    j["emitted"] = emitted;
    j["h43-free"] = h43_free;
    j["unique-h43-free"] = unique_h43_free;
    if (has_best) {
        j["best-rho"] = best_rho;
        j["gap"] = gap;
        j["verdict"] = verdict_name(verdict);
        j["best-graph6"] = best_graph6;
        j["best-canonical"] = best_canonical;
        j["best-config"] = best_config.to_json();
    } else {
        j["best-rho"] = nullptr;
    }
    j["perron-failures"] = failures;
    if (!survivors.empty()) {
        auto& arr = j["survivors"] = nlohmann::json::array();
        for (const auto& s : survivors) arr.push_back({{"graph6", s.graph6}, {"rho", s.rho}});
    }
    return j;
}

nlohmann::json SearchReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(r.to_json());
    return arr;
}

std::string SearchReport::table() const {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%4s  %16s  %20s  %16s\n", "m", "rho'(m)", "best residual rho", "gap");
    os << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%4d  %16s  %20s  %16s\n", r.m, fixed12(r.rho_prime.value).c_str(),
                      r.has_best ? fixed12(r.best_rho).c_str() : "-", r.has_best ? fixed12(r.gap).c_str() : "-");
        os << line;
    }
    return os.str();
}

}  // namespace fishcheck
