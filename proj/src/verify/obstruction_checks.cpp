#include <cstdio>

#include "check_helpers.hpp"
#include "fishcheck/formulas.hpp"
#include "fishcheck/spectral.hpp"
#include "fishcheck/sturm.hpp"
#include "fishcheck/verify.hpp"

namespace fishcheck {

namespace {

constexpr int kMaxBisections = 200;

std::string interval_string(const RootInterval& iv) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.15g, %.15g]", iv.lo.to_double(), iv.hi.to_double());
    return buf;
}

}  // namespace

std::vector<CheckResult> verify_obstruction_flip(int m_lo, int m_hi) {
    if (m_lo < 10 || m_lo % 2 != 0 || m_hi % 2 != 0 || m_hi < m_lo)
        throw std::invalid_argument("verify_obstruction_flip: need even 10 <= m_lo <= m_hi");
    const BiPoly q_t = formulas::q_t();
    std::vector<CheckResult> out;
    for (int m = m_lo; m <= m_hi; m += 2) {
        CheckResult r;
        r.id = "obstruction.t.m" + std::to_string(m);
        r.m_lo = r.m_hi = m;
        const bool want_above = m <= 16;

        const UniPoly qt = q_t.at_m(Rational(m));
        const UniPoly pm = extremal_quartic(m);
        const SturmSequence sq(qt), sp(pm);
        // coarse isolation, then bisect whichever interval is wider
        RootInterval a = sturm_largest_root(qt, Rational(1, 16));
        RootInterval b = sturm_largest_root(pm, Rational(1, 16));
        int steps = 0;
        while (!a.disjoint_from(b) && steps < kMaxBisections) {
            if (a.width() >= b.width() && !a.is_exact()) a = bisect_once(sq, a);
            else if (!b.is_exact()) b = bisect_once(sp, b);
            else break;  // both exact and equal
            ++steps;
        }
        const std::string ivs =
            "rho(T_m) in " + interval_string(a) + ", rho'(m) in " + interval_string(b);
        if (!a.disjoint_from(b)) {
            r.status = CheckStatus::Inconclusive;
            r.detail = "intervals still overlap after " + std::to_string(steps) + " bisections: " + ivs;
            out.push_back(r);
            continue;
        }
        const bool above = a.lo > b.hi;
        r.detail = std::string(above ? "above" : "below") + " (" + std::to_string(steps) + " bisections): " + ivs;
        if (above != want_above) {
            r.status = CheckStatus::Fail;
            r.counterexample_m = m;
            r.offending = ivs;
            r.detail += std::string(", expected ") + (want_above ? "above" : "below");
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace fishcheck
