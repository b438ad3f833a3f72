#include "check_helpers.hpp"

#include <cstdio>

namespace fishcheck::detail {

std::string approx_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string describe(const QuadNum& v) { return v.to_string() + " (~ " + approx_string(v.to_double()) + ")"; }

int first_nonzero_m(const BiPoly& diff, int from) {
    for (int m = from + (from % 2 != 0);; m += 2)
        if (!diff.at_m(Rational(m)).is_zero()) return m;
}

CheckResult bipoly_identity(const std::string& id, const BiPoly& computed, const BiPoly& expected, int probe_from) {
    CheckResult r;
    r.id = id;
    if (computed == expected) {
        r.detail = expected.to_string();
        return r;
    }
    r.status = CheckStatus::Fail;
    const BiPoly diff = computed - expected;
    const int k = diff.x_degree();
    r.detail = "coefficient of x^" + std::to_string(k) + " differs: computed " + computed.x_coeff(k).to_string("m") +
               ", stated " + expected.x_coeff(k).to_string("m");
    const int m = first_nonzero_m(diff, probe_from);
    r.counterexample_m = m;
    r.offending = "at m = " + std::to_string(m) + ": computed " + computed.at_m(Rational(m)).to_string() +
                  ", stated " + expected.at_m(Rational(m)).to_string();
    return r;
}

CheckResult quad_identity(const std::string& id, const QuadElem& computed, const QuadElem& expected, int probe_from) {
    CheckResult r;
    r.id = id;
    if (computed == expected) {
        r.detail = expected.to_string();
        return r;
    }
    r.status = CheckStatus::Fail;
    r.detail = "computed " + computed.to_string() + ", stated " + expected.to_string();
    const QuadElem diff = computed - expected;
    for (int m = probe_from + (probe_from % 2 != 0);; m += 2) {
        QuadNum d;
        try {
            d = diff.at(Rational(m));
        } catch (const std::domain_error&) {
            continue;  // pole
        }
        if (d.sign() != 0) {
            r.counterexample_m = m;
            r.offending = "at m = " + std::to_string(m) + ": computed " + describe(computed.at(Rational(m))) +
                          ", stated " + describe(expected.at(Rational(m)));
            break;
        }
    }
    return r;
}

CheckResult quad_value(const std::string& id, const QuadElem& e, int m, const QuadNum& expected) {
    CheckResult r;
    r.id = id;
    r.m_lo = r.m_hi = m;
    const QuadNum v = e.at(Rational(m));
    if (v == expected) {
        r.detail = describe(v);
        return r;
    }
    r.status = CheckStatus::Fail;
    r.detail = "computed " + describe(v) + ", stated " + describe(expected);
    r.counterexample_m = m;
    r.offending = v.to_string();
    return r;
}

CheckResult sign_sweep(const std::string& id, const std::string& what, const QuadElem& e, Want want, int lo, int hi) {
    CheckResult r;
    r.id = id;
    r.m_lo = lo;
    r.m_hi = hi;
    const char* rel = want == Want::Positive ? " > 0" : want == Want::NonNegative ? " >= 0" : " < 0";
    int count = 0;
    for (int m = lo; m <= hi; m += 2) {
        const int sg = quad_sign(e, Rational(m));
        const bool ok = want == Want::Positive ? sg > 0 : want == Want::NonNegative ? sg >= 0 : sg < 0;
        if (!ok) {
            r.status = CheckStatus::Fail;
            r.counterexample_m = m;
            r.offending = describe(e.at(Rational(m)));
            r.detail = what + rel + " fails at m = " + std::to_string(m);
            return r;
        }
        ++count;
    }
    r.detail = what + rel + " at " + std::to_string(count) + " even m; at m = " + std::to_string(lo) + ": " +
               describe(e.at(Rational(lo)));
    return r;
}

}  // namespace fishcheck::detail
