#include "check_helpers.hpp"
#include "fishcheck/families.hpp"
#include "fishcheck/formulas.hpp"
#include "fishcheck/sturm.hpp"
#include "fishcheck/verify.hpp"

namespace fishcheck {

using detail::bipoly_identity;

CheckResult check_charpoly(const std::string& id, const SymbolicMatrix& q, const BiPoly& expected) {
    return bipoly_identity(id, char_poly(q), expected);
}

std::vector<CheckResult> verify_charpoly_formulas() {
    namespace F = formulas;
    return {
        check_charpoly("charpoly.t", family_quotient_symbolic(Family::T), F::q_t()),
        check_charpoly("charpoly.same", family_quotient_symbolic(Family::Same), F::f_same()),
        check_charpoly("charpoly.dist", family_quotient_symbolic(Family::Dist), F::f_dist()),
        check_charpoly("charpoly.mixed", family_quotient_symbolic(Family::Mixed), F::f_mix()),
        check_charpoly("charpoly.s-minus", family_quotient_symbolic(Family::SMinus), F::p_m()),
    };
}

namespace {

struct Decomposition {
    const char* name;
    BiPoly f, quot, rem;
};

CheckResult decomposition_identity(const Decomposition& d) {
    const auto [quot, rem] = bipoly_divmod(d.f, formulas::p_m());
    const std::string id = std::string("decomp.") + d.name;
    CheckResult qr = bipoly_identity(id + ".quotient", quot, d.quot);
    CheckResult rr = bipoly_identity(id + ".remainder", rem, d.rem);
    CheckResult r;
    r.id = id;
    if (qr.status == CheckStatus::Fail || rr.status == CheckStatus::Fail) {
        const CheckResult& bad = qr.status == CheckStatus::Fail ? qr : rr;
        r = bad;
        r.id = id;
        return r;
    }
    r.detail = "quotient " + quot.to_string() + "; remainder " + rem.to_string();
    return r;
}

// f >= 0 (or > 0) on [L, inf): value at L, no root above L, positive leading coefficient.
bool holds_above(const UniPoly& f, const QuadNum& l, bool strict, std::string& why) {
    const int sg = quad_eval(f, l).sign();
    if (strict ? sg <= 0 : sg < 0) {
        why = "value at L_m is " + detail::describe(quad_eval(f, l));
        return false;
    }
    if (f.leading().sign() <= 0) {
        why = "leading coefficient " + f.leading().to_string();
        return false;
    }
    const int above = SturmSequence(f).count_roots_above(l);
    if (above != 0) {
        why = std::to_string(above) + " root(s) above L_m";
        return false;
    }
    return true;
}

CheckResult certificate(const char* name, const BiPoly& quot, const BiPoly& rem, int lo, int hi) {
    CheckResult r;
    r.id = std::string("decomp.") + name + ".certificate";
    r.m_lo = lo;
    r.m_hi = hi;
    const QuadElem l = QuadElem::lower_root();
    const QuadElem p_at_l = quad_eval(formulas::p_m(), l);
    for (int m = lo; m <= hi; m += 2) {
        const Rational mr(m);
        const QuadNum lm = l.at(mr);
        std::string why;
        if (p_at_l.at(mr).sign() >= 0) why = "p_m(L_m) = " + detail::describe(p_at_l.at(mr)) + " is not negative";
        else if (!quot.is_zero() && !holds_above(quot.at_m(mr), lm, false, why)) why = "quotient: " + why;
        else if (!holds_above(rem.at_m(mr), lm, true, why)) why = "remainder: " + why;
        if (!why.empty()) {
            r.status = CheckStatus::Fail;
            r.counterexample_m = m;
            r.offending = why;
            r.detail = "certificate fails at m = " + std::to_string(m);
            return r;
        }
    }
    r.detail = "p_m(L_m) < 0, quotient >= 0 and remainder > 0 on [L_m, inf) for every even m in range";
    return r;
}

}  // namespace

std::vector<CheckResult> verify_decompositions(int m_max) {
    namespace F = formulas;
    const std::vector<Decomposition> ds = {
        {"same", F::f_same(), F::quot_same(), F::r_same()},
        {"dist", F::f_dist(), F::quot_dist(), F::r_dist()},
        {"mixed", F::f_mix(), F::quot_mix(), F::r_mix()},
    };
    std::vector<CheckResult> out;
    for (const auto& d : ds) out.push_back(decomposition_identity(d));
    // q_T plays the role of f with zero quotient
    out.push_back(certificate("t", BiPoly(0), F::q_t(), 18, m_max));
    for (const auto& d : ds) out.push_back(certificate(d.name, d.quot, d.rem, 18, m_max));
    return out;
}

}  // namespace fishcheck
