#include "check_helpers.hpp"
#include "fishcheck/formulas.hpp"
#include "fishcheck/verify.hpp"

namespace fishcheck {

using detail::quad_identity;
using detail::sign_sweep;
using detail::Want;

namespace {

// c0 + c1 m as an element of Q(m)(s)
QuadElem affine(Rational c0, Rational c1) { return QuadElem(RatFunc(UniPoly({std::move(c0), std::move(c1)}))); }

}  // namespace

std::vector<CheckResult> verify_threshold_inequalities(int m_max) {
    if (m_max < 24) throw std::invalid_argument("verify_threshold_inequalities: m_max must be at least 24");
    namespace F = formulas;
    const QuadElem l = QuadElem::lower_root();
    const QuadElem half = F::lower_half();           // m + s/4 - 5/4
    const QuadElem three_half = F::lower_three_halves();  // m - s/4 - 7/4
    std::vector<CheckResult> out;

    out.push_back(quad_identity("threshold.identity.L2-L/2", l * l - l * QuadElem(RatFunc(Rational(1, 2))), half));
    out.push_back(
        quad_identity("threshold.identity.L2-3L/2", l * l - l * QuadElem(RatFunc(Rational(3, 2))), three_half));

    out.push_back(sign_sweep("threshold.k4.gt18", "m - s/4 - 7/4 - 18", three_half - affine(Rational(18), Rational(0)),
                             Want::Positive, 24, m_max));
    {
        // the same bound at m = 22 is expected to fail; this check asserts it does
        CheckResult r;
        r.id = "threshold.k4.gt18.m22";
        r.m_lo = r.m_hi = 22;
        r.label = "expected-fail-below-24";
        const QuadElem gap = three_half - affine(Rational(18), Rational(0));
        const QuadNum v = gap.at(Rational(22));
        r.detail = "m - s/4 - 7/4 - 18 at m = 22 is " + detail::describe(v);
        if (v.sign() >= 0) {
            r.status = CheckStatus::Fail;
            r.counterexample_m = 22;
            r.offending = v.to_string();
            r.detail += ", expected negative";
        }
        out.push_back(r);
    }
    out.push_back(sign_sweep("threshold.ew3.gt19", "m + s/4 - 5/4 - 19", half - affine(Rational(19), Rational(0)),
                             Want::Positive, 20, m_max));

    // rows of the branch audit for even m >= 24
    out.push_back(sign_sweep("threshold.table.gt-half-m-plus-11", "m + s/4 - 5/4 - (m + 11)/2",
                             half - affine(Rational(11, 2), Rational(1, 2)), Want::Positive, 24, m_max));
    for (int c : {18, 13, 10})
        out.push_back(sign_sweep("threshold.table.gt" + std::to_string(c), "m + s/4 - 5/4 - " + std::to_string(c),
                                 half - affine(Rational(c), Rational(0)), Want::Positive, 24, m_max));
    out.push_back(sign_sweep("threshold.table.gt-m", "m + s/4 - 5/4 - m", half - affine(Rational(0), Rational(1)),
                             Want::Positive, 24, m_max));
    // L_m > sqrt(m) iff L_m^2 - m > 0, both sides positive
    out.push_back(sign_sweep("threshold.table.L-gt-sqrt-m", "L_m^2 - m", l * l - affine(Rational(0), Rational(1)),
                             Want::Positive, 24, m_max));

    out.push_back(sign_sweep("threshold.pm-at-L.negative", "p_m(L_m)", quad_eval(F::p_m(), l), Want::Negative, 6,
                             m_max));
    return out;
}

}  // namespace fishcheck
