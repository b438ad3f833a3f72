#include <cmath>

#include "check_helpers.hpp"
#include "fishcheck/formulas.hpp"
#include "fishcheck/verify.hpp"

namespace fishcheck {

using detail::bipoly_identity;
using detail::quad_identity;
using detail::quad_value;
using detail::sign_sweep;
using detail::Want;

namespace {

namespace F = formulas;

QuadElem at_l(const BiPoly& f) { return quad_eval(f, QuadElem::lower_root()); }
QuadElem dm_at_l(const BiPoly& f) { return quad_m_derivative(at_l(f)); }
QuadNum at18(long a, long b, long den) { return QuadNum(Rational(a, den), Rational(b, den), Rational(67)); }

QuadElem m_poly(std::initializer_list<long> low_first) {
    std::vector<Rational> v;
    for (long k : low_first) v.emplace_back(k);
    return QuadElem(RatFunc(UniPoly(v)));
}

// Exact and double-precision evaluation of f(L_m) agree.
CheckResult float_agreement(const std::string& id, const BiPoly& f, std::initializer_list<int> ms) {
    CheckResult r;
    r.id = id;
    r.m_lo = *ms.begin();
    r.m_hi = *(ms.end() - 1);
    for (int m : ms) {
        const double exact = at_l(f).at(Rational(m)).to_double();
        const double l = (1.0 + std::sqrt(4.0 * m - 5.0)) / 2.0;
        const double fl = f.at_m(Rational(m)).eval(l);
        const double err = std::fabs(exact - fl) / std::max(1.0, std::fabs(exact));
        if (!(err < 1e-9)) {
            r.status = CheckStatus::Fail;
            r.counterexample_m = m;
            r.offending = "exact " + detail::approx_string(exact) + " vs double " + detail::approx_string(fl);
            r.detail = "relative disagreement " + detail::approx_string(err);
            return r;
        }
    }
    r.detail = "relative agreement below 1e-9";
    return r;
}

}  // namespace

std::vector<CheckResult> verify_appendix_closed_forms() {
    std::vector<CheckResult> out;
    auto add = [&out](CheckResult r) { out.push_back(std::move(r)); };

    // T_m
    add(quad_identity("appendix.t.q-at-L", at_l(F::q_t()), F::q_t_at_l()));
    add(bipoly_identity("appendix.t.q-dx", F::q_t().dx(), F::q_t_dx()));
    add(quad_identity("appendix.t.q-dx-at-L", at_l(F::q_t_dx()), F::q_t_dx_at_l()));
    add(bipoly_identity("appendix.t.q-dxx", F::q_t().dx().dx(), F::q_t_dxx()));
    add(quad_value("appendix.t.q-at-L.m18", at_l(F::q_t()), 18, at18(-31, 5, 4)));

    // same
    add(quad_identity("appendix.same.R-at-L", at_l(F::r_same()), F::r_same_at_l()));
    add(quad_identity("appendix.same.R-at-L.dm", dm_at_l(F::r_same()), F::r_same_at_l_dm()));
    add(quad_value("appendix.same.R-at-L.m18", at_l(F::r_same()), 18, at18(-217, 39, 1)));
    add(bipoly_identity("appendix.same.R-dx", F::r_same().dx(), F::r_same_dx()));
    add(bipoly_identity("appendix.same.R-dxx", F::r_same().dx().dx(), F::r_same_dxx()));
    add(quad_identity("appendix.same.R-dx-at-L", at_l(F::r_same_dx()), F::r_same_dx_at_l()));
    add(quad_identity("appendix.same.R-dx-at-L.dm", dm_at_l(F::r_same_dx()), F::r_same_dx_at_l_dm()));
    add(quad_value("appendix.same.R-dx-at-L.m18", at_l(F::r_same_dx()), 18, at18(413, -11, 1)));

    // dist
    add(quad_identity("appendix.dist.R-at-L", at_l(F::r_dist()), F::r_dist_at_l()));
    add(quad_identity("appendix.dist.R-at-L.dm", dm_at_l(F::r_dist()), F::r_dist_at_l_dm()));
    add(quad_value("appendix.dist.R-at-L.m18", at_l(F::r_dist()), 18, at18(-929, 167, 4)));
    add(bipoly_identity("appendix.dist.R-dx", F::r_dist().dx(), F::r_dist_dx()));
    add(bipoly_identity("appendix.dist.R-dxx", F::r_dist().dx().dx(), F::r_dist_dxx()));
    add(quad_identity("appendix.dist.R-dx-at-L", at_l(F::r_dist_dx()), F::r_dist_dx_at_l()));
    add(quad_identity("appendix.dist.R-dx-at-L.dm", dm_at_l(F::r_dist_dx()), F::r_dist_dx_at_l_dm()));
    add(quad_value("appendix.dist.R-dx-at-L.m18", at_l(F::r_dist_dx()), 18, at18(904, -25, 2)));

    // mixed
    add(bipoly_identity("appendix.mixed.q-dx", F::quot_mix().dx(), F::q_mix_dx()));
    add(quad_identity("appendix.mixed.q-at-L", at_l(F::quot_mix()), F::q_mix_at_l()));
    add(quad_identity("appendix.mixed.R-at-L", at_l(F::r_mix()), F::r_mix_at_l()));
    add(quad_identity("appendix.mixed.R-at-L.dm", dm_at_l(F::r_mix()), F::r_mix_at_l_dm()));
    {
        // The printed m = 18 value disagrees with the general closed form,
        // which evaluates to -999/4 + (1551/4)sqrt(67). Both are positive.
        CheckResult r = quad_value("appendix.mixed.R-at-L.m18", at_l(F::r_mix()), 18, at18(-2169, 1557, 4));
        r.label = "erratum";
        add(r);
    }
    add(bipoly_identity("appendix.mixed.R-dx", F::r_mix().dx(), F::r_mix_dx()));
    add(bipoly_identity("appendix.mixed.R-dxx", F::r_mix().dx().dx(), F::r_mix_dxx()));
    add(quad_identity("appendix.mixed.R-dxx-at-L", at_l(F::r_mix_dxx()), F::r_mix_dxx_at_l()));
    add(quad_identity("appendix.mixed.R-dx-at-L", at_l(F::r_mix_dx()), F::r_mix_dx_at_l()));
    add(quad_identity("appendix.mixed.R-dx-at-L.dm", dm_at_l(F::r_mix_dx()), F::r_mix_dx_at_l_dm()));
    add(quad_value("appendix.mixed.R-dx-at-L.m18", at_l(F::r_mix_dx()), 18, at18(5638, -25, 2)));

    for (const auto& [name, f] : {std::pair{"t", F::q_t()}, {"same", F::r_same()}, {"dist", F::r_dist()},
                                  {"mixed", F::r_mix()}})
        add(float_agreement(std::string("appendix.") + name + ".float-agreement", f, {18, 50, 100}));
    return out;
}

std::vector<CheckResult> verify_appendix_positivity(int m_max) {
    if (m_max < 18) throw std::invalid_argument("verify_appendix_positivity: m_max must be at least 18");
    const int lo = 18, hi = m_max;
    std::vector<CheckResult> out;
    auto sweep = [&](const char* id, const char* what, const QuadElem& e, Want w = Want::Positive) {
        out.push_back(sign_sweep(std::string("appendix.") + id, what, e, w, lo, hi));
    };

    sweep("t.q-at-L.sign", "q_T(L_m)", at_l(F::q_t()));
    sweep("t.q-dx-at-L.sign", "q_T'(L_m)", at_l(F::q_t_dx()));
    sweep("t.q-dxx-at-L.sign", "q_T''(L_m)", at_l(F::q_t_dxx()));
    sweep("t.q-dx-at-L.square-bound", "16m^2 - 9(4m - 5)", m_poly({45, -36, 16}));

    sweep("same.quotient-at-L.sign", "L_m - 4", at_l(F::quot_same()), Want::NonNegative);
    sweep("same.R-at-L.sign", "R_same(L_m)", at_l(F::r_same()));
    sweep("same.R-at-L.dm.sign", "d/dm R_same(L_m)", dm_at_l(F::r_same()));
    sweep("same.R-at-L.dm.first-term", "2m - 147/4 + 3/4", m_poly({-36, 2}), Want::NonNegative);
    sweep("same.R-at-L.dm.s-bound", "8m - 4s", m_poly({0, 8}) - QuadElem(RatFunc(4)) * QuadElem::s());
    sweep("same.R-at-L.dm.second-term", "(66m - 139)/(8m) - 1049/144",
          QuadElem(RatFunc(UniPoly({Rational(-139), Rational(66)}), UniPoly({Rational(0), Rational(8)}))) -
              QuadElem(RatFunc(Rational(1049, 144))),
          Want::NonNegative);
    sweep("same.R-dxx-at-L.sign", "R_same''(L_m)", at_l(F::r_same_dxx()));
    sweep("same.R-dx-at-L.sign", "R_same'(L_m)", at_l(F::r_same_dx()));
    sweep("same.R-dx-at-L.dm.sign", "d/dm R_same'(L_m)", dm_at_l(F::r_same_dx()));

    sweep("dist.quotient-at-L.sign", "L_m - 4", at_l(F::quot_dist()), Want::NonNegative);
    sweep("dist.R-at-L.sign", "R_dist(L_m)", at_l(F::r_dist()));
    sweep("dist.R-at-L.dm.sign", "d/dm R_dist(L_m)", dm_at_l(F::r_dist()));
    sweep("dist.R-at-L.dm.first-term", "2m - 143/4 - 1/4", m_poly({-36, 2}), Want::NonNegative);
    sweep("dist.R-dxx-at-L.sign", "R_dist''(L_m)", at_l(F::r_dist_dxx()));
    sweep("dist.R-dx-at-L.sign", "R_dist'(L_m)", at_l(F::r_dist_dx()));
    sweep("dist.R-dx-at-L.dm.sign", "d/dm R_dist'(L_m)", dm_at_l(F::r_dist_dx()));

    {
        // 3x^2 - 4x + 3 has negative discriminant and positive leading coefficient
        CheckResult r;
        r.id = "appendix.mixed.q-dx.no-real-root";
        const UniPoly d = F::q_mix_dx().at_m(Rational(0));
        const Rational disc = d.coeff(1) * d.coeff(1) - Rational(4) * d.coeff(2) * d.coeff(0);
        r.detail = "discriminant " + disc.to_string();
        if (!(disc.sign() < 0 && d.leading().sign() > 0)) {
            r.status = CheckStatus::Fail;
            r.offending = r.detail;
            r.counterexample_m = 18;  // independent of m
        }
        out.push_back(r);
    }
    sweep("mixed.q-at-L.sign", "q_mix(L_m)", at_l(F::quot_mix()));
    sweep("mixed.q-at-L.s-gt-8", "s - 8", QuadElem::s() - QuadElem(8));
    sweep("mixed.q-at-L.lower-bound", "18m - 89", m_poly({-89, 18}));
    sweep("mixed.R-at-L.sign", "R_mix(L_m)", at_l(F::r_mix()));
    sweep("mixed.R-at-L.dm.sign", "d/dm R_mix(L_m)", dm_at_l(F::r_mix()));
    sweep("mixed.R-at-L.dm.numerator-s", "24m^2 - 308m + 51", m_poly({51, -308, 24}));
    sweep("mixed.R-at-L.dm.numerator-1", "340m^2 - 3310m + 4467", m_poly({4467, -3310, 340}));
    sweep("mixed.R-dxx.slope", "39m - 336", m_poly({-336, 39}));
    sweep("mixed.R-dxx-at-L.numerator-1", "4m^2 - 73m - 32", m_poly({-32, -73, 4}));
    if (out.back().status == CheckStatus::Fail) {
        // -50 at m = 18; the sign of R_mix''(L_m) is settled by the next check instead
        out.back().label = "erratum";
        out.back().detail += "; R_mix''(L_m) > 0 is checked directly";
    }
    sweep("mixed.R-dxx-at-L.sign", "R_mix''(L_m)", at_l(F::r_mix_dxx()));
    sweep("mixed.R-dx-at-L.sign", "R_mix'(L_m)", at_l(F::r_mix_dx()));
    sweep("mixed.R-dx-at-L.dm.sign", "d/dm R_mix'(L_m)", dm_at_l(F::r_mix_dx()));
    sweep("mixed.R-dx-at-L.dm.numerator-s", "172m - 1008", m_poly({-1008, 172}));
    sweep("mixed.R-dx-at-L.dm.numerator-1", "40m^2 - 478m + 301", m_poly({301, -478, 40}));
    // the leading coefficient of R_mix, needed for R_mix -> +inf
    sweep("mixed.R-leading.sign", "13m/2 - 56", QuadElem(RatFunc(F::r_mix().x_coeff(3))));
    return out;
}

}  // namespace fishcheck
