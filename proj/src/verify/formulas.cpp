#include "fishcheck/formulas.hpp"

#include "fishcheck/spectral.hpp"

namespace fishcheck::formulas {

namespace {

const BiPoly X = BiPoly::x();
const BiPoly M = BiPoly::m();

BiPoly c(long num, long den = 1) { return BiPoly(Rational(num, den)); }

BiPoly xp(int k) {
    BiPoly r(1);
    for (int i = 0; i < k; ++i) r *= X;
    return r;
}

UniPoly mpoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> v;
    for (long k : coeffs_low_first) v.emplace_back(k);
    return UniPoly(v);
}

const QuadElem S = QuadElem::s();

// (a(m) + b(m) s) / den
QuadElem qe(std::initializer_list<long> a, std::initializer_list<long> b, long den) {
    const UniPoly inv(Rational(1, den));
    return QuadElem(RatFunc(mpoly(a) * inv), RatFunc(mpoly(b) * inv));
}

}  // namespace

BiPoly p_m() { return extremal_quartic(); }

BiPoly q_t() { return xp(3) - c(3) * xp(2) + (c(6) - M) * X + c(3) * M - c(30); }

BiPoly f_same() {
    return xp(5) - c(4) * xp(4) + (c(10) - M) * xp(3) + (c(4) * M - c(42)) * xp(2) + (c(19) - M) * X + c(84) -
           c(6) * M;
}

BiPoly f_dist() {
    return xp(5) - c(4) * xp(4) + (c(11) - M) * xp(3) + (c(4) * M - c(45)) * xp(2) + (c(28) - c(2) * M) * X + c(45) -
           c(3) * M;
}

BiPoly f_mix() {
    return xp(7) - c(2) * xp(6) + (c(3) - M) * xp(5) + (c(2) * M - c(24)) * xp(4) + (c(6) * M - c(61)) * xp(3) +
           (c(84) - c(6) * M) * xp(2) + (c(90) - c(7) * M) * X + c(2) * M - c(28);
}

BiPoly quot_same() { return X - c(4); }
BiPoly quot_dist() { return X - c(4); }
BiPoly quot_mix() { return xp(3) - c(2) * xp(2) + c(3) * X + M - c(26); }

BiPoly r_same() {
    return c(10) * xp(3) + (M - c(44)) * xp(2) + (c(28) - c(11, 2) * M) * X + c(80) - c(4) * M;
}

BiPoly r_dist() {
    return c(11) * xp(3) + (M - c(47)) * xp(2) + (c(37) - c(13, 2) * M) * X + c(41) - M;
}

BiPoly r_mix() {
    return (c(13, 2) * M - c(56)) * xp(3) + (M * M - c(28) * M + c(76)) * xp(2) +
           (M * M - c(73, 2) * M + c(145)) * X - c(1, 2) * M * M + c(16) * M - c(54);
}

BiPoly q_t_dx() { return c(3) * xp(2) - c(6) * X + c(6) - M; }
BiPoly q_t_dxx() { return c(6) * X - c(6); }
BiPoly r_same_dx() { return c(30) * xp(2) + (c(2) * M - c(88)) * X + c(28) - c(11, 2) * M; }
BiPoly r_same_dxx() { return c(60) * X + c(2) * M - c(88); }
BiPoly r_dist_dx() { return c(33) * xp(2) + (c(2) * M - c(94)) * X + c(37) - c(13, 2) * M; }
BiPoly r_dist_dxx() { return c(66) * X + c(2) * M - c(94); }
BiPoly q_mix_dx() { return c(3) * xp(2) - c(4) * X + c(3); }

BiPoly r_mix_dx() {
    return (c(39, 2) * M - c(168)) * xp(2) + (c(2) * M * M - c(56) * M + c(152)) * X + M * M - c(73, 2) * M + c(145);
}

BiPoly r_mix_dxx() { return (c(39) * M - c(336)) * X + c(2) * M * M - c(56) * M + c(152); }

QuadElem q_t_at_l() { return qe({-103, 4}, {5}, 4); }
QuadElem q_t_dx_at_l() { return qe({0, 4}, {-3}, 2); }

QuadElem r_same_at_l() { return qe({482, -147, 4}, {-42, 11}, 4); }
QuadElem r_same_at_l_dm() { return qe({-147, 8}, {}, 4) + qe({-139, 66}, {}, 4) / S; }
QuadElem r_same_dx_at_l() { return qe({-92, 51}, {-58, 2}, 2); }
QuadElem r_same_dx_at_l_dm() { return qe({-126, 12}, {51}, 2) / S; }

QuadElem r_dist_at_l() { return qe({349, -143, 4}, {-31, 11}, 4); }
QuadElem r_dist_at_l_dm() { return qe({-143, 8}, {}, 4) + qe({-117, 66}, {}, 4) / S; }
QuadElem r_dist_dx_at_l() { return qe({-86, 55}, {-61, 2}, 2); }
QuadElem r_dist_dx_at_l_dm() { return qe({-132, 12}, {55}, 2) / S; }

QuadElem q_mix_at_l() { return qe({-97, 2}, {1, 2}, 4); }
QuadElem r_mix_at_l() { return qe({324, 51, -154, 8}, {996, -495, 34}, 8); }
QuadElem r_mix_at_l_dm() { return qe({4467, -3310, 340}, {51, -308, 24}, 8) / S; }
QuadElem r_mix_dxx_at_l() { return qe({-32, -73, 4}, {-336, 39}, 2); }
QuadElem r_mix_dx_at_l() { return qe({1556, -1008, 86}, {-32, -73, 4}, 4); }
QuadElem r_mix_dx_at_l_dm() { return qe({301, -478, 40}, {-1008, 172}, 4) / S; }

QuadElem lower_half() { return qe({-5, 4}, {1}, 4); }
QuadElem lower_three_halves() { return qe({-7, 4}, {-1}, 4); }

}  // namespace fishcheck::formulas
