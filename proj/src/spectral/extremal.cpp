#include <cmath>

#include "fishcheck/spectral.hpp"

namespace fishcheck {

BiPoly extremal_quartic() {
    const BiPoly x = BiPoly::x();
    const BiPoly m = BiPoly::m();
    return x * x * x * x - m * x * x - (m - BiPoly(2)) * x + m * Rational(1, 2) - BiPoly(1);
}

UniPoly extremal_quartic(int m) { return extremal_quartic().at_m(Rational(m)); }

RhoPrime rho_prime(int m, const Rational& tol) {
    if (m % 2 != 0) throw std::invalid_argument("rho_prime: m must be even, got " + std::to_string(m));
    if (m < 6) throw std::invalid_argument("rho_prime: requires m >= 6, got " + std::to_string(m));
    RhoPrime r;
    r.m = m;
    const UniPoly p = extremal_quartic(m);
    r.interval = sturm_largest_root(p, tol);
    // the double is taken from a much narrower interval so it rounds correctly at 12 decimals
    r.value = sturm_largest_root(p, Rational::inverse_power_of_ten(18)).approx();
    return r;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Below: return "below";
        case Verdict::Above: return "above";
        case Verdict::EqualWithinMargin: return "equal-within-margin";
    }
    return "?";
}

RhoComparison compare_rho(const Graph& g, int m, double margin) {
    if (!(margin > 0.0)) throw std::invalid_argument("compare_rho: margin must be positive");
    const double rho = perron_root(g);
    const double rp = rho_prime(m).value;
    Verdict v = Verdict::EqualWithinMargin;
    if (rho < rp - margin) v = Verdict::Below;
    else if (rho > rp + margin) v = Verdict::Above;
    return {v, rho, rp};
}

}  // namespace fishcheck
