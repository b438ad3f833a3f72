#include <doctest.h>

#include <cmath>
#include <random>

#include "fishcheck/bipoly.hpp"
#include "fishcheck/quad.hpp"
#include "fishcheck/rational.hpp"
#include "fishcheck/sturm.hpp"
#include "fishcheck/unipoly.hpp"
#include "test_support.hpp"

using namespace fishcheck;
using namespace fishcheck::testing;

namespace {

BiPoly p_m() { return X * X * X * X - M * X * X - (M - q(2)) * X + M * Rational(1, 2) - q(1); }

BiPoly f_same() {
    return X * X * X * X * X - q(4) * X * X * X * X + (q(10) - M) * X * X * X + (q(4) * M - q(42)) * X * X +
           (q(19) - M) * X + q(84) - q(6) * M;
}

BiPoly r_same() {
    return q(10) * X * X * X + (M - q(44)) * X * X + (q(28) - M * Rational(11, 2)) * X + q(80) - q(4) * M;
}

BiPoly x_pow(int k) {
    BiPoly r(1);
    for (int i = 0; i < k; ++i) r *= X;
    return r;
}

BiPoly f_mix() {
    return x_pow(7) - q(2) * x_pow(6) + (q(3) - M) * x_pow(5) + (q(2) * M - q(24)) * x_pow(4) +
           (q(6) * M - q(61)) * x_pow(3) + (q(84) - q(6) * M) * x_pow(2) + (q(90) - q(7) * M) * X + q(2) * M - q(28);
}

BiPoly r_mix() {
    return (M * Rational(13, 2) - q(56)) * x_pow(3) + (M * M - q(28) * M + q(76)) * x_pow(2) +
           (M * M - M * Rational(73, 2) + q(145)) * X - M * M * Rational(1, 2) + q(16) * M - q(54);
}

BiPoly q_t() { return x_pow(3) - q(3) * x_pow(2) + (q(6) - M) * X + q(3) * M - q(30); }

BiPoly r_dist() {
    return q(11) * x_pow(3) + (M - q(47)) * x_pow(2) + (q(37) - M * Rational(13, 2)) * X + q(41) - M;
}

BiPoly random_bipoly(std::mt19937& rng, int max_x, int max_m) {
    std::uniform_int_distribution<int> coef(-5, 5);
    BiPoly f;
    for (int i = 0; i <= max_x; ++i)
        for (int j = 0; j <= max_m; ++j) f += BiPoly::term(Rational(coef(rng), 1 + (coef(rng) + 5) % 3), i, j);
    return f;
}

// Independent float oracle: scan downward from the Cauchy bound, then bisect.
double float_largest_root(const UniPoly& f) {
    double hi = root_bound(f).to_double();
    const double step = 1e-3;
    double x = hi;
    const double s_hi = f.eval(hi) > 0 ? 1.0 : -1.0;
    while (x > -hi && (f.eval(x) > 0 ? 1.0 : -1.0) == s_hi) x -= step;
    double lo = x, up = x + step;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + up);
        if ((f.eval(mid) > 0 ? 1.0 : -1.0) == s_hi) up = mid;
        else lo = mid;
    }
    return 0.5 * (lo + up);
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(3, -6).sign() == -1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational::inverse_power_of_ten(3) == Rational(1, 1000));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("unipoly arithmetic and gcd") {
    const UniPoly t = UniPoly::variable();
    const UniPoly f = (t - UniPoly(1)) * (t - UniPoly(1)) * (t + UniPoly(2));
    CHECK(f.degree() == 3);
    auto [qq, rr] = f.divmod(t - UniPoly(1));
    CHECK(rr.is_zero());
    CHECK(qq == (t - UniPoly(1)) * (t + UniPoly(2)));
    CHECK(gcd(f, f.derivative()) == t - UniPoly(1));
    CHECK(squarefree_part(f) == (t - UniPoly(1)) * (t + UniPoly(2)));
    CHECK(UniPoly({Rational(1, 2), Rational(3, 4)}).primitive() == UniPoly({Rational(2), Rational(3)}));
    CHECK(f.compose_shift(Rational(1))(Rational(0)) == f(Rational(1)));
    CHECK_THROWS_AS(f.exact_div(t + UniPoly(5)), std::domain_error);
}

TEST_CASE("bipoly_divmod: decompositions against p_m") {
    SUBCASE("f_same = (x - 4) p_m + R_same") {
        auto [quot, rem] = bipoly_divmod(f_same(), p_m());
        CHECK(quot == X - q(4));
        CHECK(rem == r_same());
    }
    SUBCASE("self division") {
        auto [quot, rem] = bipoly_divmod(p_m(), p_m());
        CHECK(quot == BiPoly(1));
        CHECK(rem.is_zero());
    }
    SUBCASE("f_mix") {
        auto [quot, rem] = bipoly_divmod(f_mix(), p_m());
        CHECK(quot == x_pow(3) - q(2) * x_pow(2) + q(3) * X + M - q(26));
        CHECK(rem == r_mix());
    }
    SUBCASE("non-monic divisor rejected") {
        CHECK_THROWS_WITH_AS(bipoly_divmod(f_same(), q(2) * X * X + M), doctest::Contains("monic"),
                             std::invalid_argument);
        CHECK_THROWS_AS(bipoly_divmod(f_same(), M * X + q(1)), std::invalid_argument);
    }
}

TEST_CASE("bipoly_divmod recombination property") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const BiPoly f = random_bipoly(rng, 6, 3);
        // random lower-order part plus x^3, so the divisor is monic in x
        const BiPoly monic_g = random_bipoly(rng, 2, 2) + x_pow(3);
        auto [quot, rem] = bipoly_divmod(f, monic_g);
        CHECK(quot * monic_g + rem == f);
        CHECK(rem.x_degree() < 3);
    }
}

TEST_CASE("bipoly exact division and substitution") {
    const BiPoly a = X * M + q(3) * X - M * M;
    const BiPoly b = X * X - q(2) * M + q(1);
    CHECK((a * b).exact_div(b) == a);
    CHECK_THROWS_AS((a * b + q(1)).exact_div(b), std::domain_error);
    // substituting m commutes with the ring operations
    for (int mv : {-3, 0, 7, 18}) CHECK((a * b).at_m(Rational(mv)) == a.at_m(Rational(mv)) * b.at_m(Rational(mv)));
}

TEST_CASE("quad_eval closed forms") {
    const QuadElem L = QuadElem::lower_root();
    // q_T(L_m) = (4m + 5s - 103)/4
    CHECK(quad_eval(q_t(), L) == quad(q(4) * M - q(103), q(5), 4));
    // p_m(0) = m/2 - 1
    CHECK(quad_eval(p_m(), QuadElem(0)) == quad(M * Rational(1, 2) - q(1), q(0)));
    // R_same(L_m) at m = 18 is -217 + 39 sqrt(67)
    const QuadNum v = quad_eval(r_same(), L).at(Rational(18));
    CHECK(v == QuadNum(Rational(-217), Rational(39), Rational(67)));
}

TEST_CASE("quad_eval is a ring homomorphism") {
    std::mt19937 rng(5);
    const QuadElem L = QuadElem::lower_root();
    for (int trial = 0; trial < 60; ++trial) {
        const BiPoly f = random_bipoly(rng, 3, 2);
        const BiPoly g = random_bipoly(rng, 3, 2);
        CHECK(quad_eval(f * g, L) == quad_eval(f, L) * quad_eval(g, L));
        CHECK(quad_eval(f + g, L) == quad_eval(f, L) + quad_eval(g, L));
    }
}

TEST_CASE("quad_m_derivative") {
    // d/dm s = 2s/(4m - 5)
    const QuadElem ds = quad_m_derivative(QuadElem::s());
    CHECK(ds == QuadElem(RatFunc(0), RatFunc(UniPoly(2), QuadElem::radicand())));
    const QuadElem L = QuadElem::lower_root();
    const QuadElem inv_s = QuadElem(1) / QuadElem::s();
    // d/dm R_same(L_m) = 2m - 147/4 + (66m - 139)/(4s)
    const QuadElem expect_same =
        quad(q(2) * M - q(147, 4), q(0)) + quad(q(66) * M - q(139), q(0), 4) * inv_s;
    CHECK(quad_m_derivative(quad_eval(r_same(), L)) == expect_same);
    // d/dm R_dist(L_m) = 2m - 143/4 + (66m - 117)/(4s)
    const QuadElem expect_dist =
        quad(q(2) * M - q(143, 4), q(0)) + quad(q(66) * M - q(117), q(0), 4) * inv_s;
    CHECK(quad_m_derivative(quad_eval(r_dist(), L)) == expect_dist);
}

TEST_CASE("quad_sign") {
    CHECK(quad_sign(quad(q(-31), q(5), 4), Rational(18)) == 1);
    CHECK(quad_sign(QuadElem(0), Rational(18)) == 0);
    CHECK(quad_sign(quad(q(-217), q(39)), Rational(18)) == 1);
    // printed value of R_mix(L_18); positive either way
    CHECK(quad_sign(quad(q(-2169), q(1557), 4), Rational(18)) == 1);
    CHECK(quad_sign(quad(q(31), q(-5), 4), Rational(18)) == -1);
    // exact zero: 7 - s at m = 27/2 (4m - 5 = 49)
    CHECK(quad_sign(quad(q(7), q(-1)), Rational(27, 2)) == 0);
    CHECK_THROWS_AS(quad_sign(QuadElem(1), Rational(1)), std::domain_error);
}

TEST_CASE("quad_sign agrees with floating evaluation") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-200, 200);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> mm(2, 400);
    int compared = 0;
    while (compared < 1000) {
        const Rational a(coef(rng), den(rng)), b(coef(rng), den(rng));
        const Rational m(mm(rng));
        const QuadNum v(a, b, Rational(4) * m - Rational(5));
        const double f = v.to_double();
        if (std::fabs(f) <= 1e-6) continue;
        CHECK(v.sign() == (f > 0 ? 1 : -1));
        ++compared;
    }
}

TEST_CASE("sturm_largest_root") {
    const Rational tol = Rational::inverse_power_of_ten(12);
    SUBCASE("p_18") {
        const RootInterval iv = sturm_largest_root(p_m().at_m(Rational(18)), tol);
        CHECK(iv.width() <= tol);
        CHECK(std::fabs(iv.approx() - 4.593888315670) < 1e-9);
    }
    SUBCASE("x^2 - 1") {
        const RootInterval iv = sturm_largest_root(UniPoly({Rational(-1), Rational(0), Rational(1)}), tol);
        CHECK(iv.lo <= Rational(1));
        CHECK(Rational(1) <= iv.hi);
        CHECK(std::fabs(iv.approx() - 1.0) < 1e-12);
    }
    SUBCASE("q_T at m = 18") {
        const UniPoly qt = q_t().at_m(Rational(18));
        CHECK(qt == UniPoly({Rational(24), Rational(-12), Rational(-3), Rational(1)}));
        const RootInterval iv = sturm_largest_root(qt, tol);
        CHECK(Rational(44, 10) < iv.lo);
        CHECK(iv.hi < Rational(46, 10));
        CHECK(std::fabs(iv.approx() - float_largest_root(qt)) < 1e-9);
        CHECK(iv.hi < sturm_largest_root(p_m().at_m(Rational(18)), tol).lo);
    }
    SUBCASE("repeated and rational roots") {
        const UniPoly t = UniPoly::variable();
        const UniPoly f = (t - UniPoly(3)) * (t - UniPoly(3)) * (t + UniPoly(1));
        const RootInterval iv = sturm_largest_root(f, tol);
        CHECK(iv.lo <= Rational(3));
        CHECK(Rational(3) <= iv.hi);
    }
    SUBCASE("no real root") {
        CHECK_THROWS_AS(sturm_largest_root(UniPoly({Rational(1), Rational(0), Rational(1)}), tol), NoRealRoot);
    }
}

TEST_CASE("sturm interval property on random polynomials") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-9, 9);
    const Rational tol = Rational::inverse_power_of_ten(10);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> c;
        const int deg = 1 + trial % 6;
        for (int i = 0; i <= deg; ++i) c.emplace_back(coef(rng));
        if (c.back().is_zero()) c.back() = Rational(1);
        const UniPoly f = squarefree_part(UniPoly(c));
        const SturmSequence seq(f);
        if (seq.count_real_roots() == 0) {
            CHECK_THROWS_AS(sturm_largest_root(f, tol), NoRealRoot);
            continue;
        }
        const RootInterval iv = sturm_largest_root(f, tol);
        CHECK(iv.width() <= tol);
        CHECK((f(iv.lo) * f(iv.hi)).sign() <= 0);
        if (!iv.is_exact()) CHECK(seq.count_roots(iv.lo, iv.hi) == 1);
        CHECK(seq.count_roots_above(iv.hi) == 0);
        CHECK(std::fabs(iv.approx() - float_largest_root(f)) < 1e-6);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("p_m(L_m) < 0 for even m in [6, 500]") {
    const QuadElem at_l = quad_eval(p_m(), QuadElem::lower_root());
    for (int m = 6; m <= 500; m += 2) CHECK(quad_sign(at_l, Rational(m)) == -1);
}
