#include "fishcheck/quad.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fishcheck {

// ---- RatFunc --------------------------------------------------------------

RatFunc::RatFunc(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) {
        den_ = UniPoly(1);
        return;
    }
    UniPoly g = gcd(num, den);
    num = num.exact_div(g);
    den = den.exact_div(g);
    const Rational lead = den.leading();
    num_ = num * (Rational(1) / lead);
    den_ = den.monic();
}

Rational RatFunc::operator()(const Rational& m) const {
    Rational d = den_(m);
    if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole m = " + m.to_string());
    return num_(m) / d;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string("m");
    return "(" + num_.to_string("m") + ")/(" + den_.to_string("m") + ")";
}

// ---- QuadNum --------------------------------------------------------------

QuadNum::QuadNum(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
    if (d_.sign() < 0) throw std::domain_error("QuadNum: negative radicand " + d_.to_string());
}

int QuadNum::sign() const {
    const int sa = a_.sign();
    const int sb = d_.is_zero() ? 0 : b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with b^2 d.
    const auto c = a_ * a_ <=> b_ * b_ * d_;
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
}

double QuadNum::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

static void require_same_radicand(const QuadNum& x, const QuadNum& y) {
    if (x.radicand() != y.radicand())
        throw std::invalid_argument("QuadNum: mismatched radicands " + x.radicand().to_string() + " and " +
                                    y.radicand().to_string());
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
    require_same_radicand(x, y);
    return QuadNum(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    require_same_radicand(x, y);
    return QuadNum(x.a_ * y.a_ + x.b_ * y.b_ * x.d_, x.a_ * y.b_ + x.b_ * y.a_, x.d_);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) {
    require_same_radicand(x, y);
    const Rational n = y.norm();
    if (n.is_zero()) throw std::domain_error("QuadNum: division by an element of zero norm");
    QuadNum t = x * y.conjugate();
    return QuadNum(t.a_ / n, t.b_ / n, x.d_);
}

std::string QuadNum::to_string() const {
    std::ostringstream os;
    os << a_;
    if (!b_.is_zero()) os << (b_.sign() < 0 ? " - " : " + ") << b_.abs() << "*sqrt(" << d_ << ")";
    return os.str();
}

// ---- QuadElem -------------------------------------------------------------

UniPoly QuadElem::radicand() { return UniPoly({Rational(-5), Rational(4)}); }

QuadElem QuadElem::s() { return QuadElem(RatFunc(0), RatFunc(1)); }

QuadElem QuadElem::lower_root() {
    return QuadElem(RatFunc(Rational(1, 2)), RatFunc(Rational(1, 2)));
}

QuadNum QuadElem::at(const Rational& m) const {
    return QuadNum(a_(m), b_(m), radicand()(m));
}

double QuadElem::to_double(double m) const {
    const double a = a_.num().eval(m) / a_.den().eval(m);
    const double b = b_.num().eval(m) / b_.den().eval(m);
    return a + b * std::sqrt(4.0 * m - 5.0);
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) { return QuadElem(x.a_ + y.a_, x.b_ + y.b_); }

QuadElem operator-(const QuadElem& x, const QuadElem& y) { return QuadElem(x.a_ - y.a_, x.b_ - y.b_); }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    const RatFunc d(QuadElem::radicand());
    return QuadElem(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
    if (y.is_zero()) throw std::domain_error("QuadElem: division by zero");
    const RatFunc d(QuadElem::radicand());
    const RatFunc norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
    const QuadElem t = x * QuadElem(y.a_, -y.b_);
    return QuadElem(t.a_ / norm, t.b_ / norm);
}

std::string QuadElem::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string out;
    if (!a_.is_zero()) out = a_.to_string() + " + ";
    return out + "(" + b_.to_string() + ")*s";
}

// ---- free functions -------------------------------------------------------

QuadElem quad_eval(const BiPoly& f, const QuadElem& at) {
    QuadElem acc;
    for (int k = f.x_degree(); k >= 0; --k) acc = acc * at + QuadElem(RatFunc(f.x_coeff(k)));
    return acc;
}

QuadNum quad_eval(const UniPoly& f, const QuadNum& at) {
    QuadNum acc(Rational(0), Rational(0), at.radicand());
    for (int k = f.degree(); k >= 0; --k) acc = acc * at + QuadNum(f.coeff(k), Rational(0), at.radicand());
    return acc;
}

QuadElem quad_m_derivative(const QuadElem& e) {
    // d/dm (a + b s) = a' + b' s + b * 2s/(4m - 5)
    const RatFunc two_over_d(UniPoly(2), QuadElem::radicand());
    return QuadElem(e.a().derivative(), e.b().derivative() + e.b() * two_over_d);
}

int quad_sign(const QuadElem& e, const Rational& m) {
    if (m < Rational(3, 2)) throw std::domain_error("quad_sign: requires m >= 3/2, got " + m.to_string());
    return e.at(m).sign();
}

}  // namespace fishcheck
