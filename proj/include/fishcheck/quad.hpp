#pragma once

#include <string>

#include "fishcheck/bipoly.hpp"
#include "fishcheck/rational.hpp"
#include "fishcheck/unipoly.hpp"

namespace fishcheck {

/// Rational function num(m)/den(m) in lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
    RatFunc(int c) : RatFunc(Rational(c)) {}          // NOLINT(implicit)
    RatFunc(const UniPoly& num) : num_(num), den_(1) {}  // NOLINT(implicit)
    /// Throws std::domain_error on a zero denominator.
    RatFunc(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Throws std::domain_error if m is a pole.
    Rational operator()(const Rational& m) const;
    RatFunc derivative() const;

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string to_string() const;

private:
    UniPoly num_;
    UniPoly den_;
};

/// Element of Q(s) with s = sqrt(d) for one fixed rational radicand d >= 0:
/// value a + b*sqrt(d).
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(Rational a, Rational b, Rational radicand);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& radicand() const { return d_; }

    /// Exact sign, decided without floating point.
    int sign() const;
    double to_double() const;
    QuadNum conjugate() const { return QuadNum(a_, -b_, d_); }
    /// a^2 - b^2 d.
    Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

    QuadNum operator-() const { return QuadNum(-a_, -b_, d_); }
    friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator/(const QuadNum& x, const QuadNum& y);
    friend bool operator==(const QuadNum&, const QuadNum&) = default;

    std::string to_string() const;

private:
    Rational a_, b_, d_;
};

/// Element a(m) + b(m)*s of the quadratic extension Q(m)[s]/(s^2 - (4m - 5)).
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(RatFunc a, RatFunc b) : a_(std::move(a)), b_(std::move(b)) {}
    QuadElem(const RatFunc& a) : a_(a) {}  // NOLINT(implicit)
    QuadElem(int c) : a_(c) {}              // NOLINT(implicit)

    /// s = sqrt(4m - 5).
    static QuadElem s();
    /// L_m = (1 + s)/2.
    static QuadElem lower_root();
    /// The radicand 4m - 5 as a polynomial in m.
    static UniPoly radicand();

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Specialise m; requires 4m - 5 >= 0 and no poles.
    QuadNum at(const Rational& m) const;
    double to_double(double m) const;

    QuadElem operator-() const { return QuadElem(-a_, -b_); }
    friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    /// Throws std::domain_error if y is zero.
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
    friend bool operator==(const QuadElem&, const QuadElem&) = default;

    std::string to_string() const;

private:
    RatFunc a_, b_;
};

/// f(at, m) reduced modulo s^2 = 4m - 5, with m kept symbolic.
QuadElem quad_eval(const BiPoly& f, const QuadElem& at);

/// f(at) for a polynomial with rational coefficients at a fixed-m point.
QuadNum quad_eval(const UniPoly& f, const QuadNum& at);

/// d/dm with ds/dm = 2s/(4m - 5).
QuadElem quad_m_derivative(const QuadElem& e);

/// Sign of e at a fixed m >= 3/2. Exact.
int quad_sign(const QuadElem& e, const Rational& m);

}  // namespace fishcheck
