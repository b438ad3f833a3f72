#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fishcheck/rational.hpp"

namespace fishcheck {

/// Dense univariate polynomial over Q. Coefficient i multiplies t^i.
/// The leading coefficient is nonzero unless the polynomial is zero, in which
/// case the coefficient vector is empty.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& constant);  // NOLINT(implicit)
    UniPoly(int constant) : UniPoly(Rational(constant)) {}  // NOLINT(implicit)
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    /// The monomial t.
    static UniPoly variable();
    static UniPoly monomial(const Rational& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of t^i (zero beyond the degree).
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& t) const;
    double eval(double t) const;

    UniPoly derivative() const;
    UniPoly monic() const;
    /// Content-free representative with positive leading coefficient.
    UniPoly primitive() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& k);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& k) { return a *= k; }
    friend UniPoly operator*(const Rational& k, UniPoly a) { return a *= k; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Euclidean division over Q. Throws std::domain_error on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    /// Throws std::domain_error unless divisor divides *this exactly.
    UniPoly exact_div(const UniPoly& divisor) const;

    /// Substitute t -> t + shift.
    UniPoly compose_shift(const Rational& shift) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// f / gcd(f, f'), made primitive. Constant input maps to 1, zero stays zero.
UniPoly squarefree_part(const UniPoly& f);

}  // namespace fishcheck
