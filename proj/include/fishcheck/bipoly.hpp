#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fishcheck/rational.hpp"
#include "fishcheck/unipoly.hpp"

namespace fishcheck {

/// Sparse polynomial in two indeterminates x and m over Q, keyed by
/// (x-degree, m-degree). Zero coefficients are never stored.
class BiPoly {
public:
    using Exponent = std::pair<int, int>;  // (x-degree, m-degree)

    BiPoly() = default;
    BiPoly(const Rational& constant);  // NOLINT(implicit)
    BiPoly(int constant) : BiPoly(Rational(constant)) {}  // NOLINT(implicit)

    static BiPoly x();
    static BiPoly m();
    static BiPoly term(const Rational& c, int x_degree, int m_degree);
    /// Lifts a univariate polynomial in m.
    static BiPoly from_m(const UniPoly& p);
    /// Lifts a univariate polynomial in x.
    static BiPoly from_x(const UniPoly& p);
    /// sum_k coeffs[k](m) * x^k.
    static BiPoly from_x_coeffs(const std::vector<UniPoly>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    int x_degree() const;
    int m_degree() const;
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational coeff(int x_degree, int m_degree) const;

    /// Coefficient of x^k as a polynomial in m.
    UniPoly x_coeff(int k) const;
    std::vector<UniPoly> x_coeffs() const;

    /// Specialises m to a rational value, leaving a polynomial in x.
    UniPoly at_m(const Rational& mv) const;
    Rational operator()(const Rational& xv, const Rational& mv) const;

    BiPoly dx() const;
    BiPoly dm() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& k);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) { BiPoly r = a; return r *= b; }
    friend BiPoly operator*(BiPoly a, const Rational& k) { return a *= k; }
    friend BiPoly operator*(const Rational& k, BiPoly a) { return a *= k; }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// Division in Q[m][x] by a divisor that is monic in x.
    /// Throws std::invalid_argument if the divisor is not monic in x.
    std::pair<BiPoly, BiPoly> divmod_x(const BiPoly& divisor) const;

    /// Exact division in Q[x, m]; throws std::domain_error if the division
    /// leaves a remainder.
    BiPoly exact_div(const BiPoly& divisor) const;

    std::string to_string() const;

private:
    void add_term(const Exponent& e, const Rational& c);
    std::map<Exponent, Rational> terms_;
};

/// Quotient and remainder of f by g, with g monic in x.
inline std::pair<BiPoly, BiPoly> bipoly_divmod(const BiPoly& f, const BiPoly& g) {
    return f.divmod_x(g);
}

}  // namespace fishcheck
