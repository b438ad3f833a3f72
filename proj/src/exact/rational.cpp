#include "fishcheck/rational.hpp"

#include <stdexcept>

namespace fishcheck {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    mpz_class num, den = 1;
    auto parse_int = [](const std::string& part, mpz_class& out) {
        if (part.empty() || out.set_str(part, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + part + "'");
    };
    if (slash == std::string::npos) {
        parse_int(s, num);
    } else {
        parse_int(s.substr(0, slash), num);
        parse_int(s.substr(slash + 1), den);
    }
    return Rational(num, den);
}

Rational Rational::inverse_power_of_ten(unsigned k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
    return Rational(mpz_class(1), den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        b *= b;
        exponent >>= 1u;
    }
    return result;
}

}  // namespace fishcheck
