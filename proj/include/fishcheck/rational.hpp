#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fishcheck {

/// Exact fraction over arbitrary-precision integers, always kept in lowest
/// terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}                          // NOLINT(implicit)
    Rational(int value) : v_(static_cast<long>(value)) {}         // NOLINT(implicit)
    Rational(long num, long den);
    explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    /// 1 / 10^k.
    static Rational inverse_power_of_ten(unsigned k);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_.get_str();
    }

private:
    mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace fishcheck
