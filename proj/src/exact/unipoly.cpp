#include "fishcheck/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fishcheck {

UniPoly::UniPoly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("UniPoly::monomial: negative degree");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Rational UniPoly::operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

double UniPoly::eval(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly r = *this;
    Rational inv = Rational(1) / leading();
    r *= inv;
    return r;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    // Clear denominators, then divide by the integer content.
    mpz_class lcm_den = 1;
    for (const auto& c : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class content = 0;
    for (const auto& c : c_) {
        mpz_class n = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(lcm_den, content);
    if (leading().sign() < 0) scale = -scale;
    UniPoly r = *this;
    r *= scale;
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& k) {
    if (k.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= k;
    return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
    UniPoly rem = *this;
    const int dd = divisor.degree();
    if (rem.degree() < dd) return {UniPoly{}, rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - dd) + 1);
    const Rational inv_lead = Rational(1) / divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const Rational factor = rem.leading() * inv_lead;
        q[static_cast<size_t>(shift)] = factor;
        for (int i = 0; i <= dd; ++i)
            rem.c_[static_cast<size_t>(i + shift)] -= factor * divisor.c_[static_cast<size_t>(i)];
        rem.trim();
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("UniPoly::exact_div: nonzero remainder");
    return q;
}

UniPoly UniPoly::compose_shift(const Rational& shift) const {
    // Horner in (t + shift).
    UniPoly acc;
    const UniPoly lin({shift, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= lin;
        acc += UniPoly(*it);
    }
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0) {
            os << mag;
        } else {
            if (!unit) os << mag << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) return {};
    if (f.degree() == 0) return UniPoly(1);
    UniPoly g = gcd(f, f.derivative());
    return f.exact_div(g).primitive();
}

}  // namespace fishcheck
