#include "fishcheck/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fishcheck {

BiPoly::BiPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Exponent{0, 0}, constant);
}

BiPoly BiPoly::x() { return term(Rational(1), 1, 0); }
BiPoly BiPoly::m() { return term(Rational(1), 0, 1); }

BiPoly BiPoly::term(const Rational& c, int x_degree, int m_degree) {
    if (x_degree < 0 || m_degree < 0) throw std::invalid_argument("BiPoly::term: negative exponent");
    BiPoly r;
    r.add_term({x_degree, m_degree}, c);
    return r;
}

BiPoly BiPoly::from_m(const UniPoly& p) {
    BiPoly r;
    for (int j = 0; j <= p.degree(); ++j) r.add_term({0, j}, p.coeff(j));
    return r;
}

BiPoly BiPoly::from_x(const UniPoly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term({i, 0}, p.coeff(i));
    return r;
}

BiPoly BiPoly::from_x_coeffs(const std::vector<UniPoly>& coeffs) {
    BiPoly r;
    for (size_t k = 0; k < coeffs.size(); ++k)
        for (int j = 0; j <= coeffs[k].degree(); ++j)
            r.add_term({static_cast<int>(k), j}, coeffs[k].coeff(j));
    return r;
}

void BiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::x_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.first;
}

int BiPoly::m_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

Rational BiPoly::coeff(int x_degree, int m_degree) const {
    auto it = terms_.find({x_degree, m_degree});
    return it == terms_.end() ? Rational(0) : it->second;
}

UniPoly BiPoly::x_coeff(int k) const {
    std::vector<Rational> c;
    for (auto it = terms_.lower_bound({k, 0}); it != terms_.end() && it->first.first == k; ++it) {
        const auto j = static_cast<size_t>(it->first.second);
        if (c.size() <= j) c.resize(j + 1);
        c[j] = it->second;
    }
    return UniPoly(std::move(c));
}

std::vector<UniPoly> BiPoly::x_coeffs() const {
    std::vector<UniPoly> out(static_cast<size_t>(x_degree() + 1));
    for (int k = 0; k <= x_degree(); ++k) out[static_cast<size_t>(k)] = x_coeff(k);
    return out;
}

UniPoly BiPoly::at_m(const Rational& mv) const {
    std::vector<Rational> c(static_cast<size_t>(x_degree() + 1));
    for (const auto& [e, v] : terms_) c[static_cast<size_t>(e.first)] += v * pow(mv, static_cast<unsigned>(e.second));
    return UniPoly(std::move(c));
}

Rational BiPoly::operator()(const Rational& xv, const Rational& mv) const {
    return at_m(mv)(xv);
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    for (const auto& [e, c] : terms_)
        if (e.first > 0) r.add_term({e.first - 1, e.second}, c * Rational(e.first));
    return r;
}

BiPoly BiPoly::dm() const {
    BiPoly r;
    for (const auto& [e, c] : terms_)
        if (e.second > 0) r.add_term({e.first, e.second - 1}, c * Rational(e.second));
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    BiPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
}

std::pair<BiPoly, BiPoly> BiPoly::divmod_x(const BiPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("bipoly_divmod: divisor is zero");
    const int dx_deg = divisor.x_degree();
    if (divisor.x_coeff(dx_deg) != UniPoly(1))
        throw std::invalid_argument("bipoly_divmod: divisor must be monic in x, leading x-coefficient is " +
                                    divisor.x_coeff(dx_deg).to_string("m"));
    std::vector<UniPoly> rem = x_coeffs();
    const std::vector<UniPoly> g = divisor.x_coeffs();
    const int f_deg = x_degree();
    std::vector<UniPoly> quot(static_cast<size_t>(std::max(f_deg - dx_deg + 1, 0)));
    for (int k = f_deg; k >= dx_deg; --k) {
        const UniPoly lead = rem[static_cast<size_t>(k)];
        if (lead.is_zero()) continue;
        const int shift = k - dx_deg;
        quot[static_cast<size_t>(shift)] = lead;
        for (int i = 0; i <= dx_deg; ++i) rem[static_cast<size_t>(i + shift)] -= lead * g[static_cast<size_t>(i)];
    }
    if (rem.size() > static_cast<size_t>(dx_deg)) rem.resize(static_cast<size_t>(std::max(dx_deg, 0)));
    return {from_x_coeffs(quot), from_x_coeffs(rem)};
}

BiPoly BiPoly::exact_div(const BiPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("BiPoly::exact_div: division by zero");
    // Lex order with x major: the map's last entry is the leading term.
    const auto [lead_e, lead_c] = *divisor.terms_.rbegin();
    BiPoly rem = *this;
    BiPoly quot;
    while (!rem.is_zero()) {
        const auto [e, c] = *rem.terms_.rbegin();
        if (e.first < lead_e.first || e.second < lead_e.second)
            throw std::domain_error("BiPoly::exact_div: divisor does not divide dividend");
        BiPoly t = term(c / lead_c, e.first - lead_e.first, e.second - lead_e.second);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = x_degree(); k >= 0; --k) {
        UniPoly c = x_coeff(k);
        if (c.is_zero()) continue;
        std::string xs = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (c.degree() == 0) {
            Rational v = c.coeff(0);
            if (!first) os << (v.sign() < 0 ? " - " : " + ");
            else if (v.sign() < 0) os << "-";
            Rational mag = v.abs();
            if (k == 0) os << mag;
            else if (mag == Rational(1)) os << xs;
            else os << mag << "*" << xs;
        } else {
            if (!first) os << " + ";
            os << "(" << c.to_string("m") << ")";
            if (k > 0) os << "*" << xs;
        }
        first = false;
    }
    return os.str();
}

}  // namespace fishcheck
