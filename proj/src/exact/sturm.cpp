#include "fishcheck/sturm.hpp"

#include <algorithm>

namespace fishcheck {

namespace {

template <class SignFn>
int count_changes(const std::vector<UniPoly>& chain, SignFn sign_of) {
    int changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_of(p);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
    UniPoly p0 = squarefree_part(f);
    chain_.push_back(p0);
    if (p0.degree() <= 0) return;
    chain_.push_back(p0.derivative());
    while (true) {
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        UniPoly r = a.divmod(b).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps the sign pattern and curbs coefficient growth.
        UniPoly next = r.primitive();
        if (r.leading().sign() > 0) next = -next;
        chain_.push_back(std::move(next));
    }
}

int SturmSequence::sign_changes_at(const Rational& t) const {
    return count_changes(chain_, [&](const UniPoly& p) { return p(t).sign(); });
}

int SturmSequence::sign_changes_at(const QuadNum& t) const {
    return count_changes(chain_, [&](const UniPoly& p) { return quad_eval(p, t).sign(); });
}

int SturmSequence::sign_changes_at_pos_inf() const {
    return count_changes(chain_, [](const UniPoly& p) { return p.leading().sign(); });
}

int SturmSequence::sign_changes_at_neg_inf() const {
    return count_changes(chain_, [](const UniPoly& p) {
        const int s = p.leading().sign();
        return (p.degree() % 2 == 0) ? s : -s;
    });
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return sign_changes_at(a) - sign_changes_at(b);
}

int SturmSequence::count_roots_above(const Rational& a) const {
    return sign_changes_at(a) - sign_changes_at_pos_inf();
}

int SturmSequence::count_roots_above(const QuadNum& a) const {
    return sign_changes_at(a) - sign_changes_at_pos_inf();
}

int SturmSequence::count_real_roots() const {
    return sign_changes_at_neg_inf() - sign_changes_at_pos_inf();
}

Rational root_bound(const UniPoly& f) {
    if (f.degree() <= 0) return Rational(1);
    Rational max_ratio(0);
    const Rational lead = f.leading().abs();
    for (int i = 0; i < f.degree(); ++i) max_ratio = std::max(max_ratio, f.coeff(i).abs() / lead);
    return Rational(1) + max_ratio;
}

RootInterval bisect_once(const SturmSequence& seq, const RootInterval& iv) {
    if (iv.is_exact()) return iv;
    const Rational mid = iv.midpoint();
    if (seq.base()(mid).is_zero()) {
        // mid is a root; it is the isolated one unless (mid, hi] still holds it.
        if (seq.count_roots(mid, iv.hi) == 0) return {mid, mid};
        return {mid, iv.hi};
    }
    if (seq.count_roots(mid, iv.hi) >= 1) return {mid, iv.hi};
    return {iv.lo, mid};
}

RootInterval refine(const SturmSequence& seq, RootInterval iv, const Rational& tol) {
    while (iv.width() > tol || (!iv.is_exact() && seq.base()(iv.lo).is_zero())) iv = bisect_once(seq, iv);
    return iv;
}

RootInterval sturm_largest_root(const UniPoly& f, const Rational& tol) {
    if (tol.sign() <= 0) throw std::invalid_argument("sturm_largest_root: tolerance must be positive");
    const SturmSequence seq(f);
    if (seq.count_real_roots() == 0) throw NoRealRoot();
    const Rational bound = root_bound(seq.base());
    RootInterval iv{-bound, bound};
    // Narrow to an interval holding only the largest root.
    while (!iv.is_exact() && seq.count_roots(iv.lo, iv.hi) > 1) iv = bisect_once(seq, iv);
    return refine(seq, iv, tol);
}

}  // namespace fishcheck
