#pragma once

#include <stdexcept>
#include <vector>

#include "fishcheck/quad.hpp"
#include "fishcheck/rational.hpp"
#include "fishcheck/unipoly.hpp"

namespace fishcheck {

struct NoRealRoot : std::runtime_error {
    NoRealRoot() : std::runtime_error("no real root") {}
};

/// Closed rational interval [lo, hi]; lo == hi means the root is exact.
struct RootInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) * Rational(1, 2); }
    double approx() const { return midpoint().to_double(); }
    bool is_exact() const { return lo == hi; }
    bool disjoint_from(const RootInterval& o) const { return hi < o.lo || o.hi < lo; }
};

/// Canonical Sturm chain of the squarefree part of f.
class SturmSequence {
public:
    explicit SturmSequence(const UniPoly& f);

    const UniPoly& base() const { return chain_.front(); }
    const std::vector<UniPoly>& chain() const { return chain_; }

    int sign_changes_at(const Rational& t) const;
    int sign_changes_at(const QuadNum& t) const;
    int sign_changes_at_pos_inf() const;
    int sign_changes_at_neg_inf() const;

    /// Number of distinct real roots in the half-open interval (a, b].
    int count_roots(const Rational& a, const Rational& b) const;
    /// Number of distinct real roots in (a, +inf).
    int count_roots_above(const Rational& a) const;
    int count_roots_above(const QuadNum& a) const;
    int count_real_roots() const;

private:
    std::vector<UniPoly> chain_;
};

/// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const UniPoly& f);

/// Isolates the largest real root of f to width <= tol. The returned interval
/// contains exactly one root of the squarefree part. Throws NoRealRoot.
RootInterval sturm_largest_root(const UniPoly& f, const Rational& tol = Rational::inverse_power_of_ten(12));

/// One bisection step keeping the single root of `seq` inside `iv`.
RootInterval bisect_once(const SturmSequence& seq, const RootInterval& iv);

/// Bisects until width <= tol.
RootInterval refine(const SturmSequence& seq, RootInterval iv, const Rational& tol);

}  // namespace fishcheck
