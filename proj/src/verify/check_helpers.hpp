#pragma once

#include <string>

#include "fishcheck/bipoly.hpp"
#include "fishcheck/quad.hpp"
#include "fishcheck/verify.hpp"

namespace fishcheck::detail {

enum class Want { Positive, NonNegative, Negative };

std::string approx_string(double v);
/// "a + b*sqrt(d) (~ 1.2345)"
std::string describe(const QuadNum& v);

/// First even m >= from at which `diff` does not vanish identically in x.
int first_nonzero_m(const BiPoly& diff, int from);

CheckResult bipoly_identity(const std::string& id, const BiPoly& computed, const BiPoly& expected, int probe_from = 6);

/// computed == expected in Q(m)(s).
CheckResult quad_identity(const std::string& id, const QuadElem& computed, const QuadElem& expected,
                          int probe_from = 18);

/// Exact value of `e` at a fixed m against a stated value.
CheckResult quad_value(const std::string& id, const QuadElem& e, int m, const QuadNum& expected);

/// Sign of `e` at every even m in [lo, hi].
CheckResult sign_sweep(const std::string& id, const std::string& what, const QuadElem& e, Want want, int lo, int hi);

}  // namespace fishcheck::detail
