#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fishcheck/bipoly.hpp"
#include "fishcheck/partition.hpp"
#include "fishcheck/quad.hpp"

namespace fishcheck {

enum class CheckStatus { Pass, Fail, Inconclusive };
const char* status_name(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    /// Even m covered; both 0 for identities that hold symbolically in m.
    int m_lo = 0;
    int m_hi = 0;
    /// Free-form tag, e.g. "expected-fail-below-24".
    std::string label;
    /// Set on failure: where it fails and the exact value there.
    std::optional<int> counterexample_m;
    std::string offending;

    bool symbolic() const { return m_lo == 0 && m_hi == 0; }
    nlohmann::json to_json() const;
};

bool any_failed(const std::vector<CheckResult>& rs);
bool any_inconclusive(const std::vector<CheckResult>& rs);

/// Symbolic char poly of `q` against `expected`, coefficient by coefficient.
CheckResult check_charpoly(const std::string& id, const SymbolicMatrix& q, const BiPoly& expected);

/// Char polys of the T, same, dist and mixed quotients.
std::vector<CheckResult> verify_charpoly_formulas();

/// f = q p_m + R as identities in Q[m][x], then for every even m in
/// [18, m_max] a Sturm certificate that q >= 0 and R > 0 on [L_m, inf).
std::vector<CheckResult> verify_decompositions(int m_max = 500);

std::vector<CheckResult> verify_appendix_closed_forms();

/// Exact sign of every quantity the monotonicity arguments rely on, at each
/// even m in [18, m_max].
std::vector<CheckResult> verify_appendix_positivity(int m_max = 500);

std::vector<CheckResult> verify_threshold_inequalities(int m_max = 500);

/// rho(T_m) against rho'(m) by refining disjoint isolating intervals.
std::vector<CheckResult> verify_obstruction_flip(int m_lo, int m_hi);

enum class Suite { Charpoly, Decomp, Appendix, Thresholds, Obstruction, All };
const char* suite_name(Suite s);
/// charpoly | decomp | appendix | thresholds | obstruction | all
Suite parse_suite(std::string_view name);
std::vector<CheckResult> run_suite(Suite s, int m_max = 500);

}  // namespace fishcheck
