#include <algorithm>
#include <stdexcept>

#include "fishcheck/verify.hpp"

namespace fishcheck {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

nlohmann::json CheckResult::to_json() const {
    nlohmann::json j;
    j["check-id"] = id;
    j["status"] = status_name(status);
    if (symbolic()) j["m-range"] = "symbolic";
    else j["m-range"] = {m_lo, m_hi};
    j["detail"] = detail;
    if (!label.empty()) j["label"] = label;
    if (counterexample_m) j["counterexample-m"] = *counterexample_m;
    if (!offending.empty()) j["offending"] = offending;
    return j;
}

bool any_failed(const std::vector<CheckResult>& rs) {
    return std::any_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

bool any_inconclusive(const std::vector<CheckResult>& rs) {
    return std::any_of(rs.begin(), rs.end(),
                       [](const CheckResult& r) { return r.status == CheckStatus::Inconclusive; });
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::Charpoly: return "charpoly";
        case Suite::Decomp: return "decomp";
        case Suite::Appendix: return "appendix";
        case Suite::Thresholds: return "thresholds";
        case Suite::Obstruction: return "obstruction";
        case Suite::All: return "all";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    for (Suite s : {Suite::Charpoly, Suite::Decomp, Suite::Appendix, Suite::Thresholds, Suite::Obstruction,
                    Suite::All})
        if (name == suite_name(s)) return s;
    throw std::invalid_argument("unknown suite '" + std::string(name) +
                                "' (expected charpoly|decomp|appendix|thresholds|obstruction|all)");
}

std::vector<CheckResult> run_suite(Suite s, int m_max) {
    if (m_max < 24) throw std::invalid_argument("m-max must be at least 24, got " + std::to_string(m_max));
    std::vector<CheckResult> out;
    auto take = [&out](std::vector<CheckResult> rs) {
        out.insert(out.end(), std::make_move_iterator(rs.begin()), std::make_move_iterator(rs.end()));
    };
    if (s == Suite::Charpoly || s == Suite::All) take(verify_charpoly_formulas());
    if (s == Suite::Decomp || s == Suite::All) take(verify_decompositions(m_max));
    if (s == Suite::Appendix || s == Suite::All) {
        take(verify_appendix_closed_forms());
        take(verify_appendix_positivity(m_max));
    }
    if (s == Suite::Thresholds || s == Suite::All) take(verify_threshold_inequalities(m_max));
    if (s == Suite::Obstruction || s == Suite::All) take(verify_obstruction_flip(10, m_max - m_max % 2));
    return out;
}

}  // namespace fishcheck
