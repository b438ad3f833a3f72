#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "fishcheck/families.hpp"
#include "fishcheck/formulas.hpp"
#include "fishcheck/verify.hpp"

using namespace fishcheck;

namespace {

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& id) {
    auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.id == id; });
    REQUIRE_MESSAGE(it != rs.end(), "missing check " << id);
    return *it;
}

// Stated values that exact evaluation contradicts; each must fail at m = 18.
const std::vector<std::string> kErrata = {"appendix.mixed.R-at-L.m18", "appendix.mixed.R-dxx-at-L.numerator-1"};

bool is_erratum(const std::string& id) { return std::find(kErrata.begin(), kErrata.end(), id) != kErrata.end(); }

void require_all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
        if (is_erratum(r.id)) continue;
        INFO(r.id << ": " << r.detail << " " << r.offending);
        CHECK(r.status == CheckStatus::Pass);
    }
}

}  // namespace

TEST_CASE("charpoly formulas") {
    const auto rs = verify_charpoly_formulas();
    CHECK(rs.size() == 5);
    require_all_pass(rs);
    CHECK(find(rs, "charpoly.dist").detail.find("m") != std::string::npos);
}

TEST_CASE("perturbed Q_T is rejected") {
    SymbolicMatrix q = family_quotient_symbolic(Family::T);
    q[1][1] = q[1][1] + UniPoly(1);  // 3 -> 4 inside the K4 block
    const CheckResult r = check_charpoly("charpoly.t.perturbed", q, formulas::q_t());
    CHECK(r.status == CheckStatus::Fail);
    REQUIRE(r.counterexample_m.has_value());
    CHECK(*r.counterexample_m >= 6);
    CHECK(r.detail.find("coefficient of x^") != std::string::npos);
    CHECK_FALSE(r.offending.empty());
    const auto j = r.to_json();
    CHECK(j["status"] == "fail");
    CHECK(j.contains("counterexample-m"));
}

TEST_CASE("decompositions") {
    const auto rs = verify_decompositions(200);
    require_all_pass(rs);
    CHECK(find(rs, "decomp.same").detail.find("x - 4") != std::string::npos);
    CHECK(find(rs, "decomp.mixed.certificate").m_hi == 200);
}

TEST_CASE("appendix closed forms") {
    const auto rs = verify_appendix_closed_forms();
    CHECK(rs.size() >= 28);
    require_all_pass(rs);
    const CheckResult& mix18 = find(rs, "appendix.mixed.R-at-L.m18");
    CHECK(mix18.status == CheckStatus::Fail);
    CHECK(mix18.label == "erratum");
    CHECK(mix18.counterexample_m == 18);
    CHECK(mix18.offending == "-999/4 + 1551/4*sqrt(67)");
    CHECK(find(rs, "appendix.mixed.R-at-L").status == CheckStatus::Pass);
    CHECK(find(rs, "appendix.dist.R-dx-at-L.m18").detail.find("452") != std::string::npos);
}

TEST_CASE("appendix positivity") {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rs = verify_appendix_positivity(500);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require_all_pass(rs);
    CHECK(secs < 60.0);
    CHECK(find(rs, "appendix.t.q-at-L.sign").m_lo == 18);
    CHECK(find(rs, "appendix.mixed.R-dxx.slope").status == CheckStatus::Pass);
    const CheckResult& num = find(rs, "appendix.mixed.R-dxx-at-L.numerator-1");
    CHECK(num.status == CheckStatus::Fail);
    CHECK(num.counterexample_m == 18);
    CHECK(num.offending.rfind("-50", 0) == 0);
    CHECK(find(rs, "appendix.mixed.R-dxx-at-L.sign").status == CheckStatus::Pass);
    // from m = 20 on the bound does hold
    for (long m = 20; m <= 500; m += 2) CHECK(4 * m * m - 73 * m - 32 > 0);
    CHECK_THROWS_AS(verify_appendix_positivity(16), std::invalid_argument);
}

TEST_CASE("threshold inequalities") {
    const auto rs = verify_threshold_inequalities(500);
    require_all_pass(rs);
    const CheckResult& m22 = find(rs, "threshold.k4.gt18.m22");
    CHECK(m22.label == "expected-fail-below-24");
    CHECK(find(rs, "threshold.k4.gt18").m_lo == 24);
    CHECK(find(rs, "threshold.pm-at-L.negative").m_lo == 6);
    CHECK(find(rs, "threshold.identity.L2-L/2").symbolic());
}

TEST_CASE("obstruction flip") {
    const auto rs = verify_obstruction_flip(10, 60);
    CHECK(rs.size() == 26);
    require_all_pass(rs);
    CHECK(find(rs, "obstruction.t.m10").detail.rfind("above", 0) == 0);
    CHECK(find(rs, "obstruction.t.m16").detail.rfind("above", 0) == 0);
    CHECK(find(rs, "obstruction.t.m18").detail.rfind("below", 0) == 0);
    CHECK_THROWS_AS(verify_obstruction_flip(8, 20), std::invalid_argument);
}

TEST_CASE("suites") {
    CHECK(parse_suite("appendix") == Suite::Appendix);
    CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
    const auto all = run_suite(Suite::All, 100);
    CHECK_FALSE(any_inconclusive(all));
    std::vector<std::string> failed;
    for (const auto& r : all)
        if (r.status == CheckStatus::Fail) failed.push_back(r.id);
    CHECK(failed == kErrata);
    CHECK(all.size() > 100);
    CHECK_THROWS_AS(run_suite(Suite::All, 20), std::invalid_argument);
}
