#include <doctest.h>

#include <random>
#include <set>

#include "fishcheck/families.hpp"
#include "fishcheck/h43.hpp"
#include "test_support.hpp"

using namespace fishcheck;
using namespace fishcheck::testing;

namespace {

bool valid_witness(const Graph& g, const H43Witness& w) {
    const auto& t = w.triangle;
    const auto& c = w.cycle;
    if (t[0] != w.shared || c[0] != w.shared) return false;
    if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2])) return false;
    for (size_t i = 0; i < 4; ++i)
        if (!g.has_edge(c[i], c[(i + 1) % 4])) return false;
    std::set<int> all(t.begin(), t.end());
    all.insert(c.begin(), c.end());
    return all.size() == 6;
}

}  // namespace

TEST_CASE("contains_h43 examples") {
    CHECK(contains_h43(h43_pattern()));
    CHECK_FALSE(contains_h43(complete_graph(5)));
    CHECK_FALSE(contains_h43(build_t(18)));
    CHECK_FALSE(contains_h43(build_s_minus(18)));
    CHECK(contains_h43(complete_graph(6)));
}

TEST_CASE("oracle examples") {
    CHECK_FALSE(brute_force_h43_oracle(cycle_graph(4)));
    CHECK_FALSE(brute_force_h43_oracle(complete_graph(4)));
    CHECK(brute_force_h43_oracle(h43_pattern()));
    CHECK_FALSE(brute_force_h43_oracle(complete_graph(5)));
    CHECK_FALSE(brute_force_h43_oracle(build_s_minus(18)));
}

TEST_CASE("detector agrees with the oracle on every graph with at most 6 vertices") {
    long positives = 0;
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (unsigned long mask = 0; mask < (1ul << pairs); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const auto w = find_h43(g);
            const bool oracle = brute_force_h43_oracle(g);
            REQUIRE(w.has_value() == oracle);
            if (w) {
                CHECK(valid_witness(g, *w));
                ++positives;
            }
        }
    }
    CHECK(positives > 0);
}

TEST_CASE("detector agrees with the oracle on random graphs") {
    std::mt19937 rng(42);
    int pos = 0, neg = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 6 + trial % 7;
        const double p = 0.1 + 0.05 * (trial % 8);
        const Graph g = random_graph(rng, n, p);
        const auto w = find_h43(g);
        REQUIRE(w.has_value() == brute_force_h43_oracle(g));
        if (w) {
            CHECK(valid_witness(g, *w));
            ++pos;
        } else {
            ++neg;
        }
    }
    CHECK(pos > 100);
    CHECK(neg > 100);
}

TEST_CASE("containing H(4,3) is monotone under edge addition") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 6 + trial % 10;
        Graph g = random_graph(rng, n, 0.25);
        bool had = contains_h43(g);
        for (int step = 0; step < 6; ++step) {
            std::uniform_int_distribution<int> pick(0, n - 1);
            const int a = pick(rng), b = pick(rng);
            if (a == b) continue;
            g.add_edge(a, b);
            const bool now = contains_h43(g);
            CHECK((!had || now));
            had = now;
        }
    }
}

TEST_CASE("families are H(4,3)-free") {
    for (Family f : {Family::SMinus, Family::T, Family::Same, Family::Dist, Family::Mixed})
        for (int m = family_min_m(f); m <= 30; m += 2) {
            const Graph g = build_family(f, m);
            CHECK_FALSE(contains_h43(g));
            if (g.order() <= 14) CHECK_FALSE(brute_force_h43_oracle(g));
        }
}

TEST_CASE("witness string") {
    const auto w = find_h43(h43_pattern());
    REQUIRE(w);
    CHECK(w->shared == 0);
    CHECK_FALSE(w->to_string().empty());
}
