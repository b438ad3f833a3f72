#include "fishcheck/families.hpp"

#include <numeric>
#include <stdexcept>

namespace fishcheck {

namespace {

void require_even(int m, int min_m, const char* what) {
    if (m % 2 != 0) throw std::invalid_argument(std::string(what) + ": m must be even, got " + std::to_string(m));
    if (m < min_m)
        throw std::invalid_argument(std::string(what) + ": requires m >= " + std::to_string(min_m) + ", got " +
                                    std::to_string(m));
}

std::vector<int> range(int first, int last) {
    std::vector<int> v;
    for (int i = first; i < last; ++i) v.push_back(i);
    return v;
}

// u* = 0 joined to a K4 on 1..4.
void add_core(Graph& g) {
    g.set_role(0, Role::Apex);
    for (int a = 1; a <= 4; ++a) {
        g.set_role(a, Role::APlus);
        g.add_edge(0, a);
        for (int b = a + 1; b <= 4; ++b) g.add_edge(a, b);
    }
}

void add_leaves(Graph& g, int first) {
    for (int v = first; v < g.order(); ++v) {
        g.set_role(v, Role::A0Leaf);
        g.add_edge(0, v);
    }
}

Partition make_partition(std::vector<std::vector<int>> blocks, int n) {
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    return Partition(std::move(blocks), n);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::SMinus: return "s-minus";
        case Family::T: return "t";
        case Family::Same: return "same";
        case Family::Dist: return "dist";
        case Family::Mixed: return "mixed";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::SMinus, Family::T, Family::Same, Family::Dist, Family::Mixed})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected s-minus|t|same|dist|mixed)");
}

int family_min_m(Family f) {
    switch (f) {
        case Family::SMinus: return 6;
        case Family::T: return 10;
        case Family::Same: return 14;
        case Family::Dist: return 16;
        case Family::Mixed: return 14;
    }
    return 0;
}

Graph build_s_minus(int m) {
    require_even(m, 6, "build_s_minus");
    const int n = (m + 4) / 2;
    Graph g(n);
    // 0 = u*, 1 = v, 2..n-2 adjacent to both, n-1 adjacent to u* only.
    g.set_role(0, Role::Apex);
    g.set_role(1, Role::APlus);
    g.add_edge(0, 1);
    for (int w = 2; w < n; ++w) {
        g.add_edge(0, w);
        if (w != n - 1) {
            g.add_edge(1, w);
            g.set_role(w, Role::APlus);
        } else {
            g.set_role(w, Role::A0Leaf);
        }
    }
    return g;
}

Graph build_t(int m) {
    require_even(m, 10, "build_t");
    Graph g(m - 5);
    add_core(g);
    add_leaves(g, 5);
    return g;
}

Graph build_ew1_family(Ew1Kind kind, int m) {
    switch (kind) {
        case Ew1Kind::Same: {
            require_even(m, 14, "build_ew1_family(same)");
            Graph g(8 + (m - 14));
            add_core(g);
            g.set_role(5, Role::A0Special);
            g.set_role(6, Role::W);
            g.set_role(7, Role::W);
            g.add_edge(0, 5);
            g.add_edge(5, 6);
            g.add_edge(5, 7);
            g.add_edge(6, 7);
            add_leaves(g, 8);
            return g;
        }
        case Ew1Kind::Distinct: {
            require_even(m, 16, "build_ew1_family(distinct)");
            Graph g(9 + (m - 15));
            add_core(g);
            g.set_role(5, Role::A0Special);
            g.set_role(6, Role::A0Special);
            g.set_role(7, Role::W);
            g.set_role(8, Role::W);
            g.add_edge(0, 5);
            g.add_edge(0, 6);
            g.add_edge(5, 7);
            g.add_edge(6, 8);
            g.add_edge(7, 8);
            add_leaves(g, 9);
            return g;
        }
        case Ew1Kind::Mixed: {
            require_even(m, 14, "build_ew1_family(mixed)");
            Graph g(8 + (m - 14));
            add_core(g);
            g.set_role(5, Role::A0Special);
            g.set_role(6, Role::W);
            g.set_role(7, Role::W);
            g.add_edge(1, 6);
            g.add_edge(0, 5);
            g.add_edge(5, 7);
            g.add_edge(6, 7);
            add_leaves(g, 8);
            return g;
        }
    }
    throw std::invalid_argument("build_ew1_family: unknown kind");
}

Graph build_family(Family f, int m) {
    switch (f) {
        case Family::SMinus: return build_s_minus(m);
        case Family::T: return build_t(m);
        case Family::Same: return build_ew1_family(Ew1Kind::Same, m);
        case Family::Dist: return build_ew1_family(Ew1Kind::Distinct, m);
        case Family::Mixed: return build_ew1_family(Ew1Kind::Mixed, m);
    }
    throw std::invalid_argument("build_family: unknown family");
}

Partition family_partition(Family f, int m) {
    const Graph g = build_family(f, m);
    const int n = g.order();
    switch (f) {
        case Family::SMinus: return make_partition({{0}, {1}, range(2, n - 1), {n - 1}}, n);
        case Family::T: return make_partition({{0}, range(1, 5), range(5, n)}, n);
        case Family::Same: return make_partition({{0}, range(1, 5), {5}, {6, 7}, range(8, n)}, n);
        case Family::Dist: return make_partition({{0}, range(1, 5), {5, 6}, {7, 8}, range(9, n)}, n);
        case Family::Mixed:
            return make_partition({{0}, {1}, {2, 3, 4}, {5}, {6}, {7}, range(8, n)}, n);
    }
    throw std::invalid_argument("family_partition: unknown family");
}

SymbolicMatrix family_quotient_symbolic(Family f) {
    // Sample where every block is nonempty, then interpolate the affine entries.
    const int m0 = family_min_m(f) + 2;
    const int m1 = m0 + 2;
    const QuotientMatrix q0 = quotient(build_family(f, m0), family_partition(f, m0));
    const QuotientMatrix q1 = quotient(build_family(f, m1), family_partition(f, m1));
    if (q0.size() != q1.size()) throw std::logic_error("family_quotient_symbolic: block count changed with m");
    SymbolicMatrix s(q0.size());
    const Rational step(m1 - m0);
    for (size_t i = 0; i < q0.size(); ++i) {
        for (size_t j = 0; j < q0.size(); ++j) {
            const Rational slope = (q1[i][j] - q0[i][j]) / step;
            s[i].push_back(UniPoly({q0[i][j] - slope * Rational(m0), slope}));
        }
    }
    const int m2 = m1 + 6;
    if (at_m(s, Rational(m2)) != quotient(build_family(f, m2), family_partition(f, m2)))
        throw std::logic_error("family_quotient_symbolic: quotient entries are not affine in m");
    return s;
}

}  // namespace fishcheck
