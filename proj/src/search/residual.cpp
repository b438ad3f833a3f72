#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fishcheck/canonical.hpp"
#include "fishcheck/search.hpp"

namespace fishcheck {

namespace {

constexpr int kAPlus = 4;
constexpr int kMaxAPlusEdges = 3;

int count_attached(const std::vector<int>& a) {
    return static_cast<int>(std::count_if(a.begin(), a.end(), [](int v) { return v >= 0; }));
}

// Restricted growth strings: every set partition of `k` items, labels 0..
void set_partitions(int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> label(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == k) {
            fn(label);
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            label[static_cast<size_t>(i)] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

// Otherwise that component of G[W] never reaches u*.
bool every_component_attached(const Graph& wg, const std::vector<int>& status) {
    const int n = wg.order();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        bool attached = false;
        std::vector<int> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            attached = attached || status[static_cast<size_t>(v)] != 0;
            for (int w : wg.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        if (!attached) return false;
    }
    return true;
}

}  // namespace

int ResidualConfig::aplus_edges() const { return count_attached(aplus_attach); }
int ResidualConfig::a0_edges() const { return count_attached(a0_attach); }

int ResidualConfig::special_count() const {
    int mx = -1;
    for (int s : a0_attach) mx = std::max(mx, s);
    return mx + 1;
}

int ResidualConfig::edge_budget() const {
    const int a0 = special_count() + leaf_count;
    return 4 + a0 + 6 + aplus_edges() + a0_edges() + w_edges();
}

std::string ResidualConfig::to_string() const {
    std::ostringstream os;
    os << "W=";
    bool first = true;
    for (auto [a, b] : w_graph.edges()) {
        os << (first ? "" : ",") << a << "-" << b;
        first = false;
    }
    os << " A+=[";
    for (size_t i = 0; i < aplus_attach.size(); ++i) os << (i ? "," : "") << aplus_attach[i];
    os << "] A0=[";
    for (size_t i = 0; i < a0_attach.size(); ++i) os << (i ? "," : "") << a0_attach[i];
    os << "] leaves=" << leaf_count;
    return os.str();
}

nlohmann::json ResidualConfig::to_json() const {
    nlohmann::json j;
    j["w-order"] = w_graph.order();
    j["w-edges"] = w_graph.edges();
    j["aplus-attach"] = aplus_attach;
    j["a0-attach"] = a0_attach;
    j["special-a0"] = special_count();
    j["leaves"] = leaf_count;
    return j;
}

std::vector<Graph> enumerate_w_graphs(int e_w) {
    if (e_w < 1 || e_w > 4) throw std::invalid_argument("enumerate_w_graphs: e_w must be in 1..4");
    std::map<std::pair<int, std::string>, Graph> classes;
    for (int n = 2; n <= 2 * e_w; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        // every e_w-subset of the pairs
        std::vector<int> pick(static_cast<size_t>(e_w));
        std::function<void(int, int)> rec = [&](int depth, int start) {
            if (depth == e_w) {
                Graph g(n);
                for (int k : pick) g.add_edge(pairs[static_cast<size_t>(k)].first, pairs[static_cast<size_t>(k)].second);
                for (int v = 0; v < n; ++v)
                    if (g.degree(v) == 0) return;
                const std::string key = canonical_string(g);
                classes.try_emplace({n, key}, canonical_form(g));
                return;
            }
            for (int k = start; k < static_cast<int>(pairs.size()); ++k) {
                pick[static_cast<size_t>(depth)] = k;
                rec(depth + 1, k + 1);
            }
        };
        rec(0, 0);
    }
    std::vector<Graph> out;
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

int independence_number(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("independence_number: graph too large for brute force");
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        const int size = __builtin_popcountl(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if ((mask >> a) & 1ul)
                for (int b = a + 1; b < n && ok; ++b)
                    if (((mask >> b) & 1ul) && g.has_edge(a, b)) ok = false;
        if (ok) best = size;
    }
    return best;
}

Graph realize(const ResidualConfig& c) {
    const int nw = c.w_graph.order();
    if (static_cast<int>(c.aplus_attach.size()) != nw || static_cast<int>(c.a0_attach.size()) != nw)
        throw std::invalid_argument("realize: attachment vectors must have one entry per W vertex");
    if (c.leaf_count < 0) throw std::invalid_argument("realize: negative leaf count");
    const int spec = c.special_count();
    const int w0 = 1 + kAPlus + spec;
    const int n = w0 + nw + c.leaf_count;
    Graph g(n);
    g.set_role(0, Role::Apex);
    for (int i = 1; i <= kAPlus; ++i) {
        g.add_edge(0, i);
        g.set_role(i, Role::APlus);
        for (int j = i + 1; j <= kAPlus; ++j) g.add_edge(i, j);
    }
    for (int k = 0; k < spec; ++k) {
        g.add_edge(0, 1 + kAPlus + k);
        g.set_role(1 + kAPlus + k, Role::A0Special);
    }
    for (int w = 0; w < nw; ++w) {
        g.set_role(w0 + w, Role::W);
        const int ap = c.aplus_attach[static_cast<size_t>(w)];
        const int a0 = c.a0_attach[static_cast<size_t>(w)];
        if (ap >= kAPlus) throw std::invalid_argument("realize: A+ attachment out of range");
        if (ap >= 0) g.add_edge(1 + ap, w0 + w);
        if (a0 >= 0) g.add_edge(1 + kAPlus + a0, w0 + w);
    }
    for (auto [a, b] : c.w_graph.edges()) g.add_edge(w0 + a, w0 + b);
    for (int l = 0; l < c.leaf_count; ++l) {
        g.add_edge(0, w0 + nw + l);
        g.set_role(w0 + nw + l, Role::A0Leaf);
    }
    return g;
}

std::optional<std::string> residual_violation(const Graph& g, int m) {
    auto fail = [](std::string s) { return std::optional<std::string>(std::move(s)); };
    if (g.edge_count() != m) return fail("has " + std::to_string(g.edge_count()) + " edges, expected " + std::to_string(m));
    if (!g.is_connected()) return fail("not connected");
    const auto apex = g.vertices_with_role(Role::Apex);
    const auto aplus = g.vertices_with_role(Role::APlus);
    const auto special = g.vertices_with_role(Role::A0Special);
    const auto leaves = g.vertices_with_role(Role::A0Leaf);
    const auto w = g.vertices_with_role(Role::W);
    if (apex.size() != 1) return fail("expected exactly one apex");
    const int u = apex.front();
    if (aplus.size() != static_cast<size_t>(kAPlus)) return fail("A+ must have 4 vertices");
    for (size_t i = 0; i < aplus.size(); ++i) {
        if (!g.has_edge(u, aplus[i])) return fail("A+ vertex not adjacent to u*");
        for (size_t j = i + 1; j < aplus.size(); ++j)
            if (!g.has_edge(aplus[i], aplus[j])) return fail("A+ does not induce K4");
    }
    auto role_count = [&g](int v, Role r) {
        int k = 0;
        for (int x : g.neighbors(v))
            if (g.role(x) == r) ++k;
        return k;
    };
    for (int s : special) {
        if (!g.has_edge(u, s)) return fail("special A0 vertex not adjacent to u*");
        if (g.degree(s) != 1 + role_count(s, Role::W)) return fail("special A0 vertex adjacent outside u* and W");
        if (role_count(s, Role::W) == 0) return fail("special A0 vertex without W neighbour");
    }
    for (int l : leaves)
        if (g.degree(l) != 1 || !g.has_edge(u, l)) return fail("leaf is not pendant on u*");
    std::set<int> attached_plus;
    int e_aplus_w = 0, e_w = 0;
    for (int x : w) {
        if (g.has_edge(u, x)) return fail("W vertex adjacent to u*");
        if (g.degree(x) < 2) return fail("W vertex of degree < 2");
        const int dp = role_count(x, Role::APlus), d0 = role_count(x, Role::A0Special);
        if (dp > 1 || d0 > 1) return fail("W vertex with two attachments on one side");
        if (dp && d0) return fail("W vertex attached to both A+ and A0");
        if (role_count(x, Role::W) == 0) return fail("isolated vertex in G[W]");
        if (dp) attached_plus.insert(x);
        e_aplus_w += dp;
        e_w += role_count(x, Role::W);
    }
    e_w /= 2;
    if (e_w != 2 && e_w != 3) return fail("e(W) = " + std::to_string(e_w));
    for (int a : attached_plus)
        for (int b : attached_plus)
            if (a < b && g.has_edge(a, b)) return fail("A+-attached W vertices are adjacent");
    if (e_aplus_w != static_cast<int>(attached_plus.size())) return fail("e(A+,W) differs from |U|");
    if (e_aplus_w > kMaxAPlusEdges) return fail("e(A+,W) > 3");
    return std::nullopt;
}

void for_each_residual(int m, const std::function<void(const ResidualConfig&, const Graph&)>& fn) {
    if (m % 2 != 0) return;
    for (int e_w : {2, 3}) {
        for (const Graph& wg : enumerate_w_graphs(e_w)) {
            const int nw = wg.order();
            int combos = 1;
            for (int i = 0; i < nw; ++i) combos *= 3;
            // status per W vertex: 0 none, 1 A+, 2 A0
            for (int code = 0; code < combos; ++code) {
                std::vector<int> status(static_cast<size_t>(nw));
                for (int i = 0, c = code; i < nw; ++i, c /= 3) status[static_cast<size_t>(i)] = c % 3;
                bool ok = true;
                for (int i = 0; i < nw && ok; ++i)
                    if (wg.degree(i) == 1 && status[static_cast<size_t>(i)] == 0) ok = false;
                std::vector<int> u, z;
                for (int i = 0; i < nw; ++i) {
                    if (status[static_cast<size_t>(i)] == 1) u.push_back(i);
                    if (status[static_cast<size_t>(i)] == 2) z.push_back(i);
                }
                if (ok && !every_component_attached(wg, status)) ok = false;
                for (size_t a = 0; a < u.size() && ok; ++a)
                    for (size_t b = a + 1; b < u.size() && ok; ++b)
                        if (wg.has_edge(u[a], u[b])) ok = false;
                if (!ok || static_cast<int>(u.size()) > kMaxAPlusEdges) continue;

                set_partitions(static_cast<int>(u.size()), [&](const std::vector<int>& pu) {
                    set_partitions(static_cast<int>(z.size()), [&](const std::vector<int>& pz) {
                        ResidualConfig c;
                        c.w_graph = wg;
                        c.aplus_attach.assign(static_cast<size_t>(nw), -1);
                        c.a0_attach.assign(static_cast<size_t>(nw), -1);
                        for (size_t k = 0; k < u.size(); ++k) c.aplus_attach[static_cast<size_t>(u[k])] = pu[k];
                        for (size_t k = 0; k < z.size(); ++k) c.a0_attach[static_cast<size_t>(z[k])] = pz[k];
                        c.leaf_count = 0;
                        const int leaves = m - c.edge_budget();
                        if (leaves < 0) return;
                        c.leaf_count = leaves;
                        fn(c, realize(c));
                    });
                });
            }
        }
    }
}

std::vector<std::pair<ResidualConfig, Graph>> enumerate_residual(int m) {
    std::vector<std::pair<ResidualConfig, Graph>> out;
    for_each_residual(m, [&out](const ResidualConfig& c, const Graph& g) { out.emplace_back(c, g); });
    return out;
}

}  // namespace fishcheck
