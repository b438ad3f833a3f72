#include "fishcheck/graph.hpp"

#include <bit>
#include <stdexcept>

namespace fishcheck {

const char* role_name(Role r) {
    switch (r) {
        case Role::Apex: return "apex";
        case Role::APlus: return "a_plus";
        case Role::A0Special: return "a0_special";
        case Role::A0Leaf: return "a0_leaf";
        case Role::W: return "w";
        case Role::Unlabeled: break;
    }
    return "unlabeled";
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    words_ = (static_cast<size_t>(n) + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
    roles_.assign(static_cast<size_t>(n), Role::Unlabeled);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(u));
    if (has_edge(u, v)) return;
    bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<size_t>(v) * words_ + static_cast<size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<size_t>(v) * words_ + static_cast<size_t>(u) / 64] &= ~(std::uint64_t{1} << (u % 64));
    --edges_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] >> (v % 64)) & 1u;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    auto r = row(v);
    for (size_t w = 0; w < r.size(); ++w) {
        std::uint64_t word = r[w];
        while (word) {
            out.push_back(static_cast<int>(w * 64) + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::set_role(int v, Role r) {
    check_vertex(v);
    roles_[static_cast<size_t>(v)] = r;
}

std::vector<int> Graph::vertices_with_role(Role r) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (roles_[static_cast<size_t>(v)] == r) out.push_back(v);
    return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("Graph::relabeled: permutation size mismatch");
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    for (int v = 0; v < n_; ++v) g.roles_[static_cast<size_t>(perm[static_cast<size_t>(v)])] = roles_[static_cast<size_t>(v)];
    return g;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : neighbors(u)) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

std::string Graph::adjacency_string() const {
    std::string s;
    s.reserve(static_cast<size_t>(n_) * static_cast<size_t>(n_ > 0 ? n_ - 1 : 0) / 2);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) s.push_back(has_edge(i, j) ? '1' : '0');
    return s;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph h43_pattern() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 0}});
}

}  // namespace fishcheck
