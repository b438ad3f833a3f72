#include "fishcheck/graph_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace fishcheck {

namespace {

void append_size(std::string& out, int n) {
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < 258048) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("to_graph6: graph too large");
    }
}

int sextet(char c) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
    return c - 63;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    const int n = g.order();
    append_size(out, n);
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    size_t pos = 0;
    int n = 0;
    if (text[0] == 126) {
        if (text.size() < 4 || text[1] == 126) throw std::invalid_argument("graph6: unsupported size prefix");
        for (size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(text[k]);
        pos = 4;
    } else {
        n = sextet(text[0]);
        pos = 1;
    }
    const size_t bits = static_cast<size_t>(n) * static_cast<size_t>(n > 0 ? n - 1 : 0) / 2;
    const size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                                    std::to_string(text.size() - pos));
    Graph g(n);
    size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json adj = nlohmann::json::array();
    nlohmann::json roles = nlohmann::json::array();
    for (int v = 0; v < g.order(); ++v) {
        adj.push_back(g.neighbors(v));
        roles.push_back(role_name(g.role(v)));
    }
    return {{"n", g.order()}, {"edges", g.edge_count()}, {"adjacency", adj}, {"roles", roles}};
}

Graph graph_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    Graph g(n);
    const auto& adj = j.at("adjacency");
    if (static_cast<int>(adj.size()) != n) throw std::invalid_argument("graph json: adjacency length differs from n");
    for (int v = 0; v < n; ++v) {
        for (int w : adj[static_cast<size_t>(v)].get<std::vector<int>>()) {
            if (w < 0 || w >= n) throw std::invalid_argument("graph json: neighbour out of range");
            const auto back = adj[static_cast<size_t>(w)].get<std::vector<int>>();
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw std::invalid_argument("graph json: adjacency is not symmetric");
            g.add_edge(v, w);
        }
    }
    if (j.contains("roles")) {
        const auto& roles = j.at("roles");
        for (int v = 0; v < n && v < static_cast<int>(roles.size()); ++v) {
            const auto name = roles[static_cast<size_t>(v)].get<std::string>();
            for (Role r : {Role::Unlabeled, Role::Apex, Role::APlus, Role::A0Special, Role::A0Leaf, Role::W})
                if (name == role_name(r)) g.set_role(v, r);
        }
    }
    return g;
}

}  // namespace fishcheck
