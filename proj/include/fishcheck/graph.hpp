#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fishcheck {

/// Structural role of a vertex relative to the Perron-maximal vertex u*.
enum class Role : std::uint8_t {
    Unlabeled,
    Apex,       // u*
    APlus,      // neighbours of u* with a neighbour inside N(u*)
    A0Special,  // neighbours of u* isolated inside N(u*) but adjacent to W
    A0Leaf,     // pendant vertices hanging off u*
    W,          // vertices at distance two from u*
};

const char* role_name(Role r);

/// Undirected simple graph stored as packed adjacency bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return edges_; }

    /// Throws std::invalid_argument on a self-loop or an out-of-range vertex.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    /// Packed neighbourhood of v; bit u of word u/64.
    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<size_t>(v) * words_, words_};
    }
    size_t words_per_row() const { return words_; }

    void set_role(int v, Role r);
    Role role(int v) const { return roles_[static_cast<size_t>(v)]; }
    const std::vector<Role>& roles() const { return roles_; }
    std::vector<int> vertices_with_role(Role r) const;

    /// Returns the graph with vertex v renamed to perm[v]. Roles move along.
    Graph relabeled(std::span<const int> perm) const;

    bool is_connected() const;

    /// Upper triangle, row-major, as '0'/'1' characters.
    std::string adjacency_string() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

private:
    void check_vertex(int v) const;
    int n_ = 0;
    size_t words_ = 0;
    int edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<Role> roles_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Triangle 0-1-2 and 4-cycle 0-3-4-5 sharing vertex 0.
Graph h43_pattern();

}  // namespace fishcheck
