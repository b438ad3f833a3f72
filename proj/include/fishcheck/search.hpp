#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fishcheck/graph.hpp"
#include "fishcheck/spectral.hpp"

namespace fishcheck {

/// One residual K4-branch configuration: u* joined to a K4 on A+, a graph on
/// W, attachments from W into A+ and into special A0 vertices, and leaves.
struct ResidualConfig {
    Graph w_graph;
    /// Per W vertex: -1, or the A+ vertex (0..3) it is joined to.
    std::vector<int> aplus_attach;
    /// Per W vertex: -1, or the special A0 slot it is joined to.
    std::vector<int> a0_attach;
    int leaf_count = 0;

    int w_edges() const { return w_graph.edge_count(); }
    int aplus_edges() const;
    int a0_edges() const;
    int special_count() const;
    /// 4 + |A0| + 6 + e(A+,W) + e(A0,W) + e(W)
    int edge_budget() const;
    std::string to_string() const;
    nlohmann::json to_json() const;
};

/// Isomorphism classes of graphs with e_w edges and no isolated vertices,
/// ordered by (order, canonical string). Accepts 1 <= e_w <= 4.
std::vector<Graph> enumerate_w_graphs(int e_w);

/// Independence number by brute force (small graphs only).
int independence_number(const Graph& g);

/// Vertex order: u*, A+ (4), special A0, W, leaves. Roles are set.
Graph realize(const ResidualConfig& c);

/// Checks a realized graph against the structural constraints using its
/// roles; returns a description of the first violation.
std::optional<std::string> residual_violation(const Graph& g, int m);

/// Calls fn for every admissible configuration with exactly m edges. A+
/// attachments are taken up to the symmetry of K4 (set partitions of the
/// attached W vertices), special A0 slots likewise. Odd or small m simply
/// yield nothing.
void for_each_residual(int m, const std::function<void(const ResidualConfig&, const Graph&)>& fn);
std::vector<std::pair<ResidualConfig, Graph>> enumerate_residual(int m);

struct SearchOptions {
    double margin = 1e-6;
    unsigned jobs = 1;
    bool keep_survivors = false;
    double tol = 1e-12;
};

struct Survivor {
    std::string graph6;
    std::string canonical;
    double rho = 0.0;
};

struct MReport {
    int m = 0;
    long emitted = 0;
    long h43_free = 0;
    long unique_h43_free = 0;
    bool has_best = false;
    double best_rho = 0.0;
    std::string best_graph6;
    std::string best_canonical;
    ResidualConfig best_config;
    RhoPrime rho_prime;
    double gap = 0.0;  // rho'(m) - best
    Verdict verdict = Verdict::Below;
    std::vector<std::string> failures;
    /// Distinct H(4,3)-free graphs, ordered by canonical string.
    std::vector<Survivor> survivors;

    nlohmann::json to_json() const;
};

struct SearchReport {
    std::vector<MReport> rows;
    nlohmann::json to_json() const;
    /// m, rho'(m), best residual rho, gap.
    std::string table() const;
};

/// Throws std::invalid_argument for odd m or m < 6.
SearchReport run_search(const std::vector<int>& ms, const SearchOptions& opts = {});

}  // namespace fishcheck
