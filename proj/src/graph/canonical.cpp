#include "fishcheck/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace fishcheck {

namespace {

using Colouring = std::vector<int>;

int colour_count(const Colouring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Equitable refinement; new colours are ordered by (old colour, neighbour
// colour counts), which depends only on the isomorphism class.
Colouring refine(const Graph& g, Colouring colour) {
    const int n = g.order();
    int k = colour_count(colour);
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) nbrs[static_cast<size_t>(v)] = g.neighbors(v);
    while (true) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<size_t>(v)];
            s.assign(static_cast<size_t>(k) + 1, 0);
            s[0] = colour[static_cast<size_t>(v)];
            for (int w : nbrs[static_cast<size_t>(v)]) ++s[static_cast<size_t>(colour[static_cast<size_t>(w)]) + 1];
        }
        std::map<std::vector<int>, int> index;
        for (const auto& s : sig) index.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : index) id = next++;
        Colouring refined(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) refined[static_cast<size_t>(v)] = index[sig[static_cast<size_t>(v)]];
        const int k2 = next;
        colour = std::move(refined);
        if (k2 == k) return colour;
        k = k2;
    }
}

bool twins(const Graph& g, int u, int v) {
    auto ru = g.row(u);
    auto rv = g.row(v);
    for (size_t w = 0; w < ru.size(); ++w) {
        std::uint64_t a = ru[w], b = rv[w];
        if (static_cast<size_t>(v) / 64 == w) a &= ~(std::uint64_t{1} << (v % 64));
        if (static_cast<size_t>(u) / 64 == w) b &= ~(std::uint64_t{1} << (u % 64));
        if (a != b) return false;
    }
    return true;
}

struct Search {
    const Graph& g;
    std::optional<std::string> best;
    std::vector<int> best_perm;

    void run(Colouring colour) {
        colour = refine(g, std::move(colour));
        const int n = g.order();
        const int k = colour_count(colour);
        if (k == n) {
            const std::string s = g.relabeled(colour).adjacency_string();
            if (!best || s < *best) {
                best = s;
                best_perm = colour;
            }
            return;
        }
        std::vector<int> size(static_cast<size_t>(k), 0);
        for (int c : colour) ++size[static_cast<size_t>(c)];
        int target = 0;
        while (size[static_cast<size_t>(target)] == 1) ++target;
        std::vector<int> reps;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<size_t>(v)] != target) continue;
            bool covered = false;
            for (int r : reps)
                if (twins(g, r, v)) {
                    covered = true;
                    break;
                }
            if (!covered) reps.push_back(v);
        }
        for (int r : reps) {
            Colouring next = colour;
            for (int v = 0; v < n; ++v) {
                int& c = next[static_cast<size_t>(v)];
                if (c > target || (c == target && v != r)) ++c;
            }
            run(std::move(next));
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() == 0) return {};
    Search search{g, std::nullopt, {}};
    search.run(Colouring(static_cast<size_t>(g.order()), 0));
    return search.best_perm;
}

Graph canonical_form(const Graph& g) {
    const auto perm = canonical_labeling(g);
    return g.relabeled(perm);
}

std::string canonical_string(const Graph& g) {
    return std::to_string(g.order()) + ":" + canonical_form(g).adjacency_string();
}

}  // namespace fishcheck
