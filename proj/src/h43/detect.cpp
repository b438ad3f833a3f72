#include "fishcheck/h43.hpp"

#include <bit>
#include <sstream>
#include <vector>

namespace fishcheck {

std::string H43Witness::to_string() const {
    std::ostringstream os;
    os << "triangle {" << triangle[0] << "," << triangle[1] << "," << triangle[2] << "} cycle " << cycle[0] << "-"
       << cycle[1] << "-" << cycle[2] << "-" << cycle[3] << "-" << cycle[0] << " shared " << shared;
    return os.str();
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits row_copy(const Graph& g, int v) {
    auto r = g.row(v);
    return Bits(r.begin(), r.end());
}

void clear_bit(Bits& b, int v) { b[static_cast<size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }

int first_bit(const Bits& b) {
    for (size_t w = 0; w < b.size(); ++w)
        if (b[w]) return static_cast<int>(w * 64) + std::countr_zero(b[w]);
    return -1;
}

// A 4-cycle v-a-b-c-v with a, b, c outside {v, t1, t2}.
std::optional<std::array<int, 4>> cycle_through(const Graph& g, int v, int t1, int t2) {
    std::vector<int> around;
    for (int a : g.neighbors(v))
        if (a != t1 && a != t2) around.push_back(a);
    for (size_t i = 0; i < around.size(); ++i) {
        const Bits ra = row_copy(g, around[i]);
        for (size_t j = i + 1; j < around.size(); ++j) {
            Bits common = row_copy(g, around[j]);
            for (size_t w = 0; w < common.size(); ++w) common[w] &= ra[w];
            clear_bit(common, v);
            clear_bit(common, t1);
            clear_bit(common, t2);
            const int b = first_bit(common);
            if (b >= 0) return std::array<int, 4>{v, around[i], b, around[j]};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<H43Witness> find_h43(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            for (int c : g.neighbors(b)) {
                if (c <= b || !g.has_edge(a, c)) continue;
                const std::array<int, 3> tri{a, b, c};
                for (int k = 0; k < 3; ++k) {
                    const int v = tri[static_cast<size_t>(k)];
                    const int t1 = tri[static_cast<size_t>((k + 1) % 3)];
                    const int t2 = tri[static_cast<size_t>((k + 2) % 3)];
                    if (auto cyc = cycle_through(g, v, t1, t2)) return H43Witness{{v, t1, t2}, *cyc, v};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

struct PatternMatcher {
    const Graph& g;
    const Graph pattern = h43_pattern();
    std::array<int, 6> image{};
    std::vector<char> used;

    bool extend(int k) {
        if (k == 6) return true;
        for (int v = 0; v < g.order(); ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j)
                if (pattern.has_edge(j, k) && !g.has_edge(image[static_cast<size_t>(j)], v)) ok = false;
            if (!ok) continue;
            image[static_cast<size_t>(k)] = v;
            used[static_cast<size_t>(v)] = 1;
            if (extend(k + 1)) return true;
            used[static_cast<size_t>(v)] = 0;
        }
        return false;
    }
};

}  // namespace

bool brute_force_h43_oracle(const Graph& g) {
    if (g.order() < 6) return false;
    PatternMatcher pm{g, h43_pattern(), {}, std::vector<char>(static_cast<size_t>(g.order()), 0)};
    return pm.extend(0);
}

}  // namespace fishcheck
