#pragma once

#include <array>
#include <optional>
#include <string>

#include "fishcheck/graph.hpp"

namespace fishcheck {

/// A triangle and a 4-cycle meeting in exactly one vertex.
struct H43Witness {
    std::array<int, 3> triangle;  // triangle[0] is the shared vertex
    std::array<int, 4> cycle;     // in cyclic order, cycle[0] is the shared vertex
    int shared;

    std::string to_string() const;
};

/// Witness of an H(4,3) subgraph (not necessarily induced), or nullopt.
std::optional<H43Witness> find_h43(const Graph& g);

inline bool contains_h43(const Graph& g) { return find_h43(g).has_value(); }

/// Exhaustive injective maps of the 6-vertex pattern into g, with edge checks
/// during the backtrack. Independent of find_h43; intended for n <= 12.
bool brute_force_h43_oracle(const Graph& g);

}  // namespace fishcheck
