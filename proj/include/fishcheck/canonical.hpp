#pragma once

#include <string>
#include <vector>

#include "fishcheck/graph.hpp"

namespace fishcheck {

/// Canonical relabelling: perm[v] is the new name of v. Isomorphic graphs map
/// to identical canonical forms. Computed by colour refinement plus
/// individualisation, taking the least adjacency string over all leaves;
/// twin vertices are branched on once.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// "<n>:" followed by the adjacency string of the canonical form.
std::string canonical_string(const Graph& g);

}  // namespace fishcheck
