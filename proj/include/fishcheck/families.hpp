#pragma once

#include <string>
#include <string_view>

#include "fishcheck/graph.hpp"
#include "fishcheck/partition.hpp"

namespace fishcheck {

/// Named comparison families. Vertex order in every constructor:
/// u* = 0, then A+, then special A0 vertices, then W, then leaves.
enum class Family {
    SMinus,  // K2 v (n-2)K1 minus one cross edge, n = (m+4)/2
    T,       // K1 v (K4 u (m-10)K1)
    Same,    // one W edge, both ends on the same special A0 vertex
    Dist,    // one W edge, ends on two distinct special A0 vertices
    Mixed,   // one W edge, one end on A+, the other on a special A0 vertex
};

enum class Ew1Kind { Same, Distinct, Mixed };

const char* family_name(Family f);
/// Accepts s-minus | t | same | dist | mixed. Throws std::invalid_argument.
Family parse_family(std::string_view name);

/// Smallest even m for which the family exists.
int family_min_m(Family f);

/// Throws std::invalid_argument for odd m or m < 6.
Graph build_s_minus(int m);
/// Throws std::invalid_argument for odd m or m < 10.
Graph build_t(int m);
/// Throws std::invalid_argument when the leaf count would be negative.
Graph build_ew1_family(Ew1Kind kind, int m);

Graph build_family(Family f, int m);

/// The equitable partition whose quotient is the family's quotient matrix.
/// Blocks that would be empty at this m (no leaves) are omitted.
Partition family_partition(Family f, int m);

/// Family quotient matrix with entries affine in m, obtained from the
/// concrete graphs at two values of m and cross-checked at a third.
SymbolicMatrix family_quotient_symbolic(Family f);

}  // namespace fishcheck
