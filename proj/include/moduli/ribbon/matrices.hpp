#pragma once

#include "moduli/exact/matrix.hpp"
#include "moduli/ribbon/ribbon_graph.hpp"

#include <cstdint>

namespace moduli::ribbon {

using IntMatrix = exact::Matrix<std::int64_t>;

// n x E; entry (i, e) = number of sides of edge e on the face labelled i+1.
IntMatrix face_edge_matrix(const RibbonGraph& graph);

// Global sign of B. The local rule below is multiplied by this constant; -1 makes
// the limiting intersection matrix of the standard edge curves equal -2B.
inline constexpr int kAdjacencySign = -1;

// E x E skew matrix B: for every half-edge h with h' = s0(h), the rule adds +1 at
// (edge(h'), edge(h)) and -1 at (edge(h), edge(h')), times kAdjacencySign.
// Throws UnsupportedInputError unless the graph is trivalent.
IntMatrix oriented_adjacency(const RibbonGraph& graph);

}  // namespace moduli::ribbon
