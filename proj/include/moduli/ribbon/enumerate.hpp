#pragma once

#include "moduli/ribbon/ribbon_graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace moduli::ribbon {

struct EnumeratedGraph {
    RibbonGraph graph;
    std::int64_t automorphisms;
};

// One representative per class of face-labelled ribbon graphs of type (g, n) with the
// given vertex degrees, with |Aut|. Representatives pair half-edges as (2k, 2k+1).
// Inconsistent or unstable (g, n, degrees) yield an empty list.
std::vector<EnumeratedGraph> enumerate(int g, int n, const std::vector<int>& degrees);

// All trivalent graphs of type (g, n).
std::vector<EnumeratedGraph> enumerate_trivalent(int g, int n);

std::int64_t automorphism_group_order(const RibbonGraph& graph);

// Breadth-first relabelling code from a root half-edge; minimal over roots it is a
// complete isomorphism invariant.
std::vector<int> rooted_code(const RibbonGraph& graph, int root, bool with_labels);
std::vector<int> canonical_code(const RibbonGraph& graph, bool with_labels = true);

// A half-edge bijection phi with phi s0 = s0' phi and phi s1 = s1' phi (and matching
// face labels when requested), as the vector h -> phi(h).
std::optional<std::vector<int>> find_isomorphism(const RibbonGraph& from, const RibbonGraph& to, bool respect_labels);

}  // namespace moduli::ribbon
