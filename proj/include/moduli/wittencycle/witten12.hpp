#pragma once

#include "moduli/exact/rational_function.hpp"
#include "moduli/ribbon/enumerate.hpp"
#include "moduli/wittencycle/chart.hpp"

#include <map>
#include <string>
#include <vector>

namespace moduli::wittencycle {

struct WittenCell {
    ribbon::EnumeratedGraph graph;
    CellChart chart;  // carried to this graph
    CellVolume volume;
};

struct CycleIntersections {
    int cycle_dimension = 0;  // complex dimension d' of the cycle
    // <W psi^alpha> from  sum_alpha <W psi^alpha> prod (2a_k-1)!!/s_k^(2a_k+1) = 2^d' * total,
    // the relation between psi numbers and Omega-volumes used for the whole moduli space.
    std::map<std::vector<int>, Rational> values;
    // The same unknowns solved against the plain Laplace transform of
    // sum_alpha <W psi^alpha> x^(2 alpha) / (2^d' alpha!), i.e. without the factor 2^d'.
    std::map<std::vector<int>, Rational> plain_transform_values;
    bool consistent = false;
};

// Solves for the intersection numbers given the Laplace total of the cycle volume.
CycleIntersections witten_cycle_intersections(const exact::RationalFunction& total, int n, int cycle_dimension,
                                              std::uint64_t seed = 1);

struct Witten12Report {
    std::vector<WittenCell> cells;
    exact::RationalFunction total;
    CycleIntersections intersections;
};

// Every (1,2) ribbon graph with vertex degrees {5,3}, each covered by one of the charts.
Witten12Report witten12(const std::vector<CellChart>& charts);
Witten12Report witten12();

}  // namespace moduli::wittencycle
