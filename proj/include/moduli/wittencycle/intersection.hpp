#pragma once

#include "moduli/exact/matrix.hpp"
#include "moduli/exact/quad_ext.hpp"
#include "moduli/wittencycle/multicurve.hpp"

#include <map>
#include <vector>

namespace moduli::wittencycle {

using exact::QuadExt;
using QuadMatrix = exact::Matrix<QuadExt>;

// Replaces the computed cosine of every crossing of curves i and j at a vertex.
// The value is read as the cosine measured from curve i to curve j.
struct AngleOverride {
    int vertex = 0;
    int first = 0;
    int second = 0;
    QuadExt cos;
};

// Sum over crossings of cos(theta), theta measured anticlockwise from w1 to w2.
// Shared edge paths count +1 or -1 when the strands leave to opposite sides at the
// two ends; strands crossing inside a vertex of degree >= 4 contribute the
// ideal-polygon cosine. Throws DomainError when the walks coincide or when a
// crossing cosine is not available exactly.
// vertex_cos replaces the crossing cosine at the listed vertices.
QuadExt walk_intersection(const RibbonGraph& graph, const Walk& w1, const Walk& w2,
                          const std::map<int, QuadExt>& vertex_cos = {});

QuadExt multicurve_intersection(const RibbonGraph& graph, const Multicurve& c1, const Multicurve& c2,
                                const std::map<int, QuadExt>& vertex_cos = {});

// X_ij for i < j, filled skew-symmetrically.
QuadMatrix intersection_matrix(const RibbonGraph& graph, const std::vector<Multicurve>& curves,
                               const std::vector<AngleOverride>& overrides = {});

}  // namespace moduli::wittencycle
