#pragma once

#include "moduli/exact/rational_function.hpp"
#include "moduli/wittencycle/intersection.hpp"
#include "moduli/wittencycle/multicurve.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace moduli::wittencycle {

// A ribbon graph with 6g-6+2n multicurves whose limiting lengths serve as local
// coordinates, plus the free edges used as coordinates on the cell {A e = x}.
struct CellChart {
    std::string name;
    RibbonGraph graph;
    std::vector<Multicurve> curves;
    std::vector<int> cell_coordinates;  // 0-based edges
    std::vector<AngleOverride> angle_overrides;
};

// Checks the curve count and validates every curve.
void validate_chart(const CellChart& chart);

// {"graph": {...}, "curves": [[signed edges] or [[component], ...]], "cell_coordinates": [1-based edges],
//  "angle_overrides": [{"vertex": v, "pair": [i, j], "cos": {"a": "p/q", "b": "p/q", "D": 5}}]}
// Curves in "pair" are numbered from 1; vertices from 0 in canonical order.
CellChart chart_from_json(const nlohmann::json& j, std::string name = {});
nlohmann::json chart_to_json(const CellChart& chart);
CellChart load_chart(const std::string& path);
// All *.json charts in a directory, ordered by file name.
std::vector<CellChart> load_charts(const std::string& directory);
std::string default_chart_directory();

// The same chart carried to an isomorphic graph (face labels ignored).
// Throws DomainError when the graphs are not isomorphic.
CellChart transport_chart(const CellChart& chart, const RibbonGraph& target);

// Trivalent graphs: the edge curves C_k for a maximal set of k with X invertible.
CellChart standard_chart(const RibbonGraph& graph);

struct AsymptoticForm {
    QuadMatrix X;
    QuadMatrix X_inverse;
    exact::Matrix<Rational> lengths;  // curves x edges: limiting length forms
    QuadMatrix edge_form;             // E x E matrix of -C^T X^-1 C in de
    std::vector<int> coordinates;
    QuadMatrix cell_form;             // restriction to the cell, in de_T
};

// Omega = -sum_{i<j} [X^-1]_ij dl_i ^ dl_j. Throws SingularMatrixError when X is singular.
AsymptoticForm asymptotic_form(const CellChart& chart);

// Pfaffian of the cell form as a top-degree density: Omega^d/d! = pfaffian * de_T1 ^ ... ^ de_T2d.
QuadExt cell_pfaffian(const AsymptoticForm& form);

struct CellVolume {
    AsymptoticForm form;
    Rational density;  // constant density against the quotient measure of {A e = x}
    exact::RationalFunction laplace;
};

// Laplace transform of the Omega-volume of the cell. Throws DomainError when the
// density is irrational.
CellVolume witten_cell_volume_laplace(const CellChart& chart);

}  // namespace moduli::wittencycle
