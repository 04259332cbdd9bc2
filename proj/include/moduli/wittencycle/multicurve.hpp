#pragma once

#include "moduli/exact/matrix.hpp"
#include "moduli/exact/multipoly.hpp"
#include "moduli/exact/rational.hpp"
#include "moduli/ribbon/ribbon_graph.hpp"

#include <vector>

namespace moduli::wittencycle {

using exact::Rational;
using ribbon::RibbonGraph;

// Cyclic sequence of half-edges; half-edge h is the edge oriented into vertex(h),
// so consecutive entries a, b satisfy vertex(s1(b)) == vertex(a).
using Walk = std::vector<int>;

struct Multicurve {
    std::vector<Walk> components;

    bool empty() const { return components.empty(); }
};

// Throws InvalidGraphError when a component is empty or not a closed walk.
void validate_multicurve(const RibbonGraph& graph, const Multicurve& curve);

// Components given as signed 1-based edges (+k is the edge's smaller half-edge).
Multicurve multicurve_from_signed(const RibbonGraph& graph, const std::vector<std::vector<int>>& components);
std::vector<std::vector<int>> multicurve_to_signed(const RibbonGraph& graph, const Multicurve& curve);

// Oriented edges met walking once around the face of h, starting after side h.
Walk face_walk(const RibbonGraph& graph, int h);

// The curve around edge k (0-based): one component when its sides lie on distinct
// faces, two when both sides lie on one face, none for a loop.
Multicurve edge_multicurve(const RibbonGraph& graph, int edge);
std::vector<Multicurve> standard_multicurves(const RibbonGraph& graph);

// Coefficient of e_k (0-based) in the limiting normalised length.
using LinearForm = std::vector<Rational>;
LinearForm limit_length(const RibbonGraph& graph, const Multicurve& curve);

// Length as a polynomial in e1..eE.
exact::MultiPoly<Rational> length_polynomial(const RibbonGraph& graph, const Multicurve& curve);

// Free edge coordinates on the cell {A e = x}: the non-pivot columns of rref(A).
std::vector<int> default_cell_coordinates(const RibbonGraph& graph);

// Rewrites form . e as sum_i c_i x_i + sum_{k in coordinates} r_k e_k, as a polynomial in
// x1..xn, e1..eE. Throws SingularMatrixError when the coordinates are not free on the cell.
exact::MultiPoly<Rational> length_in_perimeters(const RibbonGraph& graph, const LinearForm& form,
                                                const std::vector<int>& coordinates);

// E x k matrix P with de = P de_T on the cell, T = coordinates.
exact::Matrix<Rational> cell_parametrisation(const RibbonGraph& graph, const std::vector<int>& coordinates);

// The differential of form restricted to the cell, in the coordinates de_T.
LinearForm reduce_to_cell(const RibbonGraph& graph, const LinearForm& form, const std::vector<int>& coordinates);

// Whether two differentials agree on the cell, i.e. differ by a combination of rows of A.
bool equal_on_cell(const RibbonGraph& graph, const LinearForm& a, const LinearForm& b);

}  // namespace moduli::wittencycle
