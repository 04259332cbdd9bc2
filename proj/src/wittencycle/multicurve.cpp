#include "moduli/wittencycle/multicurve.hpp"

#include "moduli/errors.hpp"
#include "moduli/exact/linalg.hpp"
#include "moduli/ribbon/matrices.hpp"

#include <algorithm>
#include <string>

namespace moduli::wittencycle {

using RationalMatrix = exact::Matrix<Rational>;

namespace {

RationalMatrix face_edge_rational(const RibbonGraph& graph) { return ribbon::face_edge_matrix(graph).cast<Rational>(); }

std::vector<std::size_t> complement(const std::vector<int>& coordinates, int edges) {
    std::vector<std::size_t> rest;
    for (int k = 0; k < edges; ++k)
        if (std::find(coordinates.begin(), coordinates.end(), k) == coordinates.end()) rest.push_back(static_cast<std::size_t>(k));
    return rest;
}

void check_coordinates(const RibbonGraph& graph, const std::vector<int>& coordinates) {
    for (int k : coordinates)
        if (k < 0 || k >= graph.edge_count()) throw DomainError("cell coordinate " + std::to_string(k) + " is not an edge");
}

// A restricted to the non-coordinate columns, inverted; these columns must be square and invertible.
RationalMatrix pivot_block_inverse(const RibbonGraph& graph, const RationalMatrix& A, const std::vector<std::size_t>& rest) {
    std::vector<std::size_t> rows(static_cast<std::size_t>(graph.face_count()));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    if (rest.size() != rows.size())
        throw SingularMatrixError("cell coordinates must leave exactly " + std::to_string(rows.size()) + " dependent edges");
    return exact::inverse(A.submatrix(rows, rest));
}

}  // namespace

void validate_multicurve(const RibbonGraph& graph, const Multicurve& curve) {
    const int H = graph.half_edge_count();
    for (const auto& w : curve.components) {
        if (w.empty()) throw InvalidGraphError("multicurve component is empty");
        for (int h : w)
            if (h < 0 || h >= H) throw InvalidGraphError("multicurve refers to half-edge " + std::to_string(h));
        for (std::size_t k = 0; k < w.size(); ++k) {
            int a = w[k], b = w[(k + 1) % w.size()];
            if (graph.vertex_of(graph.s1(b)) != graph.vertex_of(a))
                throw InvalidGraphError("multicurve component is not a closed walk at position " + std::to_string(k));
        }
    }
}

Multicurve multicurve_from_signed(const RibbonGraph& graph, const std::vector<std::vector<int>>& components) {
    Multicurve c;
    for (const auto& comp : components) {
        Walk w;
        for (int s : comp) w.push_back(graph.half_edge_from_signed(s));
        c.components.push_back(std::move(w));
    }
    validate_multicurve(graph, c);
    return c;
}

std::vector<std::vector<int>> multicurve_to_signed(const RibbonGraph& graph, const Multicurve& curve) {
    std::vector<std::vector<int>> out;
    for (const auto& w : curve.components) {
        std::vector<int> s;
        for (int h : w) s.push_back(graph.signed_edge(h));
        out.push_back(std::move(s));
    }
    return out;
}

Walk face_walk(const RibbonGraph& graph, int h) {
    Walk w;
    int x = h;
    do {
        w.push_back(graph.s1(x));
        x = graph.s2(x);
    } while (x != h);
    return w;
}

Multicurve edge_multicurve(const RibbonGraph& graph, int edge) {
    if (edge < 0 || edge >= graph.edge_count()) throw DomainError("edge index out of range");
    const int a = graph.positive_half_edge(edge), b = graph.s1(a);
    Multicurve c;
    if (graph.vertex_of(a) == graph.vertex_of(b)) return c;
    Walk wa = face_walk(graph, a);
    if (graph.face_of(a) != graph.face_of(b)) {
        Walk wb = face_walk(graph, b);
        Walk w(wa.begin() + 1, wa.end());
        w.insert(w.end(), wb.begin() + 1, wb.end());
        c.components.push_back(std::move(w));
        return c;
    }
    std::size_t p = 0;
    for (int x = a; x != b; x = graph.s2(x)) ++p;
    c.components.emplace_back(wa.begin() + 1, wa.begin() + static_cast<std::ptrdiff_t>(p));
    c.components.emplace_back(wa.begin() + static_cast<std::ptrdiff_t>(p) + 1, wa.end());
    return c;
}

std::vector<Multicurve> standard_multicurves(const RibbonGraph& graph) {
    std::vector<Multicurve> out;
    for (int k = 0; k < graph.edge_count(); ++k) out.push_back(edge_multicurve(graph, k));
    return out;
}

LinearForm limit_length(const RibbonGraph& graph, const Multicurve& curve) {
    LinearForm f(static_cast<std::size_t>(graph.edge_count()), Rational(0));
    for (const auto& w : curve.components)
        for (int h : w) f[static_cast<std::size_t>(graph.edge_of(h))] += 1;
    return f;
}

exact::MultiPoly<Rational> length_polynomial(const RibbonGraph& graph, const Multicurve& curve) {
    auto vars = exact::indexed_names("e", static_cast<std::size_t>(graph.edge_count()));
    exact::MultiPoly<Rational> p(vars);
    LinearForm f = limit_length(graph, curve);
    for (std::size_t k = 0; k < f.size(); ++k) {
        exact::Exponent e(f.size(), 0);
        e[k] = 1;
        p.add_term(e, f[k]);
    }
    return p;
}

std::vector<int> default_cell_coordinates(const RibbonGraph& graph) {
    auto echelon = exact::rref(face_edge_rational(graph));
    std::vector<int> free;
    for (int k = 0; k < graph.edge_count(); ++k)
        if (std::find(echelon.pivots.begin(), echelon.pivots.end(), static_cast<std::size_t>(k)) == echelon.pivots.end())
            free.push_back(k);
    return free;
}

exact::MultiPoly<Rational> length_in_perimeters(const RibbonGraph& graph, const LinearForm& form,
                                                const std::vector<int>& coordinates) {
    check_coordinates(graph, coordinates);
    const std::size_t n = static_cast<std::size_t>(graph.face_count()), E = static_cast<std::size_t>(graph.edge_count());
    if (form.size() != E) throw DomainError("linear form has wrong length");
    const RationalMatrix A = face_edge_rational(graph);
    const auto rest = complement(coordinates, graph.edge_count());
    const RationalMatrix inv = pivot_block_inverse(graph, A, rest);

    // lambda A agrees with form on the dependent edges
    std::vector<Rational> lambda(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < rest.size(); ++r) lambda[i] += form[rest[r]] * inv(r, i);

    auto vars = exact::indexed_names("x", n);
    auto evars = exact::indexed_names("e", E);
    vars.insert(vars.end(), evars.begin(), evars.end());
    exact::MultiPoly<Rational> p(vars);
    for (std::size_t i = 0; i < n; ++i) {
        exact::Exponent e(n + E, 0);
        e[i] = 1;
        p.add_term(e, lambda[i]);
    }
    for (std::size_t k = 0; k < E; ++k) {
        Rational rk = form[k];
        for (std::size_t i = 0; i < n; ++i) rk -= lambda[i] * A(i, k);
        exact::Exponent e(n + E, 0);
        e[n + k] = 1;
        p.add_term(e, rk);
    }
    return p;
}

exact::Matrix<Rational> cell_parametrisation(const RibbonGraph& graph, const std::vector<int>& coordinates) {
    check_coordinates(graph, coordinates);
    const std::size_t E = static_cast<std::size_t>(graph.edge_count());
    const RationalMatrix A = face_edge_rational(graph);
    const auto rest = complement(coordinates, graph.edge_count());
    const RationalMatrix inv = pivot_block_inverse(graph, A, rest);
    RationalMatrix P(E, coordinates.size());
    for (std::size_t a = 0; a < coordinates.size(); ++a) {
        const std::size_t t = static_cast<std::size_t>(coordinates[a]);
        P(t, a) = 1;
        for (std::size_t r = 0; r < rest.size(); ++r) {
            Rational v = 0;
            for (std::size_t i = 0; i < inv.cols(); ++i) v -= inv(r, i) * A(i, t);
            P(rest[r], a) = v;
        }
    }
    return P;
}

LinearForm reduce_to_cell(const RibbonGraph& graph, const LinearForm& form, const std::vector<int>& coordinates) {
    const RationalMatrix P = cell_parametrisation(graph, coordinates);
    if (form.size() != P.rows()) throw DomainError("linear form has wrong length");
    LinearForm out(P.cols(), Rational(0));
    for (std::size_t a = 0; a < P.cols(); ++a)
        for (std::size_t k = 0; k < P.rows(); ++k) out[a] += form[k] * P(k, a);
    return out;
}

bool equal_on_cell(const RibbonGraph& graph, const LinearForm& a, const LinearForm& b) {
    const RationalMatrix A = face_edge_rational(graph);
    if (a.size() != A.cols() || b.size() != A.cols()) throw DomainError("linear form has wrong length");
    RationalMatrix stacked(A.rows() + 1, A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) stacked(i, k) = A(i, k);
    for (std::size_t k = 0; k < A.cols(); ++k) stacked(A.rows(), k) = a[k] - b[k];
    return exact::rank(stacked) == exact::rank(A);
}

}  // namespace moduli::wittencycle
