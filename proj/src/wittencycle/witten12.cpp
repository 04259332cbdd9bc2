#include "moduli/wittencycle/witten12.hpp"

#include "moduli/errors.hpp"
#include "moduli/exact/linalg.hpp"
#include "moduli/util/parallel.hpp"
#include "moduli/volumes/volumes.hpp"

#include <optional>

namespace moduli::wittencycle {

namespace {

Rational psi_basis(const std::vector<int>& alpha, const std::vector<Rational>& s) {
    Rational v = 1;
    for (std::size_t k = 0; k < alpha.size(); ++k)
        v *= Rational(exact::odd_double_factorial(alpha[k])) / exact::power(s[k], 2 * alpha[k] + 1);
    return v;
}

// Solves M u = b exactly; nullopt when inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve(const exact::Matrix<Rational>& M, const std::vector<Rational>& b) {
    exact::Matrix<Rational> aug(M.rows(), M.cols() + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
        aug(i, M.cols()) = b[i];
    }
    auto r = exact::rref(aug);
    if (r.pivots.size() != M.cols()) return std::nullopt;
    for (std::size_t p : r.pivots)
        if (p == M.cols()) return std::nullopt;
    std::vector<Rational> u(M.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) u[r.pivots[i]] = r.reduced(i, M.cols());
    return u;
}

}  // namespace

CycleIntersections witten_cycle_intersections(const exact::RationalFunction& total, int n, int cycle_dimension,
                                              std::uint64_t seed) {
    CycleIntersections out;
    out.cycle_dimension = cycle_dimension;
    const auto alphas = volumes::compositions(cycle_dimension, n);
    const auto points = exact::random_positive_points(static_cast<std::size_t>(n), alphas.size() + 8, seed);
    exact::Matrix<Rational> M(points.size(), alphas.size());
    std::vector<Rational> plain(points.size()), scaled(points.size());
    const Rational scale = exact::power(Rational(2), cycle_dimension);
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (std::size_t a = 0; a < alphas.size(); ++a) M(p, a) = psi_basis(alphas[a], points[p]);
        plain[p] = total.evaluate(points[p]);
        scaled[p] = plain[p] * scale;
    }
    auto u = solve(M, scaled);
    auto v = solve(M, plain);
    out.consistent = u.has_value() && v.has_value();
    if (u)
        for (std::size_t a = 0; a < alphas.size(); ++a) out.values[alphas[a]] = (*u)[a];
    if (v)
        for (std::size_t a = 0; a < alphas.size(); ++a) out.plain_transform_values[alphas[a]] = (*v)[a];
    return out;
}

Witten12Report witten12(const std::vector<CellChart>& charts) {
    auto graphs = ribbon::enumerate(1, 2, {5, 3});
    std::vector<std::optional<WittenCell>> cells(graphs.size());
    util::parallel_for(graphs.size(), [&](std::size_t i) {
        for (const auto& chart : charts) {
            if (chart.graph.edge_count() != graphs[i].graph.edge_count()) continue;
            if (!ribbon::find_isomorphism(chart.graph, graphs[i].graph, false)) continue;
            CellChart local = transport_chart(chart, graphs[i].graph);
            CellVolume volume = witten_cell_volume_laplace(local);
            cells[i] = WittenCell{graphs[i], std::move(local), std::move(volume)};
            return;
        }
        throw DomainError("no chart covers Witten cycle cell " + std::to_string(i));
    });
    Witten12Report report;
    for (auto& c : cells) report.cells.push_back(std::move(*c));
    report.total = exact::RationalFunction(2);
    for (const auto& c : report.cells)
        report.total += c.volume.laplace * Rational(1, static_cast<long>(c.graph.automorphisms));
    report.total = report.total.simplified();
    report.intersections = witten_cycle_intersections(report.total, 2, 1);
    return report;
}

Witten12Report witten12() { return witten12(load_charts(default_chart_directory())); }

}  // namespace moduli::wittencycle
