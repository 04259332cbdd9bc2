#include <doctest.h>

#include "moduli/errors.hpp"
#include "moduli/exact/linalg.hpp"
#include "moduli/kformula/kformula.hpp"
#include "moduli/ribbon/matrices.hpp"
#include "moduli/volumes/volumes.hpp"
#include "moduli/wittencycle/witten12.hpp"

#include <algorithm>

using namespace moduli;
using namespace moduli::wittencycle;
using exact::LinearFactor;
using exact::QuadExt;
using exact::Rational;

namespace {

const std::vector<std::pair<int, int>> kTrivalentTypes{{0, 3}, {1, 1}, {0, 4}, {1, 2}, {0, 5}};

QuadMatrix to_quad(const ribbon::IntMatrix& m) {
    QuadMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = QuadExt(static_cast<long>(m(i, j)));
    return q;
}

bool has_loop(const RibbonGraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return true;
    return false;
}

bool has_multiedge(const RibbonGraph& g) {
    std::vector<std::pair<int, int>> ends;
    for (int e = 0; e < g.edge_count(); ++e) {
        int h = g.positive_half_edge(e);
        const int a = g.vertex_of(h), b = g.vertex_of(g.s1(h));
        std::pair<int, int> p{std::min(a, b), std::max(a, b)};
        if (p.first == p.second) continue;
        if (std::find(ends.begin(), ends.end(), p) != ends.end()) return true;
        ends.push_back(p);
    }
    return false;
}

CellChart chart_named(const std::string& name) {
    for (auto& c : load_charts(default_chart_directory()))
        if (c.name == name) return c;
    throw DomainError("missing chart " + name);
}

// 1 / (c * prod factor^power)
exact::RationalFunction term(Rational c, std::initializer_list<std::pair<LinearFactor, int>> factors) {
    exact::RationalFunction f(2);
    exact::Denominator den;
    for (auto [lf, k] : factors) den[lf] = k;
    f.add_term(den, 1 / c);
    return f;
}

QuadExt q(long a, long b) { return b == 0 ? QuadExt(a) : QuadExt(a, b, 5); }

}  // namespace

TEST_SUITE("wittencycle") {

TEST_CASE("edge curves intersect as -2B") {
    bool loops = false, multiedges = false;
    for (auto [g, n] : kTrivalentTypes) {
        CAPTURE(g);
        CAPTURE(n);
        for (const auto& eg : ribbon::enumerate_trivalent(g, n)) {
            const auto curves = standard_multicurves(eg.graph);
            CHECK(intersection_matrix(eg.graph, curves) == to_quad(ribbon::oriented_adjacency(eg.graph)) * QuadExt(-2));
            loops = loops || has_loop(eg.graph);
            multiedges = multiedges || has_multiedge(eg.graph);
        }
    }
    CHECK(loops);
    CHECK(multiedges);
}

TEST_CASE("asymptotic form is twice epsilon times the Kontsevich form") {
    for (auto [g, n] : {std::pair{1, 1}, {0, 4}, {1, 2}}) {
        for (const auto& eg : ribbon::enumerate_trivalent(g, n)) {
            auto form = asymptotic_form(standard_chart(eg.graph));
            auto V = kformula::kernel_basis(eg.graph).cast<QuadExt>();
            auto omega_k = kformula::restricted_form(kformula::kontsevich_form(eg.graph), kformula::kernel_basis(eg.graph));
            CHECK(V.transpose() * form.edge_form * V == omega_k.cast<QuadExt>() * QuadExt(2 * kformula::kFormSign));
        }
    }
}

TEST_CASE("multicurves") {
    const auto chart = chart_named("chart_1");
    const auto& g = chart.graph;
    for (const auto& c : chart.curves) {
        CHECK_NOTHROW(validate_multicurve(g, c));
        CHECK(multicurve_from_signed(g, multicurve_to_signed(g, c)).components == c.components);
    }
    // a face walk has length equal to the face perimeter
    const auto A = ribbon::face_edge_matrix(g);
    for (int f = 0; f < g.face_count(); ++f) {
        auto len = limit_length(g, Multicurve{{face_walk(g, g.face_by_index(f)[0])}});
        for (int e = 0; e < g.edge_count(); ++e) CHECK(len[e] == A(f, e));
    }
    CHECK_THROWS(multicurve_from_signed(g, {{1, 1}}));
    CHECK_THROWS(multicurve_from_signed(g, {{9}}));
}

TEST_CASE("the leftmost (5,3) chart") {
    const auto form = asymptotic_form(chart_named("chart_1"));
    const QuadMatrix X = {{q(0, 0), q(-1, 1), q(-2, 0), q(-2, 0)},
                          {q(1, -1), q(0, 0), q(2, 0), q(-1, 1)},
                          {q(2, 0), q(-2, 0), q(0, 0), q(1, -1)},
                          {q(2, 0), q(1, -1), q(-1, 1), q(0, 0)}};
    CHECK(form.X == X);
    // the reference inverse lists 3 - sqrt5 at (4,2); skew-symmetry against (2,4) = 3 + sqrt5 forces -3 - sqrt5
    const QuadMatrix X8inv = {{q(0, 0), q(-1, -1), q(-1, -1), q(3, 1)},
                              {q(1, 1), q(0, 0), q(-3, -1), q(3, 1)},
                              {q(1, 1), q(3, 1), q(0, 0), q(1, 1)},
                              {q(-3, -1), q(-3, -1), q(-1, -1), q(0, 0)}};
    CHECK(form.X_inverse * QuadExt(8) == X8inv);
    CHECK(form.X * form.X_inverse == QuadMatrix::identity(4));
    // de2 ^ de3 on the cell coordinates e2, e3
    CHECK(form.coordinates == std::vector<int>{1, 2});
    const QuadMatrix cell = {{q(0, 0), q(1, 0)}, {q(-1, 0), q(0, 0)}};
    CHECK(form.cell_form == cell);
    auto vol = witten_cell_volume_laplace(chart_named("chart_1"));
    CHECK(vol.density == 2);
    auto expected = term(2, {{LinearFactor::pair(0, 1), 2}, {LinearFactor::single(1), 2}});
    for (const auto& c : exact::compare_at_points(vol.laplace, expected, exact::random_positive_points(2, 4, 3)))
        CHECK(c.equal);
}

TEST_CASE("Witten cycle in M_{1,2}") {
    const auto report = witten12();
    REQUIRE(report.cells.size() == 8);
    for (const auto& c : report.cells) {
        CHECK(c.graph.automorphisms == 1);
        CHECK(c.volume.density == 2);
        CHECK(c.graph.graph.degree_sequence() == std::vector<int>{5, 3});
    }
    CHECK(report.total.to_string() == "1/(2 s1 s2^3) + 1/(2 s1^3 s2)");

    // the eight reference contributions, matched as a multiset at a generic point
    const auto s12 = LinearFactor::pair(0, 1), s1 = LinearFactor::single(0), s2 = LinearFactor::single(1);
    std::vector<exact::RationalFunction> shown{
        term(2, {{s12, 2}, {s2, 2}}), term(4, {{s12, 1}, {s2, 3}}), term(4, {{s12, 1}, {s2, 3}}),
        term(1, {{s12, 3}, {s2, 1}}), term(2, {{s12, 2}, {s1, 2}}), term(4, {{s12, 1}, {s1, 3}}),
        term(4, {{s12, 1}, {s1, 3}}), term(1, {{s12, 3}, {s1, 1}})};
    const std::vector<Rational> point{Rational(3, 7), Rational(11, 5)};
    std::vector<Rational> got, want;
    for (const auto& c : report.cells) got.push_back(c.volume.laplace.evaluate(point));
    for (const auto& t : shown) want.push_back(t.evaluate(point));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    const auto& in = report.intersections;
    CHECK(in.consistent);
    CHECK(in.values.at({1, 0}) == 1);
    CHECK(in.values.at({0, 1}) == 1);
    CHECK(in.plain_transform_values.at({1, 0}) == Rational(1, 2));
}

TEST_CASE("Witten cycle agrees with 12 <tau0 tau1 tau2> on M_{1,3}") {
    CHECK(12 * volumes::psi_numbers(1, 3).values.at({0, 1, 2}) == 1);
}

TEST_CASE("chart JSON round trip and transport") {
    for (const auto& c : load_charts(default_chart_directory())) {
        auto back = chart_from_json(chart_to_json(c), c.name);
        CHECK(back.graph == c.graph);
        CHECK(back.cell_coordinates == c.cell_coordinates);
        REQUIRE(back.curves.size() == c.curves.size());
        for (std::size_t i = 0; i < c.curves.size(); ++i) CHECK(back.curves[i].components == c.curves[i].components);
    }
    const auto graphs = ribbon::enumerate(1, 2, {5, 3});
    const auto chart = chart_named("chart_1");
    for (const auto& eg : graphs) {
        if (!ribbon::find_isomorphism(chart.graph, eg.graph, false)) continue;
        auto moved = transport_chart(chart, eg.graph);
        CHECK(witten_cell_volume_laplace(moved).density == 2);
        CHECK(asymptotic_form(moved).X == asymptotic_form(chart).X);
    }
    CHECK_THROWS_AS(transport_chart(chart, ribbon::enumerate(0, 4, {5, 3})[0].graph), DomainError);
}

TEST_CASE("degenerate and malformed charts") {
    auto chart = chart_named("chart_1");
    chart.curves[1] = chart.curves[0];
    CHECK_THROWS_AS(asymptotic_form(chart), SingularMatrixError);
    chart.curves.pop_back();
    CHECK_THROWS(validate_chart(chart));
    nlohmann::json j = chart_to_json(chart_named("chart_1"));
    j["curves"][0] = nlohmann::json::array({99});
    CHECK_THROWS(chart_from_json(j));
}

}  // TEST_SUITE
