#include "moduli/wittencycle/chart.hpp"

#include "moduli/errors.hpp"
#include "moduli/exact/linalg.hpp"
#include "moduli/ribbon/enumerate.hpp"
#include "moduli/ribbon/graph_json.hpp"
#include "moduli/ribbon/matrices.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace moduli::wittencycle {

using json = nlohmann::json;

namespace {

Rational rational_field(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return exact::parse_rational(j.get<std::string>());
    throw DomainError("expected an integer or a \"p/q\" string");
}

QuadExt quad_from_json(const json& j) {
    if (!j.is_object()) return QuadExt(rational_field(j));
    Rational a = rational_field(j.at("a"));
    Rational b = j.contains("b") ? rational_field(j.at("b")) : Rational(0);
    if (b == 0) return QuadExt(a);
    return QuadExt(a, b, j.at("D").get<long>());
}

json quad_to_json(const QuadExt& x) {
    json j = {{"a", exact::to_string(x.a())}, {"b", exact::to_string(x.b())}};
    if (!x.is_rational()) j["D"] = x.radicand();
    return j;
}

}  // namespace

void validate_chart(const CellChart& chart) {
    const int g = chart.graph.genus(), n = chart.graph.face_count();
    const std::size_t expected = static_cast<std::size_t>(6 * g - 6 + 2 * n);
    if (chart.curves.size() != expected)
        throw InvalidGraphError("chart '" + chart.name + "' has " + std::to_string(chart.curves.size()) +
                                " curves; type (" + std::to_string(g) + "," + std::to_string(n) + ") needs " +
                                std::to_string(expected));
    for (const auto& c : chart.curves) validate_multicurve(chart.graph, c);
    for (const auto& o : chart.angle_overrides) {
        if (o.vertex < 0 || o.vertex >= chart.graph.vertex_count()) throw InvalidGraphError("angle override vertex out of range");
        if (o.first < 0 || o.second < 0 || o.first >= static_cast<int>(expected) || o.second >= static_cast<int>(expected) ||
            o.first == o.second)
            throw InvalidGraphError("angle override refers to an invalid curve pair");
    }
}

CellChart chart_from_json(const json& j, std::string name) {
    CellChart chart{std::move(name), ribbon::graph_from_json(j.at("graph")), {}, {}, {}};
    for (const auto& curve : j.at("curves")) {
        std::vector<std::vector<int>> components;
        if (!curve.empty() && curve.front().is_array()) components = curve.get<std::vector<std::vector<int>>>();
        else if (!curve.empty()) components.push_back(curve.get<std::vector<int>>());
        chart.curves.push_back(multicurve_from_signed(chart.graph, components));
    }
    if (j.contains("cell_coordinates"))
        for (int k : j.at("cell_coordinates").get<std::vector<int>>()) chart.cell_coordinates.push_back(k - 1);
    else
        chart.cell_coordinates = default_cell_coordinates(chart.graph);
    if (j.contains("angle_overrides"))
        for (const auto& o : j.at("angle_overrides")) {
            auto pair = o.at("pair").get<std::vector<int>>();
            if (pair.size() != 2) throw InvalidGraphError("angle override pair must have two curves");
            chart.angle_overrides.push_back({o.at("vertex").get<int>(), pair[0] - 1, pair[1] - 1, quad_from_json(o.at("cos"))});
        }
    validate_chart(chart);
    return chart;
}

json chart_to_json(const CellChart& chart) {
    json curves = json::array();
    for (const auto& c : chart.curves) curves.push_back(multicurve_to_signed(chart.graph, c));
    json coords = json::array();
    for (int k : chart.cell_coordinates) coords.push_back(k + 1);
    json overrides = json::array();
    for (const auto& o : chart.angle_overrides)
        overrides.push_back({{"vertex", o.vertex}, {"pair", {o.first + 1, o.second + 1}}, {"cos", quad_to_json(o.cos)}});
    return {{"graph", ribbon::graph_to_json(chart.graph)}, {"curves", curves}, {"cell_coordinates", coords},
            {"angle_overrides", overrides}};
}

CellChart load_chart(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open chart file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError("chart file " + path + " is not valid JSON: " + e.what());
    }
    return chart_from_json(j, std::filesystem::path(path).stem().string());
}

std::vector<CellChart> load_charts(const std::string& directory) {
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(directory)) throw DomainError("chart directory " + directory + " does not exist");
    for (const auto& entry : std::filesystem::directory_iterator(directory))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<CellChart> charts;
    for (const auto& f : files) charts.push_back(load_chart(f.string()));
    return charts;
}

std::string default_chart_directory() { return std::string(MODULI_DATA_DIR) + "/charts"; }

CellChart transport_chart(const CellChart& chart, const RibbonGraph& target) {
    auto phi = ribbon::find_isomorphism(chart.graph, target, false);
    if (!phi) throw DomainError("chart '" + chart.name + "' does not fit the target graph");
    const auto& map = *phi;
    CellChart out{chart.name, target, {}, {}, {}};
    for (const auto& c : chart.curves) {
        Multicurve m;
        for (const auto& w : c.components) {
            Walk t;
            for (int h : w) t.push_back(map[static_cast<std::size_t>(h)]);
            m.components.push_back(std::move(t));
        }
        out.curves.push_back(std::move(m));
    }
    for (int k : chart.cell_coordinates)
        out.cell_coordinates.push_back(target.edge_of(map[static_cast<std::size_t>(chart.graph.positive_half_edge(k))]));
    for (auto o : chart.angle_overrides) {
        o.vertex = target.vertex_of(map[static_cast<std::size_t>(chart.graph.vertices()[static_cast<std::size_t>(o.vertex)][0])]);
        out.angle_overrides.push_back(o);
    }
    validate_chart(out);
    return out;
}

CellChart standard_chart(const RibbonGraph& graph) {
    auto all = standard_multicurves(graph);
    QuadMatrix X = intersection_matrix(graph, all);
    CellChart chart{"standard", graph, {}, default_cell_coordinates(graph), {}};
    for (std::size_t k : exact::independent_rows(X)) chart.curves.push_back(all[k]);
    validate_chart(chart);
    return chart;
}

AsymptoticForm asymptotic_form(const CellChart& chart) {
    AsymptoticForm f;
    f.X = intersection_matrix(chart.graph, chart.curves, chart.angle_overrides);
    try {
        f.X_inverse = exact::inverse(f.X);
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("chart '" + chart.name + "' is degenerate: its intersection matrix is singular");
    }
    const std::size_t N = chart.curves.size(), E = static_cast<std::size_t>(chart.graph.edge_count());
    f.lengths = exact::Matrix<Rational>(N, E);
    for (std::size_t i = 0; i < N; ++i) {
        auto len = limit_length(chart.graph, chart.curves[i]);
        for (std::size_t k = 0; k < E; ++k) f.lengths(i, k) = len[k];
    }
    QuadMatrix C = f.lengths.cast<QuadExt>();
    f.edge_form = -(C.transpose() * f.X_inverse * C);
    f.coordinates = chart.cell_coordinates.empty() ? default_cell_coordinates(chart.graph) : chart.cell_coordinates;
    QuadMatrix P = cell_parametrisation(chart.graph, f.coordinates).cast<QuadExt>();
    f.cell_form = P.transpose() * f.edge_form * P;
    return f;
}

QuadExt cell_pfaffian(const AsymptoticForm& form) { return exact::pfaffian(form.cell_form); }

CellVolume witten_cell_volume_laplace(const CellChart& chart) {
    CellVolume v{asymptotic_form(chart), 0, {}};
    const auto A = ribbon::face_edge_matrix(chart.graph).cast<Rational>();
    const std::size_t n = A.rows(), E = A.cols();
    exact::Matrix<Rational> J(E, E);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < E; ++k) J(i, k) = A(i, k);
    for (std::size_t a = 0; a < v.form.coordinates.size(); ++a) J(n + a, static_cast<std::size_t>(v.form.coordinates[a])) = 1;
    const Rational jacobian = abs(exact::determinant(J));
    if (jacobian == 0) throw SingularMatrixError("cell coordinates are not free on the cell");
    QuadExt density = exact::abs(cell_pfaffian(v.form)) * QuadExt(jacobian);
    if (!density.is_rational()) throw DomainError("cell density " + exact::to_string(density) + " is irrational");
    v.density = density.a();
    v.laplace = exact::orthant_exponential_integral(ribbon::face_edge_matrix(chart.graph), n) * v.density;
    return v;
}

}  // namespace moduli::wittencycle
