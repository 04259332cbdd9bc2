#include "moduli/cli/commands.hpp"

#include "moduli/errors.hpp"
#include "moduli/hypgeom/hypgeom.hpp"
#include "moduli/kformula/kformula.hpp"
#include "moduli/ribbon/enumerate.hpp"
#include "moduli/ribbon/graph_json.hpp"
#include "moduli/volumes/volumes.hpp"
#include "moduli/wittencycle/witten12.hpp"

#include <sstream>

namespace moduli::cli {

namespace {

using exact::Rational;

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
    return out.str();
}

std::string join(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + exact::to_string(v[i]);
    return out;
}

std::string cell_text(const exact::QuadExt& x) { return exact::to_string(x); }
std::string cell_text(const Rational& x) { return exact::to_string(x); }

template <class T>
std::string matrix_text(const exact::Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + cell_text(m(i, j));
    }
    return out;
}

void require_type(const RunConfig& c) {
    if (c.g < 0 || c.n < 1) throw UnsupportedInputError("need g >= 0 and n >= 1");
}

json psi_json(const volumes::IntersectionTable& t) {
    json out = json::array();
    for (const auto& [alpha, value] : t.values) out.push_back({{"alpha", alpha}, {"value", exact::to_string(value)}});
    return out;
}

std::string rational_key(const std::map<std::vector<int>, Rational>& values, const std::vector<int>& alpha) {
    auto it = values.find(alpha);
    return it == values.end() ? std::string() : exact::to_string(it->second);
}

}  // namespace

CommandResult cmd_enumerate(const RunConfig& config) {
    require_type(config);
    for (int d : config.degrees)
        if (d < 1) throw UnsupportedInputError("vertex degrees must be positive");
    const auto graphs = config.degrees.empty() ? ribbon::enumerate_trivalent(config.g, config.n)
                                               : ribbon::enumerate(config.g, config.n, config.degrees);
    CommandResult r;
    r.table.header = {"index", "automorphisms", "s0", "s1", "face_labels"};
    json list = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& gr = graphs[i].graph;
        list.push_back({{"index", i}, {"automorphisms", graphs[i].automorphisms}, {"graph", ribbon::graph_to_json(gr)}});
        r.table.rows.push_back({std::to_string(i), std::to_string(graphs[i].automorphisms), join(gr.s0_permutation()),
                                join(gr.s1_permutation()), join(gr.face_labels())});
    }
    r.body = {{"command", "enumerate"}, {"g", config.g},          {"n", config.n},
              {"degrees", config.degrees}, {"count", graphs.size()}, {"graphs", list}};
    return r;
}

CommandResult cmd_volume(const RunConfig& config) {
    require_type(config);
    const auto W = volumes::kontsevich_volume(config.g, config.n);
    const auto psi = volumes::psi_numbers(config.g, config.n);
    CommandResult r;
    r.body = {{"command", "volume"}, {"g", config.g},          {"n", config.n},
              {"W", exact::to_string(W.poly)}, {"W_poly", to_json(W.poly)}, {"psi", psi_json(psi)}};
    r.table.header = {"monomial", "coefficient"};
    for (const auto& [e, c] : W.poly.terms()) {
        auto mono = exact::MultiPoly<Rational>::monomial(W.poly.vars(), e, Rational(1));
        r.table.rows.push_back({exact::to_string(mono), exact::to_string(c)});
    }
    return r;
}

CommandResult cmd_psi(const RunConfig& config) {
    require_type(config);
    const auto psi = volumes::psi_numbers(config.g, config.n);
    CommandResult r;
    r.body = {{"command", "psi"}, {"g", config.g}, {"n", config.n}, {"psi", psi_json(psi)}};
    r.table.header = {"alpha", "value"};
    for (const auto& [alpha, value] : psi.values) r.table.rows.push_back({join(alpha), exact::to_string(value)});
    return r;
}

CommandResult cmd_verify_kcf(const RunConfig& config) {
    require_type(config);
    if (!config.seed) throw UnsupportedInputError("verify-kcf requires --seed");
    const auto report = kformula::verify_kcf(config.g, config.n, config.trials, *config.seed);
    CommandResult r;
    json points = json::array();
    r.table.header = {"point", "lhs", "rhs", "equal"};
    for (const auto& p : report.points) {
        json s = json::array();
        for (const auto& x : p.point) s.push_back(exact::to_string(x));
        points.push_back({{"s", s}, {"lhs", exact::to_string(p.lhs)}, {"rhs", exact::to_string(p.rhs)}, {"equal", p.equal}});
        r.table.rows.push_back({join(p.point), exact::to_string(p.lhs), exact::to_string(p.rhs), p.equal ? "true" : "false"});
    }
    r.body = {{"command", "verify-kcf"},
              {"g", report.g},
              {"n", report.n},
              {"trials", report.trials},
              {"seed", report.seed},
              {"degree_bound", report.degree_bound},
              {"graph_count", report.graph_count},
              {"equal", report.equal},
              {"first_mismatch", report.first_mismatch ? json(*report.first_mismatch) : json(nullptr)},
              {"points", points}};
    r.exit_code = report.equal ? kOk : kVerificationFailed;
    return r;
}

CommandResult cmd_identities(const RunConfig& config) {
    require_type(config);
    const auto graphs = ribbon::enumerate_trivalent(config.g, config.n);
    const auto batch = kformula::verify_form_identities(graphs);
    CommandResult r;
    r.table.header = {"index", "ratio", "rank_B", "ker_B_im_At", "bkb", "kernel_action", "restriction", "independent",
                      "density"};
    json list = json::array();
    bool stated = !graphs.empty();
    for (std::size_t i = 0; i < batch.graphs.size(); ++i) {
        const auto& g = batch.graphs[i];
        stated = stated && g.bkb_stated && g.kernel_action_stated && g.restriction_match_stated;
        const std::string ratio = g.ratio ? exact::to_string(*g.ratio) : "";
        list.push_back({{"index", i},
                        {"ratio", g.ratio ? json(ratio) : json(nullptr)},
                        {"epsilon", g.epsilon ? json(*g.epsilon) : json(nullptr)},
                        {"bkb", g.bkb},
                        {"kernel_action", g.kernel_action},
                        {"restriction_match", g.restriction_match},
                        {"bkb_stated", g.bkb_stated},
                        {"kernel_action_stated", g.kernel_action_stated},
                        {"restriction_match_stated", g.restriction_match_stated},
                        {"nondegenerate", g.nondegenerate},
                        {"restricted_rank", g.restricted_rank},
                        {"distinguished_independent", g.distinguished_independent},
                        {"b_rank", g.b_rank},
                        {"b_rank_ok", g.b_rank_ok},
                        {"kernel_is_image", g.kernel_is_image},
                        {"density", exact::to_string(g.density)},
                        {"density_ok", g.density_ok},
                        {"ok", g.ok()}});
        r.table.rows.push_back({std::to_string(i), ratio, std::to_string(g.b_rank), g.kernel_is_image ? "true" : "false",
                                g.bkb ? "true" : "false", g.kernel_action ? "true" : "false",
                                g.restriction_match ? "true" : "false", g.distinguished_independent ? "true" : "false",
                                exact::to_string(g.density)});
    }
    r.body = {{"command", "identities"},
              {"g", config.g},
              {"n", config.n},
              {"graph_count", graphs.size()},
              {"epsilon", batch.epsilon ? json(*batch.epsilon) : json(nullptr)},
              {"form_scale", kformula::kFormScale},
              {"form_scale_stated", kformula::kFormScaleStated},
              {"stated_scale_holds", stated},
              {"uniform", batch.uniform},
              {"ok", batch.ok},
              {"graphs", list}};
    r.exit_code = batch.ok ? kOk : kVerificationFailed;
    return r;
}

CommandResult cmd_witten12(const RunConfig& config) {
    const auto charts = wittencycle::load_charts(config.charts.empty() ? wittencycle::default_chart_directory()
                                                                       : config.charts);
    const auto report = wittencycle::witten12(charts);
    CommandResult r;
    r.table.header = {"index", "chart", "X", "cell_form", "density", "laplace"};
    json cells = json::array();
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        const auto& c = report.cells[i];
        const auto& f = c.volume.form;
        json curves = json::array();
        for (const auto& m : c.chart.curves) curves.push_back(wittencycle::multicurve_to_signed(c.chart.graph, m));
        std::vector<int> coords;
        for (int e : f.coordinates) coords.push_back(e + 1);
        cells.push_back({{"index", i},
                         {"automorphisms", c.graph.automorphisms},
                         {"graph", ribbon::graph_to_json(c.graph.graph)},
                         {"chart", c.chart.name},
                         {"curves", curves},
                         {"X", matrix_to_json(f.X)},
                         {"X_inverse", matrix_to_json(f.X_inverse)},
                         {"lengths", matrix_to_json(f.lengths)},
                         {"cell_coordinates", coords},
                         {"cell_form", matrix_to_json(f.cell_form)},
                         {"density", exact::to_string(c.volume.density)},
                         {"laplace", c.volume.laplace.simplified().to_string()}});
        r.table.rows.push_back({std::to_string(i), c.chart.name, matrix_text(f.X), matrix_text(f.cell_form),
                                exact::to_string(c.volume.density), c.volume.laplace.simplified().to_string()});
    }
    const auto& in = report.intersections;
    r.body = {{"command", "witten12"},
              {"cell_count", report.cells.size()},
              {"cells", cells},
              {"total_laplace", report.total.to_string()},
              {"cycle_dimension", in.cycle_dimension},
              {"psi1", rational_key(in.values, {1, 0})},
              {"psi2", rational_key(in.values, {0, 1})},
              {"plain_transform", {{"psi1", rational_key(in.plain_transform_values, {1, 0})},
                                   {"psi2", rational_key(in.plain_transform_values, {0, 1})}}},
              {"consistent", in.consistent},
              {"seed", 1}};
    r.exit_code = in.consistent ? kOk : kVerificationFailed;
    return r;
}

CommandResult cmd_angle(const RunConfig& config) {
    if (config.chord1.size() != 2 || config.chord2.size() != 2)
        throw UnsupportedInputError("chords are given as two vertex indices, e.g. 0,2");
    const hypgeom::IdealPolygonChord c1(config.d, config.chord1[0], config.chord1[1]);
    const hypgeom::IdealPolygonChord c2(config.d, config.chord2[0], config.chord2[1]);
    const auto acute = hypgeom::ideal_crossing_angle(c1, c2);
    const auto directed = hypgeom::directed_crossing_cosine(c1, c2);
    const double numeric = hypgeom::directed_crossing_cosine_numeric(c1, c2);
    auto exact_json = [](const hypgeom::CrossingCosine& c) { return c.exact ? to_json(*c.exact) : json(nullptr); };
    auto exact_text = [](const hypgeom::CrossingCosine& c) { return c.exact ? exact::to_string(*c.exact) : ""; };
    CommandResult r;
    r.body = {{"command", "angle"},
              {"d", config.d},
              {"chord1", config.chord1},
              {"chord2", config.chord2},
              {"cos", acute.value},
              {"cos_exact", exact_json(acute)},
              {"directed_cos", directed.value},
              {"directed_cos_exact", exact_json(directed)},
              {"directed_cos_numeric", numeric}};
    std::ostringstream v;
    v.precision(17);
    v << acute.value;
    r.table.header = {"d", "chord1", "chord2", "cos", "cos_exact"};
    r.table.rows.push_back({std::to_string(config.d), join(config.chord1, ","), join(config.chord2, ","), v.str(),
                            exact_text(acute)});
    return r;
}

CommandResult run(const RunConfig& config) {
    try {
        if (config.command == "enumerate") return cmd_enumerate(config);
        if (config.command == "volume") return cmd_volume(config);
        if (config.command == "psi") return cmd_psi(config);
        if (config.command == "verify-kcf") return cmd_verify_kcf(config);
        if (config.command == "identities") return cmd_identities(config);
        if (config.command == "witten12") return cmd_witten12(config);
        if (config.command == "angle") return cmd_angle(config);
        throw UnsupportedInputError("unknown command '" + config.command + "'");
    } catch (const VerificationError& e) {
        return {{{"error", e.what()}, {"kind", e.kind()}}, {}, kVerificationFailed};
    } catch (const Error& e) {
        return {{{"error", e.what()}, {"kind", e.kind()}}, {}, kUsageError};
    } catch (const nlohmann::json::exception& e) {
        return {{{"error", e.what()}, {"kind", "invalid_json"}}, {}, kUsageError};
    }
}

std::string render(const CommandResult& result, const std::string& format) {
    if (format == "json" || result.body.contains("error")) return result.body.dump(2) + "\n";
    if (format == "csv") return to_csv(result.table);
    if (format == "latex") return to_latex(result.table);
    throw UnsupportedInputError("unknown format '" + format + "'");
}

}  // namespace moduli::cli
