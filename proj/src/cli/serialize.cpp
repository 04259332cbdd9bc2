#include "moduli/cli/serialize.hpp"

#include <sstream>

namespace moduli::cli {

json to_json(const exact::Rational& q) { return exact::to_string(q); }

json to_json(const exact::QuadExt& x) {
    json j = {{"a", exact::to_string(x.a())}, {"b", exact::to_string(x.b())}};
    if (!x.is_rational()) j["D"] = x.radicand();
    return j;
}

json to_json(const exact::MultiPoly<exact::Rational>& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", exact::to_string(c)}});
    return {{"vars", p.vars()}, {"terms", terms}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string latex_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
        out += c;
    }
    return "$" + out + "$";
}

}  // namespace

std::string to_csv(const Table& t) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out.str();
}

std::string to_latex(const Table& t) {
    std::ostringstream out;
    out << "\\begin{tabular}{" << std::string(t.header.size(), 'l') << "}\n\\hline\n";
    for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? " & " : "") << t.header[i];
    out << " \\\\\n\\hline\n";
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " & " : "") << latex_cell(r[i]);
        out << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return out.str();
}

}  // namespace moduli::cli
