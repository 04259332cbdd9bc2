#pragma once

#include "moduli/exact/matrix.hpp"
#include "moduli/exact/multipoly.hpp"
#include "moduli/exact/quad_ext.hpp"
#include "moduli/exact/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace moduli::cli {

using nlohmann::json;

json to_json(const exact::Rational& q);
// {"a": "p/q", "b": "p/q", "D": d}, D omitted for rationals.
json to_json(const exact::QuadExt& x);
// {"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}]}
json to_json(const exact::MultiPoly<exact::Rational>& p);

template <class T>
json matrix_to_json(const exact::Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// Rows of strings with a header line.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
std::string to_latex(const Table& t);

}  // namespace moduli::cli
