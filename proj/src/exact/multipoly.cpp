#include "moduli/exact/multipoly.hpp"

namespace moduli::exact {

std::vector<std::string> indexed_names(const std::string& base, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back(base + std::to_string(i));
    return names;
}

std::string to_string(const MultiPoly<Rational>& p) {
    if (p.is_zero()) return "0";
    // highest total degree first, then lexicographically larger exponents first
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        int dx = 0, dy = 0;
        for (int k : x.first) dx += k;
        for (int k : y.first) dy += k;
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        Integer num = ::abs(c.get_num());
        const Integer& den = c.get_den();
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.vars()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty())
            term = num.get_str();
        else
            term = num == 1 ? mono : num.get_str() + "*" + mono;
        if (den != 1) term += "/" + den.get_str();
        out += term;
    }
    return out;
}

}  // namespace moduli::exact
