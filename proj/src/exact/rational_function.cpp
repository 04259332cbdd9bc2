#include "moduli/exact/rational_function.hpp"

#include "moduli/errors.hpp"

#include <algorithm>

namespace moduli::exact {

namespace {

using Poly = MultiPoly<Rational>;

Poly factor_poly(const LinearFactor& f, const std::vector<std::string>& names) {
    Poly p = Poly::variable(names, static_cast<std::size_t>(f.first));
    if (!f.is_single()) p += Poly::variable(names, static_cast<std::size_t>(f.second));
    return p;
}

Rational factor_value(const LinearFactor& f, const std::vector<Rational>& s) {
    Rational v = s[static_cast<std::size_t>(f.first)];
    if (!f.is_single()) v += s[static_cast<std::size_t>(f.second)];
    return v;
}

int denominator_degree(const Denominator& d) {
    int total = 0;
    for (const auto& [f, m] : d) total += m;
    return total;
}

bool divide_by_single(const Poly& p, int var, Poly& quotient) {
    Poly q(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[static_cast<std::size_t>(var)] == 0) return false;
        Exponent f = e;
        --f[static_cast<std::size_t>(var)];
        q.add_term(f, c);
    }
    quotient = q;
    return true;
}

// Synthetic division by (s_i + s_j) viewed as a polynomial in s_i.
bool divide_by_pair(const Poly& p, int i, int j, Poly& quotient) {
    const auto& names = p.vars();
    auto si = static_cast<std::size_t>(i);
    std::map<int, Poly> coeff;
    int top = 0;
    for (const auto& [e, c] : p.terms()) {
        Exponent rest = e;
        int k = rest[si];
        rest[si] = 0;
        coeff.try_emplace(k, Poly(names)).first->second.add_term(rest, c);
        top = std::max(top, k);
    }
    if (top == 0) return false;
    Poly sj = Poly::variable(names, static_cast<std::size_t>(j));
    auto c_at = [&](int k) { auto it = coeff.find(k); return it == coeff.end() ? Poly(names) : it->second; };
    std::vector<Poly> q(static_cast<std::size_t>(top), Poly(names));
    q[static_cast<std::size_t>(top - 1)] = c_at(top);
    for (int k = top - 1; k >= 1; --k) q[static_cast<std::size_t>(k - 1)] = c_at(k) - sj * q[static_cast<std::size_t>(k)];
    Poly remainder = c_at(0) - sj * q[0];
    if (!remainder.is_zero()) return false;
    Poly out(names);
    Poly power = Poly::constant(names, 1);
    Poly x = Poly::variable(names, si);
    for (int k = 0; k < top; ++k) {
        out += q[static_cast<std::size_t>(k)] * power;
        power *= x;
    }
    quotient = out;
    return true;
}

std::string factor_token(const LinearFactor& f, int mult, const std::vector<std::string>& names) {
    std::string t = f.is_single()
                        ? names[static_cast<std::size_t>(f.first)]
                        : "(" + names[static_cast<std::size_t>(f.first)] + " + " + names[static_cast<std::size_t>(f.second)] + ")";
    if (mult > 1) t += "^" + std::to_string(mult);
    return t;
}

}  // namespace

LinearFactor LinearFactor::pair(int i, int j) {
    if (i == j) throw DomainError("a pair factor needs two distinct variables");
    return {std::min(i, j), std::max(i, j)};
}

RationalFunction::RationalFunction(std::size_t nvars) : names_(indexed_names("s", nvars)) {}

void RationalFunction::add_term(const Denominator& den, const MultiPoly<Rational>& num) {
    if (num.vars() != names_) throw DomainError("numerator variables do not match the rational function");
    for (const auto& [f, m] : den) {
        if (m <= 0) throw DomainError("denominator multiplicities must be positive");
        if (f.first < 0 || static_cast<std::size_t>(f.first) >= nvars() ||
            (!f.is_single() && (f.second <= f.first || static_cast<std::size_t>(f.second) >= nvars())))
            throw DomainError("denominator factor out of range");
    }
    if (num.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(den, num);
    if (!inserted) {
        it->second += num;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void RationalFunction::add_term(const Denominator& den, const Rational& scalar) {
    add_term(den, MultiPoly<Rational>::constant(names_, scalar));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (names_.empty() && terms_.empty()) names_ = o.names_;
    if (o.names_ != names_ && !o.terms_.empty()) throw DomainError("rational functions over different variables");
    for (const auto& [d, p] : o.terms_) add_term(d, p);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += o * Rational(-1); }

RationalFunction& RationalFunction::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, p] : terms_) p *= s;
    return *this;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.names_ != b.names_) throw DomainError("rational functions over different variables");
    RationalFunction out(a.nvars());
    for (const auto& [da, pa] : a.terms_)
        for (const auto& [db, pb] : b.terms_) {
            Denominator d = da;
            for (const auto& [f, m] : db) d[f] += m;
            out.add_term(d, pa * pb);
        }
    return out;
}

Rational RationalFunction::evaluate(const std::vector<Rational>& s) const {
    if (s.size() != nvars()) throw DomainError("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [d, p] : terms_) {
        Rational den = 1;
        for (const auto& [f, m] : d) den *= power(factor_value(f, s), m);
        if (den == 0) throw DomainError("evaluation at a pole");
        total += p.evaluate(s) / den;
    }
    return total;
}

int RationalFunction::degree_bound() const {
    Denominator lcd;
    for (const auto& [d, p] : terms_)
        for (const auto& [f, m] : d) lcd[f] = std::max(lcd[f], m);
    int D = denominator_degree(lcd);
    int num = 0;
    for (const auto& [d, p] : terms_) num = std::max(num, p.total_degree() + D - denominator_degree(d));
    return num + D;
}

RationalFunction RationalFunction::combined() const {
    Denominator lcd;
    for (const auto& [d, p] : terms_)
        for (const auto& [f, m] : d) lcd[f] = std::max(lcd[f], m);
    MultiPoly<Rational> num(names_);
    for (const auto& [d, p] : terms_) {
        MultiPoly<Rational> t = p;
        for (const auto& [f, m] : lcd) {
            auto it = d.find(f);
            int have = it == d.end() ? 0 : it->second;
            if (m > have) t *= factor_poly(f, names_).pow(m - have);
        }
        num += t;
    }
    RationalFunction out(nvars());
    out.add_term(lcd, num);
    return out;
}

RationalFunction RationalFunction::reduced() const {
    RationalFunction out(nvars());
    for (const auto& [d, p] : terms_) {
        Denominator den = d;
        MultiPoly<Rational> num = p;
        for (auto& [f, m] : den) {
            MultiPoly<Rational> q;
            while (m > 0 && (f.is_single() ? divide_by_single(num, f.first, q) : divide_by_pair(num, f.first, f.second, q))) {
                num = q;
                --m;
            }
        }
        std::erase_if(den, [](const auto& kv) { return kv.second == 0; });
        out.add_term(den, num);
    }
    return out;
}

RationalFunction RationalFunction::simplified() const {
    RationalFunction r = combined().reduced();
    RationalFunction out(nvars());
    for (const auto& [d, p] : r.terms_) {
        for (const auto& [e, c] : p.terms()) {
            Denominator den = d;
            Exponent rest = e;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                auto it = den.find(LinearFactor::single(static_cast<int>(k)));
                if (it == den.end()) continue;
                int t = std::min(rest[k], it->second);
                rest[k] -= t;
                it->second -= t;
                if (it->second == 0) den.erase(it);
            }
            out.add_term(den, MultiPoly<Rational>::monomial(names_, rest, c));
        }
    }
    return out;
}

RationalFunction RationalFunction::permuted(const std::vector<int>& perm) const {
    if (perm.size() != nvars()) throw DomainError("permutation has wrong length");
    std::vector<std::size_t> target(perm.begin(), perm.end());
    RationalFunction out(nvars());
    for (const auto& [d, p] : terms_) {
        Denominator den;
        for (const auto& [f, m] : d) {
            LinearFactor g = f.is_single() ? LinearFactor::single(perm[static_cast<std::size_t>(f.first)])
                                           : LinearFactor::pair(perm[static_cast<std::size_t>(f.first)],
                                                                perm[static_cast<std::size_t>(f.second)]);
            den[g] += m;
        }
        out.add_term(den, p.remap(names_, target));
    }
    return out;
}

std::string RationalFunction::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, p] : terms_) {
        bool constant = p.terms().size() == 1 && p.total_degree() == 0;
        Rational c = constant ? p.terms().begin()->second : Rational(1);
        bool negative = constant && sgn(c) < 0;
        std::string numerator = constant ? Integer(::abs(c.get_num())).get_str() : "(" + exact::to_string(p) + ")";
        std::vector<std::string> tokens;
        if (constant && c.get_den() != 1) tokens.push_back(c.get_den().get_str());
        for (const auto& [f, m] : d)
            if (f.is_single()) tokens.push_back(factor_token(f, m, names_));
        for (const auto& [f, m] : d)
            if (!f.is_single()) tokens.push_back(factor_token(f, m, names_));
        std::string term = numerator;
        if (tokens.size() == 1)
            term += "/" + tokens[0];
        else if (tokens.size() > 1) {
            term += "/(";
            for (std::size_t k = 0; k < tokens.size(); ++k) term += (k ? " " : "") + tokens[k];
            term += ")";
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += term;
        first = false;
    }
    return out;
}

RationalFunction laplace(const MultiPoly<Rational>& p) {
    RationalFunction out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Denominator den;
        Rational scalar = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            den[LinearFactor::single(static_cast<int>(k))] = e[k] + 1;
            scalar *= Rational(factorial(e[k]));
        }
        out.add_term(den, scalar);
    }
    return out;
}

RationalFunction orthant_exponential_integral(const Matrix<std::int64_t>& face_edge, std::size_t nfaces) {
    if (face_edge.rows() != nfaces) throw DomainError("face-edge matrix row count differs from face count");
    Denominator den;
    Rational scalar = 1;
    for (std::size_t e = 0; e < face_edge.cols(); ++e) {
        std::vector<int> rows;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < face_edge.rows(); ++i) {
            std::int64_t v = face_edge(i, e);
            total += v;
            for (std::int64_t k = 0; k < v; ++k) rows.push_back(static_cast<int>(i));
        }
        if (total != 2) throw DomainError("face-edge column " + std::to_string(e) + " does not sum to 2");
        if (rows[0] == rows[1]) {
            den[LinearFactor::single(rows[0])] += 1;
            scalar /= 2;
        } else {
            den[LinearFactor::pair(rows[0], rows[1])] += 1;
        }
    }
    RationalFunction out(nfaces);
    out.add_term(den, scalar);
    return out;
}

std::vector<PointComparison> compare_at_points(const RationalFunction& lhs, const RationalFunction& rhs,
                                               const std::vector<std::vector<Rational>>& points) {
    std::vector<PointComparison> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        PointComparison c;
        c.point = p;
        c.lhs = lhs.evaluate(p);
        c.rhs = rhs.evaluate(p);
        c.equal = c.lhs == c.rhs;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace moduli::exact
