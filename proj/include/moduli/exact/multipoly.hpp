#pragma once

#include "moduli/errors.hpp"
#include "moduli/exact/quad_ext.hpp"
#include "moduli/exact/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace moduli::exact {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over named variables. No zero coefficient is stored.
template <class T>
class MultiPoly {
public:
    using TermMap = std::map<Exponent, T>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const T& c) {
        MultiPoly p(std::move(vars));
        p.add_term(Exponent(p.nvars(), 0), c);
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index) {
        MultiPoly p(std::move(vars));
        if (index >= p.nvars()) throw DomainError("variable index out of range");
        Exponent e(p.nvars(), 0);
        e[index] = 1;
        p.add_term(e, T(1));
        return p;
    }
    static MultiPoly monomial(std::vector<std::string> vars, Exponent e, const T& c) {
        MultiPoly p(std::move(vars));
        p.add_term(e, c);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - vars_.begin());
    }

    void add_term(const Exponent& e, const T& c) {
        if (e.size() != nvars()) throw DomainError("exponent length does not match variable count");
        for (int k : e)
            if (k < 0) throw DomainError("negative exponent");
        if (c == T(0)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == T(0)) terms_.erase(it);
        }
    }

    T coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = degree_of(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (degree_of(e) != d) return false;
        return true;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, T(-c));
        return *this;
    }
    MultiPoly& operator*=(const T& s) {
        if (s == T(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= T(-1); }
    friend MultiPoly operator*(MultiPoly a, const T& s) { return a *= s; }
    friend MultiPoly operator*(const T& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly p(a.vars_);
        Exponent e(a.nvars());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                p.add_term(e, T(ca * cb));
            }
        return p;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int k) const {
        if (k < 0) throw DomainError("negative polynomial power");
        MultiPoly result = constant(vars_, T(1));
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return result;
    }

    template <class U = T>
    U evaluate(const std::vector<U>& point) const {
        if (point.size() != nvars()) throw DomainError("evaluation point has wrong dimension");
        U total = U(0);
        for (const auto& [e, c] : terms_) {
            U t = U(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            total += t;
        }
        return total;
    }

    // Replaces variable `var` by `value`, a polynomial over the same variables.
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
        check_vars(value);
        std::map<int, MultiPoly> by_power;
        for (const auto& [e, c] : terms_) {
            Exponent rest = e;
            int k = rest[var];
            rest[var] = 0;
            auto [it, ins] = by_power.try_emplace(k, MultiPoly(vars_));
            it->second.add_term(rest, c);
        }
        MultiPoly out(vars_);
        MultiPoly power = constant(vars_, T(1));
        int have = 0;
        for (const auto& [k, coeff] : by_power) {
            while (have < k) {
                power *= value;
                ++have;
            }
            out += coeff * power;
        }
        return out;
    }

    MultiPoly antiderivative(std::size_t var) const {
        MultiPoly out(vars_);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            f[var] += 1;
            out.add_term(f, T(c / T(f[var])));
        }
        return out;
    }

    // Signed definite integral in `var` between polynomial bounds.
    MultiPoly integrate(std::size_t var, const MultiPoly& lower, const MultiPoly& upper) const {
        for (const MultiPoly* b : {&lower, &upper})
            for (const auto& [e, c] : b->terms_)
                if (e[var] != 0) throw DomainError("integration bound depends on the integration variable");
        MultiPoly F = antiderivative(var);
        return F.substitute(var, upper) - F.substitute(var, lower);
    }

    // Re-expresses the polynomial over `new_vars`; variable i moves to position target[i].
    MultiPoly remap(std::vector<std::string> new_vars, const std::vector<std::size_t>& target) const {
        if (target.size() != nvars()) throw DomainError("remap target has wrong length");
        MultiPoly out(std::move(new_vars));
        for (const auto& [e, c] : terms_) {
            Exponent f(out.nvars(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (target[i] >= f.size()) throw DomainError("remap target out of range");
                f[target[i]] += e[i];
            }
            out.add_term(f, c);
        }
        return out;
    }

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    static int degree_of(const Exponent& e) {
        int d = 0;
        for (int k : e) d += k;
        return d;
    }
    void check_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw DomainError("polynomials over different variable sets");
    }
};

// Variable names base1..baseN.
std::vector<std::string> indexed_names(const std::string& base, std::size_t count);

// Human-readable form such as "L1^3/48" or "3*L1*L2^3/2 + L3".
std::string to_string(const MultiPoly<Rational>& p);

}  // namespace moduli::exact
