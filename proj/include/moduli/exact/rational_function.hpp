#pragma once

#include "moduli/exact/matrix.hpp"
#include "moduli/exact/multipoly.hpp"
#include "moduli/exact/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace moduli::exact {

// s_first when second < 0, otherwise s_first + s_second with first < second (0-based).
struct LinearFactor {
    int first = 0;
    int second = -1;

    static LinearFactor single(int i) { return {i, -1}; }
    static LinearFactor pair(int i, int j);
    bool is_single() const { return second < 0; }
    auto operator<=>(const LinearFactor&) const = default;
};

using Denominator = std::map<LinearFactor, int>;

// Sum of terms numerator / prod(factor^multiplicity) in the variables s1..sn.
// Terms sharing a denominator are merged, so the representation is canonical
// up to cancellation; reduced() performs the cancellation against the factor list.
class RationalFunction {
public:
    using TermMap = std::map<Denominator, MultiPoly<Rational>>;

    RationalFunction() = default;
    explicit RationalFunction(std::size_t nvars);

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Denominator& den, const MultiPoly<Rational>& num);
    void add_term(const Denominator& den, const Rational& scalar);

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const Rational& s);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const Rational& s) { return a *= s; }
    friend RationalFunction operator*(const Rational& s, RationalFunction a) { return a *= s; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.names_ == b.names_ && a.terms_ == b.terms_;
    }

    Rational evaluate(const std::vector<Rational>& s) const;

    // Bound on the degree of the numerator over the least common denominator
    // plus the degree of that denominator.
    int degree_bound() const;

    // Single term over the least common denominator.
    RationalFunction combined() const;
    // Cancels denominator factors that divide the numerator.
    RationalFunction reduced() const;
    // combined + reduced, then split the numerator into monomials, cancelling
    // powers of s_k against single factors.
    RationalFunction simplified() const;
    // Swaps variables according to perm (variable i becomes perm[i]).
    RationalFunction permuted(const std::vector<int>& perm) const;

    std::string to_string() const;

private:
    std::vector<std::string> names_;
    TermMap terms_;
};

// L{prod x_k^m_k} = prod m_k! / s_k^(m_k+1).
RationalFunction laplace(const MultiPoly<Rational>& p);

// prod over columns e of 1/(s_l(e) + s_r(e)), a doubled face giving 2 s_i.
RationalFunction orthant_exponential_integral(const Matrix<std::int64_t>& face_edge, std::size_t nfaces);

struct PointComparison {
    std::vector<Rational> point;
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

std::vector<PointComparison> compare_at_points(const RationalFunction& lhs, const RationalFunction& rhs,
                                               const std::vector<std::vector<Rational>>& points);

}  // namespace moduli::exact
