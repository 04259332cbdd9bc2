#pragma once

#include "moduli/exact/multipoly.hpp"
#include "moduli/exact/rational_function.hpp"

#include <map>
#include <vector>

namespace moduli::volumes {

using exact::Rational;
using Poly = exact::MultiPoly<Rational>;

// W_{g,n}(L1..Ln): perimeter product times the Kontsevich volume.
struct VolumePolynomial {
    int g = 0;
    int n = 0;
    Poly poly;
};

// <psi_1^a1 ... psi_n^an> for every alpha with |alpha| = 3g-3+n.
struct IntersectionTable {
    int g = 0;
    int n = 0;
    std::map<std::vector<int>, Rational> values;
};

bool is_stable(int g, int n);
// Throws DomainError for unstable types.
void require_stable(int g, int n);
int moduli_dimension(int g, int n);  // 3g-3+n

// W_{0,3} = L1 L2 L3 and W_{1,1} = L1^3/48; any other type is an error.
VolumePolynomial base_case(int g, int n);

// Recursion from the base cases, memoized by (g, n); safe to call concurrently.
// Types with n = 0 are rejected.
VolumePolynomial kontsevich_volume(int g, int n);

IntersectionTable psi_numbers(int g, int n);

// sum over alpha of <psi^alpha> prod (2 alpha_k - 1)!! / s_k^(2 alpha_k + 1).
exact::RationalFunction lhs_laplace(int g, int n);

// sum over alpha of <psi^alpha> x^(2 alpha) / (2^(3g-3+n) prod alpha_k!), in x1..xn.
Poly wp_volume_asymptotic(int g, int n);

// All alpha in N^n with |alpha| = total, in lexicographic order.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace moduli::volumes
