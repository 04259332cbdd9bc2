#include "moduli/volumes/volumes.hpp"

#include "moduli/errors.hpp"

#include <mutex>
#include <string>
#include <utility>

namespace moduli::volumes {

namespace {

using exact::Exponent;

std::string type_name(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

std::mutex cache_mutex;
std::map<std::pair<int, int>, Poly> cache;

// Moves W_{g', k} into the working variables: its first variable goes to `first`,
// the remaining ones to `rest` in order.
Poly place(const Poly& w, const std::vector<std::string>& work, std::size_t first, const std::vector<std::size_t>& rest) {
    std::vector<std::size_t> target{first};
    target.insert(target.end(), rest.begin(), rest.end());
    return w.remap(work, target);
}

// W_{g,m}(L0, L_S) with L0 = L1 and S = {L2..Lm} in the output naming.
Poly recurse(int g, int m) {
    const auto names = exact::indexed_names("L", static_cast<std::size_t>(m));
    std::vector<std::string> work = names;
    work.push_back("x");
    work.push_back("y");
    const std::size_t X = static_cast<std::size_t>(m), Y = X + 1;
    auto var = [&](std::size_t i) { return Poly::variable(work, i); };
    const Poly zero(work);
    const Poly L0 = var(0), x = var(X), y = var(Y);
    const Rational half(1, 2);

    std::vector<std::size_t> S;
    for (std::size_t k = 1; k < static_cast<std::size_t>(m); ++k) S.push_back(k);

    Poly result = zero;
    if (!S.empty() && is_stable(g, m - 1)) {
        const Poly w = kontsevich_volume(g, m - 1).poly;
        for (std::size_t k : S) {
            std::vector<std::size_t> others;
            for (std::size_t j : S)
                if (j != k) others.push_back(j);
            Poly wk = place(w, work, X, others);
            Poly Lk = var(k);
            Poly first = ((L0 - x) * wk).integrate(X, zero, L0 - Lk);
            Poly second = ((L0 + Lk - x) * wk * half).integrate(X, L0 - Lk, L0 + Lk);
            result += Lk * (first + second);
        }
    }

    Poly inner = zero;
    if (g >= 1 && is_stable(g - 1, m + 1)) {
        std::vector<std::size_t> rest{Y};
        rest.insert(rest.end(), S.begin(), S.end());
        inner += place(kontsevich_volume(g - 1, m + 1).poly, work, X, rest);
    }
    const std::size_t subsets = std::size_t{1} << S.size();
    for (int g1 = 0; g1 <= g; ++g1) {
        int g2 = g - g1;
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<std::size_t> I1, I2;
            for (std::size_t b = 0; b < S.size(); ++b) ((mask >> b) & 1 ? I1 : I2).push_back(S[b]);
            int n1 = static_cast<int>(I1.size()) + 1, n2 = static_cast<int>(I2.size()) + 1;
            if (!is_stable(g1, n1) || !is_stable(g2, n2)) continue;
            inner += place(kontsevich_volume(g1, n1).poly, work, X, I1) * place(kontsevich_volume(g2, n2).poly, work, Y, I2);
        }
    }
    if (!inner.is_zero()) {
        Poly integrand = (L0 - x - y) * inner * half;
        result += integrand.integrate(Y, zero, L0 - x).integrate(X, zero, L0);
    }

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < work.size(); ++i) keep.push_back(i < names.size() ? i : 0);
    return result.remap(names, keep);
}

}  // namespace

bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 - 2 * g - n < 0; }

void require_stable(int g, int n) {
    if (!is_stable(g, n)) throw DomainError("type " + type_name(g, n) + " is not stable (need 2 - 2g - n < 0)");
}

int moduli_dimension(int g, int n) { return 3 * g - 3 + n; }

VolumePolynomial base_case(int g, int n) {
    auto names = exact::indexed_names("L", static_cast<std::size_t>(std::max(n, 0)));
    if (g == 0 && n == 3) return {0, 3, Poly::monomial(names, {1, 1, 1}, 1)};
    if (g == 1 && n == 1) return {1, 1, Poly::monomial(names, {3}, Rational(1, 48))};
    throw DomainError("type " + type_name(g, n) + " is not a base case");
}

VolumePolynomial kontsevich_volume(int g, int n) {
    require_stable(g, n);
    if (n == 0) throw UnsupportedInputError("volumes with no boundary are not computed by the recursion");
    if ((g == 0 && n == 3) || (g == 1 && n == 1)) return base_case(g, n);
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find({g, n});
        if (it != cache.end()) return {g, n, it->second};
    }
    Poly w = recurse(g, n);
    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = cache.try_emplace({g, n}, std::move(w));
    return {g, n, it->second};
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == cur.size()) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            cur[i] = a;
            self(self, i + 1, left - a);
        }
    };
    rec(rec, 0, total);
    return out;
}

IntersectionTable psi_numbers(int g, int n) {
    const Poly w = kontsevich_volume(g, n).poly;
    const int d = moduli_dimension(g, n);
    IntersectionTable table{g, n, {}};
    Rational scale = exact::power(Rational(2), d);
    for (const auto& alpha : compositions(d, n)) {
        Exponent e(alpha.size());
        for (std::size_t k = 0; k < alpha.size(); ++k) e[k] = 2 * alpha[k] + 1;
        Rational value = w.coefficient(e) * scale;
        for (int a : alpha) value *= Rational(exact::factorial(a));
        table.values.emplace(alpha, value);
    }
    return table;
}

exact::RationalFunction lhs_laplace(int g, int n) {
    auto table = psi_numbers(g, n);
    exact::RationalFunction out(static_cast<std::size_t>(n));
    for (const auto& [alpha, value] : table.values) {
        exact::Denominator den;
        Rational c = value;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            den[exact::LinearFactor::single(static_cast<int>(k))] = 2 * alpha[k] + 1;
            c *= Rational(exact::odd_double_factorial(alpha[k]));
        }
        out.add_term(den, c);
    }
    return out;
}

Poly wp_volume_asymptotic(int g, int n) {
    auto table = psi_numbers(g, n);
    auto names = exact::indexed_names("x", static_cast<std::size_t>(n));
    Poly out(names);
    Rational scale = exact::power(Rational(2), -moduli_dimension(g, n));
    for (const auto& [alpha, value] : table.values) {
        Exponent e(alpha.size());
        Rational c = value * scale;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            e[k] = 2 * alpha[k];
            c /= Rational(exact::factorial(alpha[k]));
        }
        out.add_term(e, c);
    }
    return out;
}

}  // namespace moduli::volumes
