#include <doctest.h>

#include "moduli/errors.hpp"
#include "moduli/volumes/volumes.hpp"

#include <thread>

using namespace moduli;
using namespace moduli::volumes;

namespace {

Rational psi(int g, const std::vector<int>& alpha) {
    return psi_numbers(g, static_cast<int>(alpha.size())).values.at(alpha);
}

}  // namespace

TEST_SUITE("volumes") {

TEST_CASE("base cases") {
    CHECK(exact::to_string(kontsevich_volume(0, 3).poly) == "L1*L2*L3");
    CHECK(exact::to_string(kontsevich_volume(1, 1).poly) == "L1^3/48");
    CHECK(base_case(1, 1).poly == kontsevich_volume(1, 1).poly);
    CHECK_THROWS_AS(base_case(0, 4), DomainError);
}

TEST_CASE("unstable and closed types are rejected") {
    CHECK_THROWS_AS(kontsevich_volume(0, 2), DomainError);
    CHECK_THROWS_AS(kontsevich_volume(1, 0), DomainError);
    CHECK_THROWS_AS(kontsevich_volume(2, 0), UnsupportedInputError);
    CHECK(moduli_dimension(1, 2) == 2);
}

TEST_CASE("known intersection numbers") {
    CHECK(psi(1, {1}) == Rational(1, 24));
    CHECK(psi(0, {0, 0, 0}) == 1);
    CHECK(psi(0, {1, 0, 0, 0}) == 1);
    CHECK(psi(0, {0, 0, 1, 0}) == 1);
    CHECK(psi(0, {2, 0, 0, 0, 0}) == 1);
    CHECK(psi(0, {1, 1, 0, 0, 0}) == 2);
    CHECK(psi(1, {1, 1}) == Rational(1, 24));
    CHECK(psi(1, {2, 0}) == Rational(1, 24));
    CHECK(psi(1, {0, 1, 2}) == Rational(1, 12));
    CHECK(psi(2, {4}) == Rational(1, 1152));
}

TEST_CASE("string and dilaton equations") {
    // <tau_0 prod tau_ai> = sum_j <... tau_(aj - 1) ...>,  <tau_1 prod tau_ai> = (2g - 2 + n) <prod tau_ai>
    for (auto [g, n] : {std::pair{0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 2}}) {
        CAPTURE(g);
        CAPTURE(n);
        for (const auto& [alpha, value] : psi_numbers(g, n).values) {
            std::vector<int> rest(alpha.begin() + 1, alpha.end());
            if (alpha[0] == 0) {
                Rational expected = 0;
                for (std::size_t j = 0; j < rest.size(); ++j) {
                    if (rest[j] == 0) continue;
                    auto lowered = rest;
                    --lowered[j];
                    expected += psi(g, lowered);
                }
                CHECK(value == expected);
            } else if (alpha[0] == 1 && is_stable(g, n - 1)) {
                CHECK(value == Rational(2 * g - 2 + n - 1) * psi(g, rest));
            }
        }
    }
}

TEST_CASE("volume polynomials are symmetric and homogeneous") {
    for (auto [g, n] : {std::pair{0, 4}, {1, 2}, {0, 5}, {1, 3}, {2, 1}}) {
        const auto W = kontsevich_volume(g, n).poly;
        CHECK(W.is_homogeneous());
        CHECK(W.total_degree() == 6 * g - 6 + 3 * n);
        for (const auto& [e, c] : W.terms()) {
            for (int k : e) CHECK(k % 2 == 1);
            auto swapped = e;
            std::swap(swapped[0], swapped[n - 1]);
            CHECK(W.coefficient(swapped) == c);
        }
    }
}

TEST_CASE("psi numbers are the coefficients of the volume") {
    const auto W = kontsevich_volume(1, 2).poly;
    for (const auto& [alpha, value] : psi_numbers(1, 2).values) {
        exact::Exponent e{2 * alpha[0] + 1, 2 * alpha[1] + 1};
        Rational scale = 1;
        for (int a : alpha) scale *= Rational(exact::factorial(a)) * exact::power(Rational(2), a);
        CHECK(W.coefficient(e) * scale == value);
    }
}

TEST_CASE("concurrent requests agree") {
    std::vector<std::thread> workers;
    std::vector<Poly> out(8);
    for (int i = 0; i < 8; ++i) workers.emplace_back([&, i] { out[i] = kontsevich_volume(1, 3).poly; });
    for (auto& w : workers) w.join();
    for (const auto& p : out) CHECK(p == out[0]);
}

TEST_CASE("compositions") {
    CHECK(compositions(2, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(compositions(0, 3).size() == 1);
}

}  // TEST_SUITE
