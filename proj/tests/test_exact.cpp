#include <doctest.h>

#include "moduli/errors.hpp"
#include "moduli/exact/linalg.hpp"
#include "moduli/exact/multipoly.hpp"
#include "moduli/exact/quad_ext.hpp"
#include "moduli/exact/rational_function.hpp"

#include <cmath>
#include <random>

using namespace moduli;
using namespace moduli::exact;

namespace {

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

QuadExt random_quad(std::mt19937_64& rng, long D) {
    Rational a = small_rational(rng), b = small_rational(rng);
    return b == 0 ? QuadExt(a) : QuadExt(a, b, D);
}

Matrix<Rational> random_skew(std::mt19937_64& rng, std::size_t n) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = small_rational(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rational parsing and printing round trip") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(power(Rational(2), -3) == Rational(1, 8));
    CHECK(odd_double_factorial(0) == 1);
    CHECK(odd_double_factorial(3) == 15);
    CHECK(factorial(5) == 120);
}

TEST_CASE("random points are reproducible and in range") {
    auto a = random_positive_points(3, 10, 42);
    auto b = random_positive_points(3, 10, 42);
    CHECK(a == b);
    CHECK(a != random_positive_points(3, 10, 43));
    for (const auto& p : a)
        for (const auto& x : p) {
            CHECK(x > 0);
            CHECK(x.get_num() <= 1000);
            CHECK(x.get_den() <= 1000);
        }
}

TEST_CASE("quadratic extension satisfies the field axioms") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        QuadExt x = random_quad(rng, 5), y = random_quad(rng, 5), z = random_quad(rng, 5);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == QuadExt(0));
        if (x != QuadExt(0)) {
            CHECK(x * x.inverse() == QuadExt(1));
            CHECK((y / x) * x == y);
            CHECK(x.norm() == (x * x.conjugate()).a());
        }
        CHECK(std::abs((x * y).to_double() - x.to_double() * y.to_double()) < 1e-9);
        CHECK(x.sign() == (x.to_double() > 0) - (x.to_double() < 0));
    }
}

TEST_CASE("sqrt5 arithmetic") {
    const QuadExt r5 = QuadExt::sqrt(5);
    CHECK(r5 * r5 == QuadExt(5));
    CHECK((r5 - 2).sign() == 1);
    CHECK((r5 - 3).sign() == -1);
    CHECK(to_string(r5 - 2) == "-2 + sqrt(5)");
    CHECK((QuadExt(1) + r5).inverse() == (r5 - 1) * Rational(1, 4));
    CHECK_THROWS_AS(r5 + QuadExt::sqrt(2), DomainError);
}

TEST_CASE("pfaffian squares to the determinant") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 0; n <= 8; n += 2)
        for (int t = 0; t < 5; ++t) {
            auto m = random_skew(rng, n);
            Rational pf = pfaffian(m);
            CHECK(pf * pf == determinant(m));
        }
    Matrix<Rational> j2 = {{0, 1}, {-1, 0}};
    CHECK(pfaffian(j2) == 1);
    CHECK(determinant(random_skew(rng, 5)) == 0);
}

TEST_CASE("inverse, rank and nullspace agree") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Matrix<Rational> m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = small_rational(rng);
        if (determinant(m) == 0) continue;
        CHECK(m * inverse(m) == Matrix<Rational>::identity(4));
    }
    Matrix<Rational> a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(a) == 2);
    auto k = nullspace(a);
    CHECK(k.cols() == 1);
    CHECK((a * k).is_zero());
    CHECK_THROWS_AS(inverse(a), SingularMatrixError);
}

TEST_CASE("polynomial arithmetic") {
    auto vars = indexed_names("L", 2);
    auto x = MultiPoly<Rational>::variable(vars, 0), y = MultiPoly<Rational>::variable(vars, 1);
    auto p = (x + y).pow(3);
    CHECK(p.coefficient({2, 1}) == 3);
    CHECK(p.is_homogeneous());
    CHECK(p.total_degree() == 3);
    CHECK(p.evaluate(std::vector<Rational>{1, 2}) == 27);
    CHECK(to_string(x.pow(3) * Rational(1, 48)) == "L1^3/48");
    auto q = x.integrate(0, MultiPoly<Rational>::constant(vars, 0), y);
    CHECK(q == y.pow(2) * Rational(1, 2));
}

TEST_CASE("laplace transform matches numeric quadrature") {
    auto vars = indexed_names("x", 2);
    auto p = MultiPoly<Rational>::monomial(vars, {2, 1}, Rational(3));
    RationalFunction L = laplace(p);
    const double s1 = 1.5, s2 = 0.75;
    auto integral = [](int m, double s) {
        double h = 1e-3, total = 0;
        for (int i = 0; i < 80000; ++i) {
            double x = (i + 0.5) * h;
            total += std::pow(x, m) * std::exp(-s * x) * h;
        }
        return total;
    };
    double numeric = 3 * integral(2, s1) * integral(1, s2);
    double exact_value = L.evaluate({Rational(3, 2), Rational(3, 4)}).get_d();
    CHECK(std::abs(numeric - exact_value) < 1e-5 * exact_value);
}

TEST_CASE("rational functions simplify canonically") {
    RationalFunction f(2), g(2);
    f.add_term({{LinearFactor::single(0), 1}, {LinearFactor::single(1), 3}}, Rational(1, 2));
    f.add_term({{LinearFactor::single(0), 3}, {LinearFactor::single(1), 1}}, Rational(1, 2));
    CHECK(f.simplified().to_string() == "1/(2 s1 s2^3) + 1/(2 s1^3 s2)");
    g = f.combined();
    CHECK(compare_at_points(f, g, random_positive_points(2, 5, 1))[0].equal);
    CHECK(f.simplified() == g.simplified());
    CHECK(f.permuted({1, 0}).simplified() == f.simplified());
}

}  // TEST_SUITE
