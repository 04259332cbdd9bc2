#include <doctest.h>

#include "moduli/errors.hpp"
#include "moduli/exact/linalg.hpp"
#include "moduli/kformula/kformula.hpp"
#include "moduli/volumes/volumes.hpp"

using namespace moduli;
using namespace moduli::kformula;

namespace {

const std::vector<std::pair<int, int>> kSmallTypes{{0, 3}, {1, 1}, {0, 4}, {1, 2}};

}  // namespace

TEST_SUITE("kformula") {

TEST_CASE("the (1,1) formula by hand") {
    // one theta graph, |Aut| = 6, every edge bounds the single face twice
    exact::RationalFunction expected(1);
    expected.add_term({{exact::LinearFactor::single(0), 3}}, Rational(1, 24));
    CHECK(rhs_laplace(1, 1).simplified() == expected);
    CHECK(volumes::lhs_laplace(1, 1).simplified() == expected);
}

TEST_CASE("rhs equals the hand sum of per-graph terms") {
    for (auto [g, n] : kSmallTypes) {
        const auto graphs = ribbon::enumerate_trivalent(g, n);
        exact::RationalFunction sum(static_cast<std::size_t>(n));
        for (const auto& eg : graphs)
            sum += graph_laplace_term(eg.graph) * Rational(1, static_cast<long>(eg.automorphisms));
        sum *= exact::power(Rational(2), 2 * g - 2 + n);
        auto pts = exact::random_positive_points(static_cast<std::size_t>(n), 5, 9);
        for (const auto& c : exact::compare_at_points(sum, rhs_laplace(g, n), pts)) CHECK(c.equal);
    }
}

TEST_CASE("combinatorial formula holds at random points") {
    for (auto [g, n] : kSmallTypes) {
        CAPTURE(g);
        CAPTURE(n);
        auto r = verify_kcf(g, n, 30, 7);
        CHECK(r.equal);
        CHECK(r.points.size() == 30);
        CHECK(!r.first_mismatch);
        CHECK(r.seed == 7);
    }
}

TEST_CASE("a wrong left side is caught") {
    auto lhs = volumes::lhs_laplace(0, 4) * Rational(3, 2);
    auto r = compare_laplace(lhs, rhs_laplace(0, 4), 0, 4, 30, 1);
    CHECK(!r.equal);
    REQUIRE(r.first_mismatch);
    CHECK(*r.first_mismatch == 0);
}

TEST_CASE("too few trials is an error") {
    CHECK(kcf_degree_bound(0, 4) == 10);
    CHECK_THROWS_AS(verify_kcf(0, 4, 20, 1), DomainError);
}

TEST_CASE("form identities on every trivalent graph") {
    for (auto [g, n] : kSmallTypes) {
        CAPTURE(g);
        CAPTURE(n);
        auto batch = verify_form_identities(ribbon::enumerate_trivalent(g, n));
        CHECK(batch.ok);
        CHECK(batch.uniform);
        for (const auto& r : batch.graphs) {
            CHECK(r.bkb);
            CHECK(r.kernel_action);
            CHECK(r.restriction_match);
            CHECK(r.nondegenerate);
            CHECK(r.distinguished_independent);
            CHECK(r.b_rank_ok);
            CHECK(r.kernel_is_image);
            CHECK(r.density == exact::power(Rational(2), 1 - g));
            if (r.ratio) CHECK(*r.ratio == kFormScale * kFormSign);
        }
    }
}

TEST_CASE("kernel basis spans ker A") {
    for (const auto& eg : ribbon::enumerate_trivalent(1, 2)) {
        auto A = ribbon::face_edge_matrix(eg.graph).cast<Rational>();
        auto V = kernel_basis(eg.graph);
        CHECK((A * V).is_zero());
        CHECK(exact::rank(V) == V.cols());
        CHECK(V.cols() + exact::rank(A) == A.cols());
    }
}

TEST_CASE("K is skew and its restriction is nondegenerate") {
    for (const auto& eg : ribbon::enumerate_trivalent(0, 4)) {
        auto form = kontsevich_form(eg.graph);
        CHECK(form.K.is_skew());
        auto G = restricted_form(form, kernel_basis(eg.graph));
        CHECK(G.is_skew());
        CHECK(exact::determinant(G) != 0);
    }
}

TEST_CASE("non-trivalent graphs are rejected") {
    auto g = ribbon::enumerate(1, 1, {4})[0].graph;
    CHECK_THROWS_AS(verify_form_identities(g), UnsupportedInputError);
    CHECK_THROWS_AS(cell_density(g), UnsupportedInputError);
}

}  // TEST_SUITE
