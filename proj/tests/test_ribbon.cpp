#include <doctest.h>

#include "moduli/errors.hpp"
#include "moduli/exact/linalg.hpp"
#include "moduli/exact/rational.hpp"
#include "moduli/ribbon/enumerate.hpp"
#include "moduli/ribbon/graph_json.hpp"
#include "moduli/ribbon/matrices.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace moduli;
using namespace moduli::ribbon;
using exact::Rational;

namespace {

std::vector<int> cycle_type(const std::vector<int>& p) {
    std::vector<int> seen(p.size(), 0), out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = static_cast<int>(i); !seen[j]; j = p[j]) seen[j] = 1, ++len;
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool transitive(const std::vector<int>& s0, const std::vector<int>& s1) {
    std::vector<int> seen(s0.size(), 0), stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int k : {s0[h], s1[h]})
            if (!seen[k]) seen[k] = 1, ++count, stack.push_back(k);
    }
    return count == s0.size();
}

struct BruteForce {
    long labelled = 0;                     // labelled structures with s1 fixed
    std::set<std::vector<int>> classes;    // canonical codes
};

// Every s0 of the given cycle type against the fixed pairing (2k, 2k+1), every face labelling.
BruteForce brute_force(int g, int n, std::vector<int> degrees) {
    std::sort(degrees.rbegin(), degrees.rend());
    const int H = std::accumulate(degrees.begin(), degrees.end(), 0);
    std::vector<int> s1(H), s0(H);
    for (int h = 0; h < H; ++h) s1[h] = h ^ 1;
    std::iota(s0.begin(), s0.end(), 0);
    BruteForce out;
    do {
        if (cycle_type(s0) != degrees || !transitive(s0, s1)) continue;
        RibbonGraph base(s0, s1);
        if (base.face_count() != n || base.genus() != g) continue;
        std::vector<int> labels(n);
        std::iota(labels.begin(), labels.end(), 1);
        do {
            ++out.labelled;
            out.classes.insert(canonical_code(RibbonGraph(s0, s1, labels), true));
        } while (std::next_permutation(labels.begin(), labels.end()));
    } while (std::next_permutation(s0.begin(), s0.end()));
    return out;
}

// Automorphisms by trying every bijection.
long brute_force_automorphisms(const RibbonGraph& gr) {
    const int H = gr.half_edge_count();
    std::vector<int> phi(H);
    std::iota(phi.begin(), phi.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (int h = 0; h < H && ok; ++h)
            ok = phi[gr.s0(h)] == gr.s0(phi[h]) && phi[gr.s1(h)] == gr.s1(phi[h]) &&
                 gr.face_of(phi[h]) == gr.face_of(h);
        count += ok;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return count;
}

Rational hyperoctahedral_order(int E) {
    Rational r = 1;
    for (int k = 1; k <= E; ++k) r *= 2 * k;
    return r;
}

// Partitions of 2E into V parts >= 3, non-increasing.
void partitions(int total, int parts, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int d = std::min(max_part, total - 3 * (parts - 1)); d >= 3; --d) {
        cur.push_back(d);
        partitions(total - d, parts - 1, d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_SUITE("ribbon") {

TEST_CASE("theta graph on the torus") {
    const RibbonGraph theta = enumerate_trivalent(1, 1).at(0).graph;
    CHECK(theta.vertex_count() == 2);
    CHECK(theta.edge_count() == 3);
    CHECK(theta.face_count() == 1);
    CHECK(theta.genus() == 1);
    CHECK(theta.is_trivalent());
    for (int h = 0; h < 6; ++h) {
        CHECK(theta.s2(h) == theta.s0_inverse(theta.s1(h)));
        CHECK(theta.half_edge_from_signed(theta.signed_edge(h)) == h);
    }
}

TEST_CASE("invalid graphs are rejected") {
    CHECK_THROWS_AS(RibbonGraph({0, 0}, {1, 0}), InvalidGraphError);
    CHECK_THROWS_AS(RibbonGraph({1, 0}, {0, 1}), InvalidGraphError);
    CHECK_THROWS_AS(RibbonGraph({0, 1, 2}, {1, 0, 2}), InvalidGraphError);
    // two disjoint loops
    CHECK_THROWS_AS(RibbonGraph({1, 0, 3, 2}, {1, 0, 3, 2}), InvalidGraphError);
}

TEST_CASE("graph JSON round trip") {
    for (const auto& eg : enumerate_trivalent(0, 4)) {
        auto j = graph_to_json(eg.graph);
        CHECK(j["v"] == kGraphSchemaVersion);
        CHECK(graph_from_json(j) == eg.graph);
    }
    auto j = graph_to_json(enumerate_trivalent(1, 1)[0].graph);
    j["v"] = 2;
    CHECK_THROWS_AS(graph_from_json(j), InvalidGraphError);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"v", 1}}), InvalidGraphError);
}

TEST_CASE("enumeration matches brute force") {
    struct Case {
        int g, n;
        std::vector<int> degrees;
    };
    for (const Case& c : std::vector<Case>{{0, 3, {3, 3}}, {1, 1, {3, 3}}, {0, 3, {4}}, {1, 1, {4}},
                                           {1, 2, {5, 3}}, {0, 4, {5, 3}}, {1, 2, {4, 4}}, {0, 4, {4, 4}},
                                           {2, 1, {8}}, {0, 5, {8}}}) {
        CAPTURE(c.g);
        CAPTURE(c.n);
        const auto graphs = enumerate(c.g, c.n, c.degrees);
        const auto oracle = brute_force(c.g, c.n, c.degrees);
        CHECK(graphs.size() == oracle.classes.size());
        std::set<std::vector<int>> codes;
        Rational orbit_total = 0;
        const int E = std::accumulate(c.degrees.begin(), c.degrees.end(), 0) / 2;
        for (const auto& eg : graphs) {
            codes.insert(canonical_code(eg.graph, true));
            orbit_total += hyperoctahedral_order(E) / Rational(static_cast<long>(eg.automorphisms));
        }
        CHECK(codes == oracle.classes);
        CHECK(orbit_total == Rational(oracle.labelled));
    }
}

TEST_CASE("automorphism orders match brute force") {
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {1, 2}}) {
        for (const auto& eg : enumerate(g, n, g == 1 && n == 2 ? std::vector<int>{5, 3} : std::vector<int>{3, 3}))
            CHECK(eg.automorphisms == brute_force_automorphisms(eg.graph));
    }
    CHECK(enumerate(1, 1, {4})[0].automorphisms == 4);
    CHECK(enumerate_trivalent(1, 1)[0].automorphisms == 6);
}

TEST_CASE("orbifold Euler characteristic from all graphs") {
    // sum over graphs of (-1)^V / |Aut| equals chi(M_{g,n})
    struct Case {
        int g, n;
        Rational chi;
    };
    for (const Case& c : std::vector<Case>{{0, 3, 1}, {1, 1, Rational(-1, 12)}, {0, 4, -1}, {1, 2, Rational(1, 12)},
                                           {0, 5, 2}, {2, 1, Rational(1, 120)}}) {
        CAPTURE(c.g);
        CAPTURE(c.n);
        const int chi_top = 2 * c.g - 2 + c.n;
        Rational total = 0;
        for (int V = 1; V <= 2 * chi_top; ++V) {
            const int E = V + chi_top;
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions(2 * E, V, 2 * E, cur, parts);
            for (const auto& degrees : parts)
                for (const auto& eg : enumerate(c.g, c.n, degrees))
                    total += Rational(V % 2 ? -1 : 1, static_cast<long>(eg.automorphisms));
        }
        CHECK(total == c.chi);
    }
}

TEST_CASE("inconsistent or unstable inputs give no graphs") {
    CHECK(enumerate(0, 1, {3}).empty());
    CHECK(enumerate(0, 2, {3, 3}).empty());
    CHECK(enumerate(1, 1, {3, 3, 3}).empty());
    CHECK(enumerate(0, 3, {3}).empty());
}

TEST_CASE("face-edge and adjacency matrices") {
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
        for (const auto& eg : enumerate_trivalent(g, n)) {
            const auto A = face_edge_matrix(eg.graph);
            const auto B = oriented_adjacency(eg.graph);
            CHECK(A.rows() == static_cast<std::size_t>(n));
            for (std::size_t e = 0; e < A.cols(); ++e) {
                long sum = 0;
                for (std::size_t i = 0; i < A.rows(); ++i) sum += A(i, e);
                CHECK(sum == 2);
            }
            CHECK(B.is_skew());
            CHECK((B * A.transpose()).is_zero());
        }
    }
    CHECK_THROWS_AS(oriented_adjacency(enumerate(1, 1, {4})[0].graph), UnsupportedInputError);
}

TEST_CASE("isomorphisms") {
    const auto graphs = enumerate(1, 2, {5, 3});
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = 0; j < graphs.size(); ++j) {
            auto phi = find_isomorphism(graphs[i].graph, graphs[j].graph, true);
            CHECK(phi.has_value() == (i == j));
        }
}

}  // TEST_SUITE
