#include "moduli/kformula/kformula.hpp"

#include "moduli/errors.hpp"
#include "moduli/exact/linalg.hpp"
#include "moduli/util/parallel.hpp"
#include "moduli/volumes/volumes.hpp"

#include <algorithm>
#include <string>

namespace moduli::kformula {

namespace {

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(static_cast<long>(m(i, j)));
    return r;
}

void require_trivalent(const RibbonGraph& graph, const char* what) {
    if (!graph.is_trivalent()) throw UnsupportedInputError(std::string(what) + " requires a trivalent graph");
}

}  // namespace

std::vector<int> default_distinguished_sides(const RibbonGraph& graph) {
    std::vector<int> d;
    for (int f = 0; f < graph.face_count(); ++f) {
        const auto& c = graph.face_by_index(f);
        d.push_back(*std::min_element(c.begin(), c.end()));
    }
    return d;
}

KontsevichFormMatrix kontsevich_form(const RibbonGraph& graph, const std::vector<int>& distinguished) {
    require_trivalent(graph, "the Kontsevich form");
    if (distinguished.size() != static_cast<std::size_t>(graph.face_count()))
        throw DomainError("need one distinguished side per face");
    auto E = static_cast<std::size_t>(graph.edge_count());
    IntMatrix K(E, E);
    for (int f = 0; f < graph.face_count(); ++f) {
        int start = distinguished[static_cast<std::size_t>(f)];
        if (start < 0 || start >= graph.half_edge_count() || graph.face_of(start) != f)
            throw DomainError("distinguished side " + std::to_string(start) + " is not on face " + std::to_string(f + 1));
        std::vector<std::size_t> order;
        int h = start;
        do {
            order.push_back(static_cast<std::size_t>(graph.edge_of(h)));
            h = graph.s2(h);
        } while (h != start);
        for (std::size_t p = 0; p < order.size(); ++p)
            for (std::size_t q = p + 1; q < order.size(); ++q) {
                K(order[p], order[q]) += 1;
                K(order[q], order[p]) -= 1;
            }
    }
    return {K, distinguished};
}

KontsevichFormMatrix kontsevich_form(const RibbonGraph& graph) {
    return kontsevich_form(graph, default_distinguished_sides(graph));
}

RationalMatrix kernel_basis(const RibbonGraph& graph) {
    return exact::nullspace(to_rational(ribbon::face_edge_matrix(graph)));
}

RationalMatrix restricted_form(const KontsevichFormMatrix& form, const RationalMatrix& basis) {
    return basis.transpose() * to_rational(form.K) * basis * Rational(1, 4);
}

FormIdentityReport verify_form_identities(const RibbonGraph& graph) {
    require_trivalent(graph, "form identities");
    FormIdentityReport r;
    const RationalMatrix B = to_rational(ribbon::oriented_adjacency(graph));
    const auto form = kontsevich_form(graph);
    const RationalMatrix K = to_rational(form.K);
    const RationalMatrix BKB = B * K * B;

    Rational c = 0;
    for (std::size_t i = 0; i < B.rows() && c == 0; ++i)
        for (std::size_t j = 0; j < B.cols(); ++j)
            if (B(i, j) != 0) {
                c = BKB(i, j) / B(i, j);
                break;
            }
    if (c != 0 && BKB == B * c) {
        r.ratio = c;
        r.epsilon = sgn(c);
    }
    const int eps = r.epsilon.value_or(kFormSign);
    const Rational scale(kFormScale * eps), stated(kFormScaleStated * eps);
    r.bkb = BKB == B * scale;
    r.bkb_stated = BKB == B * stated;

    const RationalMatrix V = kernel_basis(graph);
    const RationalMatrix BKV = B * K * V;
    r.kernel_action = BKV == V * scale;
    // as written: (B K + 8 epsilon I) v = 0
    r.kernel_action_stated = BKV == V * Rational(-stated);

    const RationalMatrix GK = restricted_form(form, V);
    r.expected_rank = V.cols();
    r.restricted_rank = exact::rank(GK);
    r.nondegenerate = r.restricted_rank == r.expected_rank;

    auto S = exact::independent_rows(B);
    if (S.size() != r.expected_rank) {
        r.restriction_match = false;
    } else {
        std::vector<std::size_t> all(V.cols());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
        RationalMatrix VS = V.submatrix(S, all);
        RationalMatrix GB = VS.transpose() * exact::inverse(B.submatrix(S, S)) * VS * Rational(2);
        r.restriction_match = GK * Rational(kFormScaleStated / kFormScale) == GB * Rational(eps);
        r.restriction_match_stated = GK == GB * Rational(eps);
    }

    // move each distinguished side one step along its face
    bool independent = true;
    auto sides = form.distinguished;
    for (std::size_t f = 0; f < sides.size() && independent; ++f) {
        auto moved = sides;
        const auto& cycle = graph.face_by_index(static_cast<int>(f));
        for (int h : cycle) {
            if (h == sides[f]) continue;
            moved[f] = h;
            if (restricted_form(kontsevich_form(graph, moved), V) != GK) {
                independent = false;
                break;
            }
        }
    }
    r.distinguished_independent = independent;

    const RationalMatrix A = to_rational(ribbon::face_edge_matrix(graph));
    const int g = graph.genus(), n = graph.face_count();
    r.b_rank = exact::rank(B);
    r.b_rank_ok = static_cast<int>(r.b_rank) == 6 * g - 6 + 2 * n;
    const bool contains = (B * A.transpose()) == RationalMatrix(B.rows(), A.rows());
    r.kernel_is_image = contains && B.cols() - r.b_rank == exact::rank(A);
    r.density = cell_density(graph);
    r.density_ok = r.density == exact::power(Rational(2), 1 - g);
    return r;
}

IdentityBatchReport verify_form_identities(const std::vector<ribbon::EnumeratedGraph>& graphs) {
    IdentityBatchReport batch;
    batch.graphs.resize(graphs.size());
    util::parallel_for(graphs.size(), [&](std::size_t i) { batch.graphs[i] = verify_form_identities(graphs[i].graph); });
    for (const auto& r : batch.graphs) {
        if (r.epsilon) {
            if (!batch.epsilon) batch.epsilon = r.epsilon;
            if (*r.epsilon != *batch.epsilon) batch.uniform = false;
        }
        if (!r.ok()) batch.ok = false;
    }
    if (!batch.uniform) batch.ok = false;
    return batch;
}

Rational cell_density(const RibbonGraph& graph) {
    require_trivalent(graph, "cell density");
    const RationalMatrix A = to_rational(ribbon::face_edge_matrix(graph));
    const RationalMatrix V = kernel_basis(graph);
    const RationalMatrix W = A.transpose() * exact::inverse(A * A.transpose());
    Rational pf = exact::pfaffian(restricted_form(kontsevich_form(graph), V));
    Rational det = exact::determinant(exact::hstack(V, W));
    if (det == 0) throw SingularMatrixError("kernel basis and section are dependent");
    return abs(pf) / abs(det);
}

exact::RationalFunction graph_laplace_term(const RibbonGraph& graph) {
    return exact::orthant_exponential_integral(ribbon::face_edge_matrix(graph), static_cast<std::size_t>(graph.face_count()));
}

exact::RationalFunction rhs_laplace_from(const std::vector<ribbon::EnumeratedGraph>& graphs, int g, int n) {
    std::vector<exact::RationalFunction> terms(graphs.size());
    util::parallel_for(graphs.size(), [&](std::size_t i) { terms[i] = graph_laplace_term(graphs[i].graph); });
    const Rational prefactor = exact::power(Rational(2), 2 * g - 2 + n);
    exact::RationalFunction total(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < graphs.size(); ++i)
        total += terms[i] * Rational(prefactor / Rational(static_cast<long>(graphs[i].automorphisms)));
    return total;
}

exact::RationalFunction rhs_laplace(int g, int n) {
    volumes::require_stable(g, n);
    return rhs_laplace_from(ribbon::enumerate_trivalent(g, n), g, n);
}

int kcf_degree_bound(int g, int n) { return 6 * g - 6 + 3 * n + n; }

KcfReport compare_laplace(const exact::RationalFunction& lhs, const exact::RationalFunction& rhs, int g, int n,
                          std::size_t trials, std::uint64_t seed) {
    KcfReport r;
    r.g = g;
    r.n = n;
    r.trials = trials;
    r.seed = seed;
    r.degree_bound = kcf_degree_bound(g, n);
    if (trials <= 2 * static_cast<std::size_t>(r.degree_bound))
        throw DomainError("trials must exceed twice the degree bound " + std::to_string(r.degree_bound) + " for type (" +
                          std::to_string(g) + "," + std::to_string(n) + ")");
    r.points = exact::compare_at_points(lhs, rhs, exact::random_positive_points(static_cast<std::size_t>(n), trials, seed));
    r.equal = true;
    for (std::size_t k = 0; k < r.points.size(); ++k)
        if (!r.points[k].equal) {
            r.equal = false;
            if (!r.first_mismatch) r.first_mismatch = k;
        }
    return r;
}

KcfReport verify_kcf(int g, int n, std::size_t trials, std::uint64_t seed) {
    volumes::require_stable(g, n);
    auto graphs = ribbon::enumerate_trivalent(g, n);
    auto report = compare_laplace(volumes::lhs_laplace(g, n), rhs_laplace_from(graphs, g, n), g, n, trials, seed);
    report.graph_count = graphs.size();
    return report;
}

}  // namespace moduli::kformula
