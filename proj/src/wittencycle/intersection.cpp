#include "moduli/wittencycle/intersection.hpp"

#include "moduli/errors.hpp"
#include "moduli/hypgeom/hypgeom.hpp"

#include <set>
#include <string>

namespace moduli::wittencycle {

namespace {

int at(const Walk& w, long i) {
    const long m = static_cast<long>(w.size());
    return w[static_cast<std::size_t>(((i % m) + m) % m)];
}

int shared_path_contributions(const RibbonGraph& graph, const Walk& w1, const Walk& w2) {
    const long m1 = static_cast<long>(w1.size()), m2 = static_cast<long>(w2.size());
    int total = 0;
    for (int sigma : {1, -1}) {
        auto match = [&](long i, long j) {
            int a = at(w1, i), b = at(w2, j);
            return sigma == 1 ? a == b : a == graph.s1(b);
        };
        for (long k = 0; k < m1; ++k)
            for (long l = 0; l < m2; ++l) {
                if (!match(k, l) || match(k - 1, l - sigma)) continue;
                long L = 1;
                while (match(k + L, l + sigma * L))
                    if (++L > m1 * m2) throw DomainError("walks share an unbounded path");

                const int p = graph.s1(at(w1, k));
                const int gi = at(w1, k - 1);
                const int gj = sigma == 1 ? at(w2, l - 1) : graph.s1(at(w2, l + 1));
                const int q = at(w1, k + L - 1);
                const int hi = graph.s1(at(w1, k + L));
                const int hj = sigma == 1 ? graph.s1(at(w2, l + L)) : at(w2, l - L);
                const bool left_start = graph.ccw_steps(p, gi) < graph.ccw_steps(p, gj);
                const bool left_end = graph.cw_steps(q, hi) < graph.cw_steps(q, hj);
                if (left_start && !left_end) ++total;
                else if (!left_start && left_end) --total;
            }
    }
    return total;
}

struct Visit {
    int vertex;
    int in;
    int out;
};

std::vector<Visit> visits(const RibbonGraph& graph, const Walk& w) {
    std::vector<Visit> out;
    for (long k = 0; k < static_cast<long>(w.size()); ++k)
        out.push_back({graph.vertex_of(at(w, k)), at(w, k), graph.s1(at(w, k + 1))});
    return out;
}

}  // namespace

QuadExt walk_intersection(const RibbonGraph& graph, const Walk& w1, const Walk& w2, const std::map<int, QuadExt>& vertex_cos) {
    QuadExt total(shared_path_contributions(graph, w1, w2));
    const auto v1 = visits(graph, w1), v2 = visits(graph, w2);
    for (const auto& x : v1)
        for (const auto& y : v2) {
            if (x.vertex != y.vertex) continue;
            if (std::set<int>{x.in, x.out, y.in, y.out}.size() < 4) continue;
            const auto& cycle = graph.vertices()[static_cast<std::size_t>(x.vertex)];
            const int d = static_cast<int>(cycle.size());
            auto pos = [&](int h) {
                for (int i = 0; i < d; ++i)
                    if (cycle[static_cast<std::size_t>(i)] == h) return i;
                throw InvalidGraphError("gate is not at its vertex");
            };
            hypgeom::IdealPolygonChord c1(d, pos(x.in), pos(x.out)), c2(d, pos(y.in), pos(y.out));
            if (!hypgeom::chords_cross(c1, c2)) continue;
            if (auto it = vertex_cos.find(x.vertex); it != vertex_cos.end()) {
                total += it->second;
                continue;
            }
            auto cosine = hypgeom::directed_crossing_cosine(c1, c2);
            if (!cosine.exact)
                throw DomainError("no exact crossing cosine at vertex " + std::to_string(x.vertex) + " of degree " +
                                  std::to_string(d) + "; supply an angle override");
            total += *cosine.exact;
        }
    return total;
}

QuadExt multicurve_intersection(const RibbonGraph& graph, const Multicurve& c1, const Multicurve& c2,
                                const std::map<int, QuadExt>& vertex_cos) {
    QuadExt total;
    for (const auto& a : c1.components)
        for (const auto& b : c2.components) total += walk_intersection(graph, a, b, vertex_cos);
    return total;
}

QuadMatrix intersection_matrix(const RibbonGraph& graph, const std::vector<Multicurve>& curves,
                               const std::vector<AngleOverride>& overrides) {
    const std::size_t N = curves.size();
    QuadMatrix X(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            std::map<int, QuadExt> vertex_cos;
            for (const auto& o : overrides) {
                if (o.first == static_cast<int>(i) && o.second == static_cast<int>(j)) vertex_cos[o.vertex] = o.cos;
                if (o.first == static_cast<int>(j) && o.second == static_cast<int>(i)) vertex_cos[o.vertex] = -o.cos;
            }
            X(i, j) = multicurve_intersection(graph, curves[i], curves[j], vertex_cos);
            X(j, i) = -X(i, j);
        }
    return X;
}

}  // namespace moduli::wittencycle
