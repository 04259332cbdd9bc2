#include "moduli/ribbon/matrices.hpp"

#include "moduli/errors.hpp"

namespace moduli::ribbon {

IntMatrix face_edge_matrix(const RibbonGraph& graph) {
    IntMatrix a(static_cast<std::size_t>(graph.face_count()), static_cast<std::size_t>(graph.edge_count()));
    for (int h = 0; h < graph.half_edge_count(); ++h)
        a(static_cast<std::size_t>(graph.face_of(h)), static_cast<std::size_t>(graph.edge_of(h))) += 1;
    return a;
}

IntMatrix oriented_adjacency(const RibbonGraph& graph) {
    if (!graph.is_trivalent()) throw UnsupportedInputError("oriented adjacency is defined for trivalent graphs only");
    auto E = static_cast<std::size_t>(graph.edge_count());
    IntMatrix b(E, E);
    for (int h = 0; h < graph.half_edge_count(); ++h) {
        auto e = static_cast<std::size_t>(graph.edge_of(h));
        auto f = static_cast<std::size_t>(graph.edge_of(graph.s0(h)));
        b(f, e) += kAdjacencySign;
        b(e, f) -= kAdjacencySign;
    }
    return b;
}

}  // namespace moduli::ribbon
