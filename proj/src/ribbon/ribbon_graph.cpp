#include "moduli/ribbon/ribbon_graph.hpp"

#include "moduli/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace moduli::ribbon {

namespace {

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm, std::vector<int>& owner) {
    std::vector<std::vector<int>> cycles;
    owner.assign(perm.size(), -1);
    for (std::size_t h = 0; h < perm.size(); ++h) {
        if (owner[h] >= 0) continue;
        std::vector<int> c;
        for (int x = static_cast<int>(h); owner[static_cast<std::size_t>(x)] < 0; x = perm[static_cast<std::size_t>(x)]) {
            owner[static_cast<std::size_t>(x)] = static_cast<int>(cycles.size());
            c.push_back(x);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

void check_permutation(const std::vector<int>& p, const char* name) {
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)])
            throw InvalidGraphError(std::string(name) + " is not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

}  // namespace

int genus_from_counts(int vertices, int edges, int faces) {
    int twice = 2 - vertices + edges - faces;
    if (twice < 0 || twice % 2 != 0)
        throw InvalidGraphError("V=" + std::to_string(vertices) + ", E=" + std::to_string(edges) +
                                ", F=" + std::to_string(faces) + " gives no non-negative integer genus");
    return twice / 2;
}

RibbonGraph::RibbonGraph(std::vector<int> s0, std::vector<int> s1, std::vector<int> face_labels)
    : s0_(std::move(s0)), s1_(std::move(s1)) {
    build(std::move(face_labels), false);
}

RibbonGraph::RibbonGraph(std::vector<int> s0, std::vector<int> s1) : s0_(std::move(s0)), s1_(std::move(s1)) {
    build({}, true);
}

void RibbonGraph::build(std::vector<int> face_labels, bool default_labels) {
    const std::size_t H = s0_.size();
    if (H == 0 || H % 2 != 0) throw InvalidGraphError("half-edge count must be positive and even");
    if (s1_.size() != H) throw InvalidGraphError("s0 and s1 have different lengths");
    check_permutation(s0_, "s0");
    check_permutation(s1_, "s1");
    for (std::size_t h = 0; h < H; ++h) {
        int p = s1_[h];
        if (p == static_cast<int>(h)) throw InvalidGraphError("s1 has a fixed point at " + std::to_string(h));
        if (s1_[static_cast<std::size_t>(p)] != static_cast<int>(h)) throw InvalidGraphError("s1 is not an involution");
    }
    s0_inv_.assign(H, 0);
    for (std::size_t h = 0; h < H; ++h) s0_inv_[static_cast<std::size_t>(s0_[h])] = static_cast<int>(h);
    s2_.assign(H, 0);
    for (std::size_t h = 0; h < H; ++h) s2_[h] = s0_inv_[static_cast<std::size_t>(s1_[h])];

    vertices_ = cycles_of(s0_, vertex_);
    for (const auto& v : vertices_)
        if (v.size() < 3) throw InvalidGraphError("vertex of degree " + std::to_string(v.size()) + " (degrees must be >= 3)");

    // connectivity under <s0, s1>
    std::vector<bool> seen(H, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int y : {s0_[static_cast<std::size_t>(h)], s1_[static_cast<std::size_t>(h)]}) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != H) throw InvalidGraphError("ribbon graph is not connected");

    edge_.assign(H, -1);
    edge_min_.clear();
    for (std::size_t h = 0; h < H; ++h) {
        if (static_cast<int>(h) < s1_[h]) {
            edge_[h] = edge_[static_cast<std::size_t>(s1_[h])] = static_cast<int>(edge_min_.size());
            edge_min_.push_back(static_cast<int>(h));
        }
    }

    std::vector<int> cycle_of;
    faces_ = cycles_of(s2_, cycle_of);
    const std::size_t F = faces_.size();
    if (default_labels) {
        face_labels.resize(F);
        std::iota(face_labels.begin(), face_labels.end(), 1);
    }
    if (face_labels.size() != F)
        throw InvalidGraphError("face_labels has " + std::to_string(face_labels.size()) + " entries for " +
                                std::to_string(F) + " faces");
    face_by_label_.assign(F, -1);
    for (std::size_t c = 0; c < F; ++c) {
        int l = face_labels[c];
        if (l < 1 || static_cast<std::size_t>(l) > F || face_by_label_[static_cast<std::size_t>(l - 1)] >= 0)
            throw InvalidGraphError("face_labels is not a bijection onto 1..n");
        face_by_label_[static_cast<std::size_t>(l - 1)] = static_cast<int>(c);
    }
    labels_ = std::move(face_labels);
    face_.assign(H, -1);
    for (std::size_t h = 0; h < H; ++h) face_[h] = labels_[static_cast<std::size_t>(cycle_of[h])] - 1;

    genus_from_counts(vertex_count(), edge_count(), face_count());
}

int RibbonGraph::genus() const { return genus_from_counts(vertex_count(), edge_count(), face_count()); }

const std::vector<int>& RibbonGraph::face_by_index(int f) const {
    return faces_[static_cast<std::size_t>(face_by_label_.at(static_cast<std::size_t>(f)))];
}

std::vector<int> RibbonGraph::degree_sequence() const {
    std::vector<int> d;
    for (const auto& v : vertices_) d.push_back(static_cast<int>(v.size()));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool RibbonGraph::is_trivalent() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const auto& v) { return v.size() == 3; });
}

bool RibbonGraph::is_loop(int edge) const {
    int h = edge_min_.at(static_cast<std::size_t>(edge));
    return vertex_of(h) == vertex_of(s1(h));
}

int RibbonGraph::ccw_steps(int from, int to) const {
    if (vertex_of(from) != vertex_of(to)) throw DomainError("half-edges at different vertices");
    int k = 0;
    for (int x = from; x != to; x = s0(x)) ++k;
    return k;
}

int RibbonGraph::cw_steps(int from, int to) const {
    if (vertex_of(from) != vertex_of(to)) throw DomainError("half-edges at different vertices");
    int k = 0;
    for (int x = from; x != to; x = s0_inverse(x)) ++k;
    return k;
}

int RibbonGraph::half_edge_from_signed(int signed_edge) const {
    int k = signed_edge < 0 ? -signed_edge : signed_edge;
    if (k < 1 || k > edge_count()) throw DomainError("signed edge index " + std::to_string(signed_edge) + " out of range");
    int h = edge_min_[static_cast<std::size_t>(k - 1)];
    return signed_edge > 0 ? h : s1(h);
}

int RibbonGraph::signed_edge(int h) const {
    int k = edge_of(h) + 1;
    return h < s1(h) ? k : -k;
}

}  // namespace moduli::ribbon
