#pragma once

#include <vector>

namespace moduli::ribbon {

// Half-edges 0..2E-1. s0 rotates anticlockwise around a vertex, s1 swaps the two
// halves of an edge, s2 = s0^-1 s1 traces faces. Half-edge h is read as the edge
// oriented towards its own vertex, so an oriented edge and its head share an index.
class RibbonGraph {
public:
    // face_labels lists the label (1..n) of each s2-cycle, cycles ordered by smallest half-edge.
    RibbonGraph(std::vector<int> s0, std::vector<int> s1, std::vector<int> face_labels);
    // Labels 1..n in canonical cycle order.
    RibbonGraph(std::vector<int> s0, std::vector<int> s1);

    int half_edge_count() const { return static_cast<int>(s0_.size()); }
    int edge_count() const { return half_edge_count() / 2; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int genus() const;

    int s0(int h) const { return s0_[static_cast<std::size_t>(h)]; }
    int s1(int h) const { return s1_[static_cast<std::size_t>(h)]; }
    int s2(int h) const { return s2_[static_cast<std::size_t>(h)]; }
    int s0_inverse(int h) const { return s0_inv_[static_cast<std::size_t>(h)]; }
    const std::vector<int>& s0_permutation() const { return s0_; }
    const std::vector<int>& s1_permutation() const { return s1_; }

    int vertex_of(int h) const { return vertex_[static_cast<std::size_t>(h)]; }
    int edge_of(int h) const { return edge_[static_cast<std::size_t>(h)]; }
    // 0-based face index, i.e. label - 1.
    int face_of(int h) const { return face_[static_cast<std::size_t>(h)]; }

    // s0-cycles and s2-cycles, each starting at its smallest element, listed by that element.
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& face_cycles() const { return faces_; }
    const std::vector<int>& face_labels() const { return labels_; }
    // Half-edges of the face with the given 0-based index, as an s2-cycle.
    const std::vector<int>& face_by_index(int f) const;

    int vertex_degree(int v) const { return static_cast<int>(vertices_[static_cast<std::size_t>(v)].size()); }
    std::vector<int> degree_sequence() const;  // non-increasing
    bool is_trivalent() const;
    bool is_loop(int edge) const;

    // Number of s0 steps from `from` to `to` (same vertex); anticlockwise / clockwise.
    int ccw_steps(int from, int to) const;
    int cw_steps(int from, int to) const;

    // Smaller and larger half-edge of an edge; the smaller one is the positive orientation.
    int positive_half_edge(int edge) const { return edge_min_[static_cast<std::size_t>(edge)]; }
    // Signed 1-based edge index <-> half-edge.
    int half_edge_from_signed(int signed_edge) const;
    int signed_edge(int h) const;

    friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
        return a.s0_ == b.s0_ && a.s1_ == b.s1_ && a.labels_ == b.labels_;
    }

private:
    std::vector<int> s0_, s1_, s0_inv_, s2_;
    std::vector<int> vertex_, edge_, face_, edge_min_;
    std::vector<std::vector<int>> vertices_, faces_;
    std::vector<int> labels_;
    std::vector<int> face_by_label_;

    void build(std::vector<int> face_labels, bool default_labels);
};

// (2 - V + E - F) / 2; throws InvalidGraphError when not a non-negative integer.
int genus_from_counts(int vertices, int edges, int faces);

}  // namespace moduli::ribbon
