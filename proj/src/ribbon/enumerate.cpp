#include "moduli/ribbon/enumerate.hpp"

#include "moduli/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace moduli::ribbon {

namespace {

// Breadth-first order from root: each processed half-edge looks at s0(h), then s1(h).
std::vector<int> bfs_order(const std::vector<int>& s0, const std::vector<int>& s1, int root, std::vector<int>& label) {
    label.assign(s0.size(), -1);
    std::vector<int> order{root};
    label[static_cast<std::size_t>(root)] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int h = order[i];
        for (int y : {s0[static_cast<std::size_t>(h)], s1[static_cast<std::size_t>(h)]}) {
            if (label[static_cast<std::size_t>(y)] < 0) {
                label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    }
    return order;
}

std::vector<int> code_from(const std::vector<int>& s0, const std::vector<int>& s1, const std::vector<int>* face_label,
                           int root, std::vector<int>* order_out = nullptr) {
    std::vector<int> label;
    auto order = bfs_order(s0, s1, root, label);
    std::vector<int> code;
    code.reserve(order.size() * 3);
    for (int h : order) {
        code.push_back(label[static_cast<std::size_t>(s0[static_cast<std::size_t>(h)])]);
        code.push_back(label[static_cast<std::size_t>(s1[static_cast<std::size_t>(h)])]);
        if (face_label) code.push_back((*face_label)[static_cast<std::size_t>(h)]);
    }
    if (order_out) *order_out = std::move(order);
    return code;
}

std::vector<int> per_half_edge_labels(const RibbonGraph& g) {
    std::vector<int> l(static_cast<std::size_t>(g.half_edge_count()));
    for (int h = 0; h < g.half_edge_count(); ++h) l[static_cast<std::size_t>(h)] = g.face_of(h);
    return l;
}

// Unlabelled rooted maps, generated directly in breadth-first-code form: processing
// half-edge h in label order, s0(h) is an existing label with no s0-preimage or the next
// new label, and s1(h), if still unset, is an unpaired label > h or the next new label.
class MapGenerator {
public:
    MapGenerator(const std::vector<int>& degrees, int faces) : H_(std::accumulate(degrees.begin(), degrees.end(), 0)), faces_(faces) {
        int top = *std::max_element(degrees.begin(), degrees.end());
        remaining_.assign(static_cast<std::size_t>(top + 1), 0);
        for (int d : degrees) ++remaining_[static_cast<std::size_t>(d)];
        s0_.assign(static_cast<std::size_t>(H_), -1);
        s1_.assign(static_cast<std::size_t>(H_), -1);
        pred_.assign(static_cast<std::size_t>(H_), -1);
    }

    struct Found {
        std::vector<int> s0, s1;
        std::vector<std::vector<int>> automorphisms;  // as half-edge maps
    };

    std::vector<Found> run() {
        labelled_ = 1;
        step(0);
        return std::move(found_);
    }

private:
    int H_;
    int faces_;
    int labelled_ = 1;
    std::vector<int> remaining_;
    std::vector<int> s0_, s1_, pred_;
    std::vector<Found> found_;

    bool degree_available(int at_least) const {
        for (std::size_t d = static_cast<std::size_t>(std::max(at_least, 0)); d < remaining_.size(); ++d)
            if (remaining_[d] > 0) return true;
        return false;
    }

    void step(int h) {
        if (h == H_) {
            emit();
            return;
        }
        if (h >= labelled_) return;  // closed off before using every half-edge
        int start = h, chain = 1;
        while (pred_[static_cast<std::size_t>(start)] >= 0) {
            start = pred_[static_cast<std::size_t>(start)];
            ++chain;
        }
        auto uh = static_cast<std::size_t>(h);
        for (int t = 0; t < labelled_; ++t) {
            auto ut = static_cast<std::size_t>(t);
            if (pred_[ut] >= 0) continue;
            if (t == start) {
                if (static_cast<std::size_t>(chain) >= remaining_.size() || remaining_[static_cast<std::size_t>(chain)] == 0) continue;
                --remaining_[static_cast<std::size_t>(chain)];
                s0_[uh] = t;
                pred_[ut] = h;
                pair_step(h);
                pred_[ut] = -1;
                s0_[uh] = -1;
                ++remaining_[static_cast<std::size_t>(chain)];
            } else {
                int tail_len = 1;
                for (int x = t; s0_[static_cast<std::size_t>(x)] >= 0; x = s0_[static_cast<std::size_t>(x)]) ++tail_len;
                if (!degree_available(chain + tail_len)) continue;
                s0_[uh] = t;
                pred_[ut] = h;
                pair_step(h);
                pred_[ut] = -1;
                s0_[uh] = -1;
            }
        }
        if (labelled_ < H_ && degree_available(chain + 1)) {
            int t = labelled_++;
            s0_[uh] = t;
            pred_[static_cast<std::size_t>(t)] = h;
            pair_step(h);
            pred_[static_cast<std::size_t>(t)] = -1;
            s0_[uh] = -1;
            --labelled_;
        }
    }

    void pair_step(int h) {
        auto uh = static_cast<std::size_t>(h);
        if (s1_[uh] >= 0) {
            step(h + 1);
            return;
        }
        for (int t = h + 1; t < labelled_; ++t) {
            auto ut = static_cast<std::size_t>(t);
            if (s1_[ut] >= 0) continue;
            s1_[uh] = t;
            s1_[ut] = h;
            step(h + 1);
            s1_[uh] = s1_[ut] = -1;
        }
        if (labelled_ < H_) {
            int t = labelled_++;
            s1_[uh] = t;
            s1_[static_cast<std::size_t>(t)] = h;
            step(h + 1);
            s1_[uh] = s1_[static_cast<std::size_t>(t)] = -1;
            --labelled_;
        }
    }

    void emit() {
        for (int r : remaining_)
            if (r != 0) return;
        // face count
        std::vector<int> inv0(static_cast<std::size_t>(H_));
        for (int h = 0; h < H_; ++h) inv0[static_cast<std::size_t>(s0_[static_cast<std::size_t>(h)])] = h;
        std::vector<bool> seen(static_cast<std::size_t>(H_), false);
        int faces = 0;
        for (int h = 0; h < H_; ++h) {
            if (seen[static_cast<std::size_t>(h)]) continue;
            ++faces;
            for (int x = h; !seen[static_cast<std::size_t>(x)]; x = inv0[static_cast<std::size_t>(s1_[static_cast<std::size_t>(x)])])
                seen[static_cast<std::size_t>(x)] = true;
        }
        if (faces != faces_) return;
        // keep only codes minimal over all roots; equal codes are automorphisms
        std::vector<int> own = code_from(s0_, s1_, nullptr, 0);
        Found f{s0_, s1_, {}};
        for (int r = 0; r < H_; ++r) {
            std::vector<int> order;
            std::vector<int> c = code_from(s0_, s1_, nullptr, r, &order);
            if (c < own) return;
            if (c == own) f.automorphisms.push_back(order);  // label t (from root 0) -> order[t]
        }
        found_.push_back(std::move(f));
    }
};

}  // namespace

std::vector<int> rooted_code(const RibbonGraph& graph, int root, bool with_labels) {
    std::vector<int> labels = per_half_edge_labels(graph);
    return code_from(graph.s0_permutation(), graph.s1_permutation(), with_labels ? &labels : nullptr, root);
}

std::vector<int> canonical_code(const RibbonGraph& graph, bool with_labels) {
    std::vector<int> best;
    for (int r = 0; r < graph.half_edge_count(); ++r) {
        auto c = rooted_code(graph, r, with_labels);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

std::int64_t automorphism_group_order(const RibbonGraph& graph) {
    auto reference = rooted_code(graph, 0, true);
    std::int64_t count = 0;
    for (int r = 0; r < graph.half_edge_count(); ++r)
        if (rooted_code(graph, r, true) == reference) ++count;
    return count;
}

std::optional<std::vector<int>> find_isomorphism(const RibbonGraph& from, const RibbonGraph& to, bool respect_labels) {
    if (from.half_edge_count() != to.half_edge_count()) return std::nullopt;
    std::vector<int> lf = per_half_edge_labels(from), lt = per_half_edge_labels(to);
    std::vector<int> order_from, order_to;
    auto target = code_from(from.s0_permutation(), from.s1_permutation(), respect_labels ? &lf : nullptr, 0, &order_from);
    for (int r = 0; r < to.half_edge_count(); ++r) {
        if (code_from(to.s0_permutation(), to.s1_permutation(), respect_labels ? &lt : nullptr, r, &order_to) != target) continue;
        std::vector<int> phi(static_cast<std::size_t>(from.half_edge_count()));
        for (std::size_t t = 0; t < order_from.size(); ++t) phi[static_cast<std::size_t>(order_from[t])] = order_to[t];
        return phi;
    }
    return std::nullopt;
}

std::vector<EnumeratedGraph> enumerate(int g, int n, const std::vector<int>& degrees) {
    for (int d : degrees)
        if (d < 3) throw DomainError("vertex degrees must be at least 3");
    if (g < 0 || n < 1 || 2 - 2 * g - n >= 0 || degrees.empty()) return {};
    int H = std::accumulate(degrees.begin(), degrees.end(), 0);
    if (H % 2 != 0) return {};
    int V = static_cast<int>(degrees.size()), E = H / 2;
    if (V - E + n != 2 - 2 * g) return {};

    auto maps = MapGenerator(degrees, n).run();

    struct Entry {
        std::vector<int> key;
        EnumeratedGraph value;
    };
    std::vector<Entry> out;
    for (const auto& m : maps) {
        RibbonGraph base(m.s0, m.s1);  // faces indexed by canonical cycle order
        const int F = base.face_count();
        // face permutation induced by each automorphism
        std::vector<std::vector<int>> face_perm;
        for (const auto& phi : m.automorphisms) {
            std::vector<int> p(static_cast<std::size_t>(F));
            for (int f = 0; f < F; ++f) p[static_cast<std::size_t>(f)] = base.face_of(phi[static_cast<std::size_t>(base.face_by_index(f)[0])]);
            face_perm.push_back(std::move(p));
        }
        // pair half-edges as (2k, 2k+1) in breadth-first order
        std::vector<int> relabel(static_cast<std::size_t>(H), -1);
        int next = 0;
        for (int h = 0; h < H; ++h) {
            if (relabel[static_cast<std::size_t>(h)] >= 0) continue;
            relabel[static_cast<std::size_t>(h)] = next++;
            relabel[static_cast<std::size_t>(m.s1[static_cast<std::size_t>(h)])] = next++;
        }
        std::vector<int> s0(static_cast<std::size_t>(H)), s1(static_cast<std::size_t>(H));
        for (int h = 0; h < H; ++h) {
            s0[static_cast<std::size_t>(relabel[static_cast<std::size_t>(h)])] = relabel[static_cast<std::size_t>(m.s0[static_cast<std::size_t>(h)])];
            s1[static_cast<std::size_t>(relabel[static_cast<std::size_t>(h)])] = relabel[static_cast<std::size_t>(m.s1[static_cast<std::size_t>(h)])];
        }
        RibbonGraph shape(s0, s1);
        std::vector<int> back(static_cast<std::size_t>(H));
        for (int h = 0; h < H; ++h) back[static_cast<std::size_t>(relabel[static_cast<std::size_t>(h)])] = h;

        std::vector<int> lambda(static_cast<std::size_t>(F));
        std::iota(lambda.begin(), lambda.end(), 1);
        do {
            bool minimal = true;
            std::int64_t stabilizer = 0;
            std::vector<int> moved(static_cast<std::size_t>(F));
            for (const auto& p : face_perm) {
                for (int f = 0; f < F; ++f) moved[static_cast<std::size_t>(p[static_cast<std::size_t>(f)])] = lambda[static_cast<std::size_t>(f)];
                if (moved < lambda) {
                    minimal = false;
                    break;
                }
                if (moved == lambda) ++stabilizer;
            }
            if (!minimal) continue;
            std::vector<int> labels;
            for (const auto& cycle : shape.face_cycles())
                labels.push_back(lambda[static_cast<std::size_t>(base.face_of(back[static_cast<std::size_t>(cycle[0])]))]);
            std::vector<int> key = rooted_code(base, 0, false);
            key.insert(key.end(), lambda.begin(), lambda.end());
            out.push_back({std::move(key), {RibbonGraph(s0, s1, labels), stabilizer}});
        } while (std::next_permutation(lambda.begin(), lambda.end()));
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
    std::vector<EnumeratedGraph> result;
    result.reserve(out.size());
    for (auto& e : out) result.push_back(std::move(e.value));
    return result;
}

std::vector<EnumeratedGraph> enumerate_trivalent(int g, int n) {
    int V = 4 * g - 4 + 2 * n;
    if (V <= 0) return {};
    return enumerate(g, n, std::vector<int>(static_cast<std::size_t>(V), 3));
}

}  // namespace moduli::ribbon
