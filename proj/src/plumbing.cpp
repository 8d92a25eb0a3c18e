#include "rbd/plumbing.hpp"

#include <algorithm>
#include <map>

namespace rbd {

PlumbingGraph::PlumbingGraph(std::vector<Int> weights, std::vector<std::pair<int, int>> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
    const int n = vertex_count();
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw StructureError("edge references a vertex that does not exist");
        if (u == v) throw StructureError("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw StructureError("at most one edge per vertex pair");
}

bool PlumbingGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

std::vector<int> PlumbingGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

int PlumbingGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool PlumbingGraph::connected() const {
    const int n = vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool PlumbingGraph::is_tree() const {
    return connected() && static_cast<int>(edges_.size()) == vertex_count() - 1;
}

// Arm weights read center-outward, one list per branch at the center.
static std::vector<std::vector<Int>> star_arms(const PlumbingGraph& g, int center) {
    std::vector<std::vector<Int>> arms;
    for (int start : g.neighbors(center)) {
        std::vector<Int> arm;
        int prev = center, cur = start;
        while (true) {
            arm.push_back(g.weights()[static_cast<size_t>(cur)]);
            std::vector<int> next;
            for (int w : g.neighbors(cur))
                if (w != prev) next.push_back(w);
            if (next.empty()) break;
            if (next.size() > 1) return {}; // branches away from the center
            prev = cur;
            cur = next[0];
        }
        arms.push_back(std::move(arm));
    }
    return arms;
}

// Unique center of a star: the sole vertex of degree >= 3.
static int star_center(const PlumbingGraph& g) {
    if (!g.is_tree()) return -1;
    if (g.vertex_count() == 1) return 0;
    int center = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) {
            if (center >= 0) return -1;
            center = v;
        }
    return center;
}

bool PlumbingGraph::isomorphic_star(const PlumbingGraph& other) const {
    int c1 = star_center(*this), c2 = star_center(other);
    if (c1 < 0 || c2 < 0) return *this == other;
    if (weights_[static_cast<size_t>(c1)] != other.weights_[static_cast<size_t>(c2)]) return false;
    auto a1 = star_arms(*this, c1), a2 = star_arms(other, c2);
    if (a1.empty() && !neighbors(c1).empty()) return false;
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    return a1 == a2;
}

SymmetricForm intersection_form(const PlumbingGraph& g) {
    if (!g.connected()) throw StructureError("plumbing graph must be connected");
    const int n = g.vertex_count();
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = g.weights()[static_cast<size_t>(i)];
    for (const auto& [a, b] : g.edges()) {
        m[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
        m[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
    }
    return SymmetricForm(std::move(m));
}

BoundaryInvariants boundary_h1(const PlumbingGraph& g) {
    SymmetricForm q = intersection_form(g);
    BoundaryInvariants out;
    out.h1_order = int_abs(determinant(q));
    for (const Int& d : smith_normal_form(q))
        if (d > 1) out.h1_divisors.push_back(d);
    return out;
}

bool is_negative_definite(const PlumbingGraph& g) {
    SignatureStats s = signature_stats(intersection_form(g));
    return s.b_plus == 0 && s.b_zero == 0;
}

CompactPieceInvariants plumbed_invariants(const PlumbingGraph& g) {
    if (!g.is_tree())
        throw StructureError("plumbed invariants are only defined for trees here");
    const int n = g.vertex_count();
    SignatureStats s = signature_stats(intersection_form(g));
    return CompactPieceInvariants{Int(n + 1), Int(s.b_plus - s.b_minus), Int(0), Int(n)};
}

CompactPieceInvariants rational_ball_invariants() {
    return CompactPieceInvariants{Int(1), Int(0), Int(0), Int(0)};
}

PlumbingGraph wahl_tree(const Int& r) {
    if (r < 2 || is_odd(r))
        throw DomainError("wahl tree parameter must be even and >= 2");
    const long rl = r.get_si();
    std::vector<Int> w;
    std::vector<std::pair<int, int>> e;
    w.push_back(Int(-4));            // center
    w.push_back(Int(-(rl + 1)));     // long-weight arm
    e.emplace_back(0, 1);
    w.push_back(Int(-3));            // short arm
    e.emplace_back(0, 2);
    int prev = 0;                    // chain arm: (r-2) copies of -2, then -3
    for (long i = 0; i < rl - 2; ++i) {
        w.push_back(Int(-2));
        e.emplace_back(prev, static_cast<int>(w.size()) - 1);
        prev = static_cast<int>(w.size()) - 1;
    }
    w.push_back(Int(-3));
    e.emplace_back(prev, static_cast<int>(w.size()) - 1);
    return PlumbingGraph(std::move(w), std::move(e));
}

} // namespace rbd
