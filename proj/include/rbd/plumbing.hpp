#pragma once

#include <utility>
#include <vector>

#include "rbd/lattice.hpp"

namespace rbd {

// Plumbing tree of spheres: one vertex per disk bundle, weighted by its
// Euler number, one edge per plumbing connection.
class PlumbingGraph {
public:
    PlumbingGraph(std::vector<Int> weights, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(weights_.size()); }
    const std::vector<Int>& weights() const { return weights_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    bool connected() const;
    bool is_tree() const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

    // Star-shaped trees compare equal up to reordering of their arms.
    bool isomorphic_star(const PlumbingGraph& other) const;

private:
    std::vector<Int> weights_;
    std::vector<std::pair<int, int>> edges_; // normalized i < j, sorted
};

struct BoundaryInvariants {
    Int h1_order;                  // 0 encodes infinite H1
    std::vector<Int> h1_divisors;  // nontrivial Smith divisors (> 1)
};

struct CompactPieceInvariants {
    Int e;
    Int sigma;
    Int b1;
    Int b2;
};

// Euler numbers on the diagonal, 1 where an edge joins two vertices.
SymmetricForm intersection_form(const PlumbingGraph& g);

// H1 of the plumbed boundary: cokernel of the intersection form.
BoundaryInvariants boundary_h1(const PlumbingGraph& g);

bool is_negative_definite(const PlumbingGraph& g);

// One 0-handle plus one 2-handle per vertex: e = n+1, b1 = 0, b2 = n.
// Trees only; cycles are modeled as fiber class sets, not as plumbings.
CompactPieceInvariants plumbed_invariants(const PlumbingGraph& g);

// Invariants of a rational homology ball: e = 1, everything else 0.
CompactPieceInvariants rational_ball_invariants();

// The Wahl-type family: central -4 vertex with arms [-(r+1)], [-3] and
// [-2 x (r-2), -3], for even r >= 2.  r=2, 4, 6 give the three trees used
// in the blow-down constructions.
PlumbingGraph wahl_tree(const Int& r);

} // namespace rbd
