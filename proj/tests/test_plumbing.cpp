#include <doctest.h>

#include "oracles.hpp"
#include "rbd/plumbing.hpp"

using namespace rbd;

TEST_CASE("intersection form of the r=2 tree") {
    PlumbingGraph p1 = wahl_tree(Int(2));
    SymmetricForm q = intersection_form(p1);
    std::vector<std::vector<Int>> want{
        {Int(-4), Int(1), Int(1), Int(1)},
        {Int(1), Int(-3), Int(0), Int(0)},
        {Int(1), Int(0), Int(-3), Int(0)},
        {Int(1), Int(0), Int(0), Int(-3)},
    };
    CHECK(q == SymmetricForm(want));
}

TEST_CASE("intersection form edge cases") {
    PlumbingGraph single({Int(-1)}, {});
    CHECK(intersection_form(single) == SymmetricForm({{Int(-1)}}));

    PlumbingGraph p2 = wahl_tree(Int(4));
    SymmetricForm q = intersection_form(p2);
    std::vector<Int> diag{Int(-4), Int(-5), Int(-3), Int(-2), Int(-2), Int(-3)};
    for (int i = 0; i < 6; ++i) CHECK(q.at(i, i) == diag[static_cast<size_t>(i)]);

    PlumbingGraph disconnected({Int(-2), Int(-2)}, {});
    CHECK_THROWS_AS((void)intersection_form(disconnected), StructureError);

    CHECK_THROWS_AS(PlumbingGraph({Int(-2)}, {{0, 0}}), StructureError);
    CHECK_THROWS_AS(PlumbingGraph({Int(-2), Int(-2)}, {{0, 1}, {1, 0}}), StructureError);
}

TEST_CASE("boundary H1") {
    BoundaryInvariants b1 = boundary_h1(wahl_tree(Int(2)));
    CHECK(b1.h1_order == 81);
    CHECK(b1.h1_divisors == std::vector<Int>{Int(3), Int(27)});

    CHECK(boundary_h1(wahl_tree(Int(4))).h1_order == 289);
    CHECK(boundary_h1(wahl_tree(Int(6))).h1_order == 625);

    // zero determinant encodes infinite H1
    PlumbingGraph null_chain({Int(0)}, {});
    CHECK(boundary_h1(null_chain).h1_order == 0);
}

TEST_CASE("definiteness") {
    CHECK(is_negative_definite(wahl_tree(Int(2))));
    CHECK(is_negative_definite(wahl_tree(Int(4))));
    CHECK(is_negative_definite(wahl_tree(Int(6))));
    CHECK_FALSE(is_negative_definite(PlumbingGraph({Int(1)}, {})));

    // independent route via leading principal minors
    CHECK(oracle::jacobi_negative_definite(intersection_form(wahl_tree(Int(6)))));
}

TEST_CASE("plumbed 4-manifold invariants") {
    CompactPieceInvariants p1 = plumbed_invariants(wahl_tree(Int(2)));
    CHECK(p1.e == 5);
    CHECK(p1.sigma == -4);
    CHECK(p1.b1 == 0);
    CHECK(p1.b2 == 4);

    CHECK(plumbed_invariants(wahl_tree(Int(4))).e == 7);
    CHECK(plumbed_invariants(wahl_tree(Int(4))).sigma == -6);
    CHECK(plumbed_invariants(wahl_tree(Int(6))).e == 9);
    CHECK(plumbed_invariants(wahl_tree(Int(6))).sigma == -8);

    PlumbingGraph triangle({Int(-2), Int(-2), Int(-2)}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS((void)plumbed_invariants(triangle), StructureError);

    CompactPieceInvariants ball = rational_ball_invariants();
    CHECK(ball.e == 1);
    CHECK(ball.sigma == 0);
    CHECK(ball.b2 == 0);
}

TEST_CASE("wahl family trees") {
    PlumbingGraph p1 = wahl_tree(Int(2));
    CHECK(p1.vertex_count() == 4);
    CHECK(p1.weights() == std::vector<Int>{Int(-4), Int(-3), Int(-3), Int(-3)});

    PlumbingGraph p2 = wahl_tree(Int(4));
    CHECK(p2.weights() == std::vector<Int>{Int(-4), Int(-5), Int(-3), Int(-2), Int(-2), Int(-3)});
    CHECK(p2.degree(0) == 3);

    PlumbingGraph p4 = wahl_tree(Int(6));
    CHECK(p4.weights() ==
          std::vector<Int>{Int(-4), Int(-7), Int(-3), Int(-2), Int(-2), Int(-2), Int(-2), Int(-3)});
    CHECK(p4.vertex_count() == 8);

    CHECK_THROWS_AS((void)wahl_tree(Int(3)), DomainError);
    CHECK_THROWS_AS((void)wahl_tree(Int(0)), DomainError);
    CHECK_THROWS_AS((void)wahl_tree(Int(-2)), DomainError);
}

TEST_CASE("family boundary orders are (4r+1)^2") {
    for (long r : {2L, 4L, 6L, 8L, 10L}) {
        PlumbingGraph tree = wahl_tree(Int(r));
        Int order = boundary_h1(tree).h1_order;
        CHECK(order == Int((4 * r + 1)) * Int((4 * r + 1)));
        // cross-check against the cofactor-expansion determinant
        CHECK(order == int_abs(oracle::laplace_det(intersection_form(tree))));
        CHECK(is_negative_definite(tree));
        CompactPieceInvariants inv = plumbed_invariants(tree);
        CHECK(inv.e + Int(-1) * (Int(tree.vertex_count()) + 1) == 0);
        CHECK(inv.sigma == -Int(tree.vertex_count()));
    }
}

TEST_CASE("star isomorphism ignores arm order") {
    PlumbingGraph a({Int(-4), Int(-5), Int(-3), Int(-2), Int(-2), Int(-3)},
                    {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    PlumbingGraph b({Int(-4), Int(-3), Int(-5), Int(-2), Int(-2), Int(-3)},
                    {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    CHECK(a.isomorphic_star(b));
    CHECK(a.isomorphic_star(wahl_tree(Int(4))));
    CHECK_FALSE(a.isomorphic_star(wahl_tree(Int(2))));
}
