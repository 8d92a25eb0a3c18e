#include <doctest.h>

#include "rbd/fixtures.hpp"
#include "rbd/swcalc.hpp"

using namespace rbd;

// The OpenMP kernels must agree with the serial references exactly,
// witnesses included.

TEST_CASE("chamber sweep: serial and parallel agree") {
    for (auto [b_max, bound] : {std::pair{2, 7}, std::pair{6, 5}, std::pair{9, 3}}) {
        ChamberSweepResult s = chamber_sweep_serial(b_max, bound);
        ChamberSweepResult p = chamber_sweep(b_max, bound);
        CHECK(s.candidates == p.candidates);
        CHECK(s.admissible == p.admissible);
        CHECK(s.nonpositive_square == p.nonpositive_square);
        CHECK(s.negative_square == p.negative_square);
        CHECK(s.first_nonpositive.has_value() == p.first_nonpositive.has_value());
        if (s.first_nonpositive) {
            CHECK(s.first_nonpositive->b == p.first_nonpositive->b);
            CHECK(s.first_nonpositive->coeffs == p.first_nonpositive->coeffs);
        }
    }
}

TEST_CASE("sweep counts are exhaustive") {
    // bound 3 gives 4 odd values per coordinate: 4^(b+1) classes at rank b+1
    ChamberSweepResult r = chamber_sweep(2, 3);
    CHECK(r.candidates == 4 + 16 + 64);
}

TEST_CASE("configuration search: serial and parallel agree") {
    SearchOptions small;
    small.coefficient_bound = 1;
    auto s1 = find_configuration_serial(wahl_tree(Int(2)), fixtures::negative_lattice(4), {}, small);
    auto p1 = find_configuration(wahl_tree(Int(2)), fixtures::negative_lattice(4), {}, small);
    REQUIRE(s1.has_value());
    REQUIRE(p1.has_value());
    CHECK(s1->classes == p1->classes);

    // the r=4 tree in the rank-6 negative lattice, all six classes free
    auto s2 = find_configuration_serial(wahl_tree(Int(4)), fixtures::negative_lattice(6), {}, small);
    auto p2 = find_configuration(wahl_tree(Int(4)), fixtures::negative_lattice(6), {}, small);
    REQUIRE(s2.has_value());
    REQUIRE(p2.has_value());
    CHECK(s2->classes == p2->classes);
    CHECK(verify_configuration(*s2).ok);

    // completion of the stated spheres in the rank-14 lattice
    std::map<int, HomologyClass> fixed{
        {1, fixtures::cycle_leg_sphere()},
        {3, fixtures::smoothed_fishtail_sphere()},
    };
    auto s3 = find_configuration_serial(wahl_tree(Int(2)), fixtures::rational_surface(13), fixed);
    auto p3 = find_configuration(wahl_tree(Int(2)), fixtures::rational_surface(13), fixed);
    REQUIRE(s3.has_value());
    REQUIRE(p3.has_value());
    CHECK(s3->classes == p3->classes);

    // nonexistence agrees too
    PlumbingGraph three({Int(-3)}, {});
    CHECK_FALSE(find_configuration_serial(three, fixtures::negative_lattice(1), {}, small));
    CHECK_FALSE(find_configuration(three, fixtures::negative_lattice(1), {}, small));
}

TEST_CASE("parallel search is stable across repeated runs") {
    std::map<int, HomologyClass> fixed{
        {1, fixtures::cycle_leg_sphere()},
        {3, fixtures::smoothed_fishtail_sphere()},
    };
    auto first = find_configuration(wahl_tree(Int(2)), fixtures::rational_surface(13), fixed);
    REQUIRE(first.has_value());
    for (int i = 0; i < 3; ++i) {
        auto again = find_configuration(wahl_tree(Int(2)), fixtures::rational_surface(13), fixed);
        REQUIRE(again.has_value());
        CHECK(first->classes == again->classes);
    }
}
