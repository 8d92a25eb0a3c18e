#include "rbd/fixtures.hpp"

namespace rbd::fixtures {

namespace {

HomologyClass cls(const BlowupLattice& lat, std::vector<long> v) {
    std::vector<Int> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return HomologyClass(lat, std::move(c));
}

} // namespace

BlowupLattice rational_surface(int n) { return BlowupLattice(1, n); }
BlowupLattice negative_lattice(int n) { return BlowupLattice(0, n); }

HomologyClass hyperplane(const BlowupLattice& lat) {
    std::vector<Int> c(static_cast<size_t>(lat.rank()), Int(0));
    c[0] = 1;
    return HomologyClass(lat, std::move(c));
}

HomologyClass characteristic_first() {
    std::vector<Int> c(14, Int(-1));
    c[0] = 3;
    return HomologyClass(rational_surface(13), std::move(c));
}

HomologyClass chamber_class_first() {
    //        H  E1  E2  E3  E4  E5  E6  E7  E8  E9 E10 E11 E12 E13
    return cls(rational_surface(13),
               {6, -2, -2, 0, -2, -2, -2, -2, -2, -2, -1, 0, -1, -1});
}

HomologyClass smoothed_fishtail_sphere() {
    return cls(rational_surface(13),
               {3, -1, -1, 0, -1, -1, -1, -1, -1, -1, -2, 0, 0, 0});
}

HomologyClass cycle_leg_sphere() {
    return cls(rational_surface(13),
               {3, -2, -1, 0, -1, -1, -1, -1, -1, -1, 0, -1, 0, 0});
}

SphereConfiguration p1_in_13() {
    BlowupLattice lat = rational_surface(13);
    // center: triangle component meeting the section, blown up twice;
    // legs: the other two components sharing one blow-up, and the smoothed
    // fishtail.
    std::vector<HomologyClass> classes{
        cls(lat, {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1}),
        cycle_leg_sphere(),
        cls(lat, {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0}),
        smoothed_fishtail_sphere(),
    };
    return SphereConfiguration(lat, wahl_tree(Int(2)), std::move(classes));
}

SphereConfiguration p1_reference() {
    BlowupLattice lat = negative_lattice(4);
    std::vector<HomologyClass> classes{
        cls(lat, {1, 1, 1, -1}),
        cls(lat, {1, -1, 0, 1}),
        cls(lat, {-1, 0, 1, 1}),
        cls(lat, {0, 1, -1, 1}),
    };
    return SphereConfiguration(lat, wahl_tree(Int(2)), std::move(classes));
}

HomologyClass characteristic_second() {
    std::vector<Int> c(15, Int(-1));
    c[0] = 3;
    return HomologyClass(rational_surface(14), std::move(c));
}

HomologyClass chamber_class_second() {
    //        h  e1  e2  e3  e4  e5  e6  e7  e8  e9 e10 e11 e12 e13 e14
    return cls(rational_surface(14),
               {7, -3, -2, -2, -2, -2, -2, -2, -2, -2, 0, 0, -1, -1, -2});
}

SphereConfiguration p2_in_14() {
    BlowupLattice lat = rational_surface(14);
    // Cycle components c1..c5 of the five-fold fiber, section e9; the two
    // fishtails are blown up at their nodes (e12, e14), the cycle corner at
    // e13, and the section component twice (e10, e11).
    std::vector<HomologyClass> classes{
        // c1 - e10 - e11
        cls(lat, {1, -1, -1, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0}),
        // 2*fiber + section - 2e12 - 2e14
        cls(lat, {6, -2, -2, -2, -2, -2, -2, -2, -2, -1, 0, 0, -2, 0, -2}),
        // c2 - e13
        cls(lat, {1, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0}),
        // c5 = e2 - e6
        cls(lat, {0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0}),
        // c4 = e6 - e8
        cls(lat, {0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0}),
        // c3 - e13
        cls(lat, {1, 0, -1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, -1, 0}),
    };
    return SphereConfiguration(lat, wahl_tree(Int(4)), std::move(classes));
}

SphereConfiguration p2_reference() {
    BlowupLattice lat = negative_lattice(6);
    std::vector<HomologyClass> classes{
        cls(lat, {1, 1, 1, -1, 0, 0}),
        cls(lat, {1, -1, 0, 1, 1, 1}),
        cls(lat, {0, 1, -1, 1, 0, 0}),
        cls(lat, {1, 0, 0, 0, -1, 0}),
        cls(lat, {0, 0, 0, 0, 1, -1}),
        cls(lat, {0, 0, 1, 1, 0, -1}),
    };
    return SphereConfiguration(lat, wahl_tree(Int(4)), std::move(classes));
}

HomologyClass elliptic_fiber_class() {
    std::vector<Int> c(10, Int(-1));
    c[0] = 3;
    return HomologyClass(rational_surface(9), std::move(c));
}

FiberModel triangle_fiber() {
    BlowupLattice lat = rational_surface(9);
    return FiberModel{FiberKind::cyclic, 3,
                      {{cls(lat, {1, -1, -1, -1, 0, 0, 0, 0, 0, 0}), Int(1)},
                       {cls(lat, {1, 0, 0, 0, -1, -1, -1, 0, 0, 0}), Int(1)},
                       {cls(lat, {1, 0, 0, 0, 0, 0, 0, -1, -1, -1}), Int(1)}}};
}

FiberModel cycle_fiber_from_pencil() {
    BlowupLattice lat = rational_surface(9);
    // Splitting with two exceptional components, as the triple base point
    // produces: (e2-e3) + (3h-2e1-e2-(e4..e9)) + (e1-e2).
    return FiberModel{FiberKind::cyclic, 3,
                      {{cls(lat, {0, 0, 1, -1, 0, 0, 0, 0, 0, 0}), Int(1)},
                       {cls(lat, {3, -2, -1, 0, -1, -1, -1, -1, -1, -1}), Int(1)},
                       {cls(lat, {0, 1, -1, 0, 0, 0, 0, 0, 0, 0}), Int(1)}}};
}

std::vector<NamedPlan> blowdown_plans() {
    auto make_plan = [](Int e, Int sigma, const Int& r, const std::string& sc_note) {
        BlowdownPlan plan;
        plan.ambient = ClosedManifoldModel{std::move(e), std::move(sigma), Int(0), true,
                                           Parity::odd,
                                           {"ambient is a rational surface: simply connected"}};
        PlumbingGraph tree = wahl_tree(r);
        plan.piece = plumbed_invariants(tree);
        plan.boundary = boundary_h1(tree);
        plan.ball = rational_ball_invariants();
        plan.lspace_flag = true;
        plan.assumptions = {
            "boundary is a monopole L-space (recorded, not computed)",
            "complement of the glued ball stays simply connected: " + sc_note,
            "glued piece is a rational ball bounding the same Seifert space",
        };
        return plan;
    };

    std::vector<NamedPlan> out;
    out.push_back({"X1'", make_plan(Int(16), Int(-12), Int(2), "normal circles die on fishtail disks"),
                   Int(12), Int(-8), "CP²#9C̄P²"});
    out.push_back({"X2'", make_plan(Int(17), Int(-13), Int(4), "fishtail and exceptional disks"),
                   Int(11), Int(-7), "CP²#8C̄P²"});
    out.push_back({"X3'", make_plan(Int(16), Int(-12), Int(4), "disks on a fishtail and two exceptional spheres"),
                   Int(10), Int(-6), "CP²#7C̄P²"});
    out.push_back({"X3''", make_plan(Int(18), Int(-14), Int(6), "one fishtail reserved for the complement"),
                   Int(10), Int(-6), "CP²#7C̄P²"});
    out.push_back({"X4'", make_plan(Int(17), Int(-13), Int(6), "as in the previous constructions"),
                   Int(9), Int(-5), "CP²#6C̄P²"});
    return out;
}

namespace {

Fiber cyclic_fiber(int k, const std::string& conj) {
    return Fiber{true, k, parse_word(conj)};
}

Fiber fishtail(const std::string& conj) { return Fiber{false, 1, parse_word(conj)}; }

} // namespace

// (a^3 b)^3 = 1 read off as a^3 times nine conjugated fishtails.
FibrationCensus census_i3() {
    FibrationCensus c;
    c.fibers = {cyclic_fiber(3, ""), fishtail("a b"), fishtail(""), fishtail(""),
                fishtail(""),        fishtail("a b"), fishtail(""), fishtail(""),
                fishtail(""),        fishtail("a b")};
    return c;
}

// a^5 (a^-2 b a^2) a b a a a b = 1 with each b spelled as a conjugate of a.
FibrationCensus census_i5() {
    FibrationCensus c;
    c.fibers = {cyclic_fiber(5, ""), fishtail("A b"), fishtail(""),  fishtail("a b"),
                fishtail(""),        fishtail(""),    fishtail(""),  fishtail("a b")};
    return c;
}

// The same relation pushed to a^7 with five fishtails.
FibrationCensus census_i7() {
    FibrationCensus c;
    c.fibers = {cyclic_fiber(7, ""), fishtail("A^3 b"), fishtail("b"), fishtail("a^3 b"),
                fishtail(""),        fishtail("")};
    return c;
}

} // namespace rbd::fixtures
