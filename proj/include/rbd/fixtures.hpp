#pragma once

#include <string>
#include <vector>

#include "rbd/config.hpp"
#include "rbd/cutpaste.hpp"
#include "rbd/monodromy.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/seifert.hpp"

namespace rbd::fixtures {

// Named data of the four blow-down constructions.  Classes below the
// theorem-level spheres are derived by bounded search and verified here;
// they are consistent with the published figures but not quoted from them.

BlowupLattice rational_surface(int n); // <1> (+) n<-1>
BlowupLattice negative_lattice(int n); // n<-1>

HomologyClass hyperplane(const BlowupLattice& lat); // (1, 0, ..., 0)

// ---- first construction: the r = 2 tree inside the 13-fold blow-up ----

// 3H - E1 - ... - E13; evaluates as weight+2 on every configured sphere.
HomologyClass characteristic_first();

// 6H - 2E1 - 2E2 - 2(E4..E9) - E10 - E12 - E13; square 1, orthogonal to the
// whole configured tree.
HomologyClass chamber_class_first();

HomologyClass smoothed_fishtail_sphere(); // 3H - E1 - E2 - (E4..E9) - 2E10
HomologyClass cycle_leg_sphere();         // 3H - 2E1 - E2 - (E4..E9) - E11

SphereConfiguration p1_in_13();        // full r=2 configuration, verified
SphereConfiguration p1_reference();    // r=2 tree in 4<-1>

// ---- second construction: the r = 4 tree inside the 14-fold blow-up ----

HomologyClass characteristic_second(); // 3h - e1 - ... - e14
HomologyClass chamber_class_second();  // 7h - 3e1 - 2(e2..e9) - e12 - e13 - 2e14

SphereConfiguration p2_in_14();
SphereConfiguration p2_reference();    // r=4 tree in 6<-1>

// ---- fiber models over the 9-fold blow-up -------------------------------

HomologyClass elliptic_fiber_class();  // 3H - E1 - ... - E9
FiberModel triangle_fiber();           // I3 as three lines
FiberModel cycle_fiber_from_pencil();  // I3 splitting with two exceptional legs

// ---- blow-down plans -----------------------------------------------------

struct NamedPlan {
    std::string name;
    BlowdownPlan plan;
    Int expected_e;
    Int expected_sigma;
    std::string expected_name;
};

std::vector<NamedPlan> blowdown_plans(); // the five identifications

// ---- monodromy censuses with certificates -------------------------------

FibrationCensus census_i3();
FibrationCensus census_i5();
FibrationCensus census_i7();

} // namespace rbd::fixtures
