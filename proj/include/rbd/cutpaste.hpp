#pragma once

#include <string>
#include <vector>

#include "rbd/config.hpp"
#include "rbd/lattice.hpp"
#include "rbd/plumbing.hpp"

namespace rbd {

// Freedman fingerprint of a closed 4-manifold.  simply_connected is a
// recorded assumption, never computed; assumptions lists where it came from.
struct ClosedManifoldModel {
    Int e;
    Int sigma;
    Int b1 = 0;
    bool simply_connected = false;
    Parity parity = Parity::odd;
    std::vector<std::string> assumptions;

    Int b2() const { return e - 2; }
};

// Cut out P along Y, glue in the rational ball B.
struct BlowdownPlan {
    ClosedManifoldModel ambient;
    CompactPieceInvariants piece;
    CompactPieceInvariants ball;
    BoundaryInvariants boundary;
    bool lspace_flag = true; // recorded assumption for the Wahl-family boundaries
    std::vector<std::string> assumptions;
};

// Euler characteristic and signature are additive over the shared boundary;
// parity and simple connectivity carry over as recorded assumptions.
ClosedManifoldModel rational_blowdown(const BlowdownPlan& plan);

// Name "CP^2 # k(-CP^2)" when the fingerprint matches (k = e - 3,
// sigma = 1 - k, odd form); "unrecognized" otherwise.  Refuses models whose
// simple connectivity is not recorded.
std::string freedman_classify(const ClosedManifoldModel& m);

// Value transfer for the blow-down: under the hypotheses (boundary is an
// L-space with finite H1, both pieces negative definite with b1 = 0,
// nonnegative dimensions, matching restrictions) the invariant is carried
// over unchanged.  Each unmet hypothesis raises a distinct error.
Int sw_transfer(const Int& value, const BlowdownPlan& plan, const Int& d,
                bool restrictions_agree);

// K extends over the glued-in ball iff it evaluates on the configured
// spheres exactly as the all-ones class evaluates on a reference
// configuration of the same tree in a purely negative lattice.
bool characteristic_extension_check(const HomologyClass& K,
                                    const SphereConfiguration& cfg,
                                    const SphereConfiguration& ref_cfg);

} // namespace rbd
