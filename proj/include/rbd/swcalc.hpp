#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/config.hpp"
#include "rbd/lattice.hpp"

namespace rbd {

// Ambient data for b2+ = 1 wall-crossing arithmetic: the fingerprint (e,
// sigma), a characteristic class K = c1 of the spin-c structure, and a
// positive-square anchor H orienting the positive cone.
struct SWContext {
    Int e;
    Int sigma;
    HomologyClass K;
    HomologyClass H;

    SWContext(Int e_in, Int sigma_in, HomologyClass K_in, HomologyClass H_in);
};

// d = (K^2 - (3 sigma + 2 e)) / 4.  A non-integral result means K is not
// characteristic for this fingerprint.
Int formal_dimension(const Int& k_sq, const Int& sigma, const Int& e);

// SW+ = SW- - (-1)^(d/2), for d >= 0 and even.
Int wall_cross(const Int& minus, const Int& d);

// K changes sign between the anchor and a: a wall sits between their
// period points.  Preconditions H.H > 0, a.a >= 0, H.a > 0.
bool wall_between(const HomologyClass& K, const HomologyClass& H, const HomologyClass& a);

// Value in the a-chamber when the anchor chamber vanishes: one crossing
// from the anchor side.  The sign is a convention (crossing orientation
// anchor -> a); only the magnitude is pinned.  d odd or negative gives 0.
Int small_perturbation_sw(const SWContext& ctx, const HomologyClass& a,
                          bool psc_chamber_vanishes);

// With b2+ = 1 and b2- <= 9 every class of nonnegative dimension has
// nonnegative square, and no wall meets the positive cone.
bool unique_chamber(const Int& b_minus);

struct ClassConditionReport {
    Int a_square;
    Int h_pairing;
    Int k_pairing;
    std::vector<Int> sphere_pairings;
    bool square_ok;
    bool h_ok;
    bool k_ok;
    bool vanishes_on_spheres;

    bool all_pass() const { return square_ok && h_ok && k_ok && vanishes_on_spheres; }
    std::string to_text() const;
};

ClassConditionReport class_condition_report(const HomologyClass& a, const HomologyClass& K,
                                            const HomologyClass& H,
                                            const SphereConfiguration& cfg);

// ---- exhaustive chamber sweep -------------------------------------------
//
// Enumerates every characteristic vector with odd coefficients in
// [-coeff_bound, coeff_bound] over <1> (+) b<-1> for b = 0..b_max and looks
// at those with formal dimension >= 0.  first_nonpositive witnesses K^2 <= 0
// (the strict positivity claim), first_negative witnesses K^2 < 0 (an actual
// wall class).  For b <= 9 no wall class exists; the square can still hit
// zero, exactly at b = 9.

struct SweepWitness {
    int b;
    std::vector<long long> coeffs;
    long long k_sq;
    std::string to_string() const;
};

struct ChamberSweepResult {
    long long candidates = 0;
    long long admissible = 0; // formal dimension >= 0
    long long nonpositive_square = 0;
    long long negative_square = 0;
    std::optional<SweepWitness> first_nonpositive;
    std::optional<SweepWitness> first_negative;
};

ChamberSweepResult chamber_sweep_serial(int b_max, int coeff_bound);
ChamberSweepResult chamber_sweep(int b_max, int coeff_bound); // OpenMP kernel

// No class a with a.a >= 0 and H.a > 0 (coefficients bounded) sees K on the
// other side of a wall from the anchor H = (1, 0, ..., 0).
bool no_wall_against_anchor(const HomologyClass& K, long long coeff_bound);

} // namespace rbd
