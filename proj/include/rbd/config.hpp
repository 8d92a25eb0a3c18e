#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbd/lattice.hpp"
#include "rbd/plumbing.hpp"

namespace rbd {

// Sphere classes realizing a plumbing tree inside a blow-up lattice:
// classes[i].classes[i] must equal weight i, and |classes[i].classes[j]|
// must be 1 exactly on edges (orientations are free, so only the absolute
// value is pinned; the report records signs).
struct SphereConfiguration {
    BlowupLattice lattice;
    PlumbingGraph graph;
    std::vector<HomologyClass> classes;

    SphereConfiguration(BlowupLattice lat, PlumbingGraph g, std::vector<HomologyClass> cls);
};

struct ConfigViolation {
    int i;
    int j;          // i == j for a wrong self-intersection
    Int got;
    Int expected;   // expected |value| on edges; exact value otherwise
    bool edge;
    std::string to_string() const;
};

struct VerifyReport {
    bool ok = true;
    std::vector<ConfigViolation> violations;
    std::string to_string() const;
};

VerifyReport verify_configuration(const SphereConfiguration& c);

struct SearchOptions {
    long long coefficient_bound = 3;
    long long node_budget = 200'000'000; // throws BudgetError when exhausted
    bool parallel = true;
};

// Depth-first search over coefficient vectors with |c| <= bound, vertex-major
// and coefficient-ascending, honoring any fixed classes.  Returns the
// lexicographically least solution, or nothing when the space is exhausted.
// The parallel variant splits on the leading free coefficients and merges to
// the same answer as a serial run.
std::optional<SphereConfiguration> find_configuration(
    const PlumbingGraph& g, const BlowupLattice& lat,
    const std::map<int, HomologyClass>& fixed, const SearchOptions& opts = {});

std::optional<SphereConfiguration> find_configuration_serial(
    const PlumbingGraph& g, const BlowupLattice& lat,
    const std::map<int, HomologyClass>& fixed, const SearchOptions& opts = {});

// Blow up a point of multiplicity m on x: the lattice gains one exceptional
// class E, and x becomes x - m*E.
std::pair<HomologyClass, BlowupLattice> blow_up(const HomologyClass& x, const Int& m);

// Smooth a positive transverse intersection: x + y.  Requires x.y >= 1.
HomologyClass smooth_intersection(const HomologyClass& x, const HomologyClass& y);

// A disk section with some number of positive double points; resolving
// blows up each double point with multiplicity 2.
struct PseudoSection {
    HomologyClass cls;
    int double_points;
};

PseudoSection pseudo_section(const HomologyClass& s, int double_points);
std::pair<HomologyClass, BlowupLattice> resolve(const PseudoSection& s);

enum class FiberKind { cyclic, fishtail }; // cyclic = I_k

struct FiberComponent {
    HomologyClass cls;
    Int multiplicity;
};

// Multiset of sphere classes presenting one singular elliptic fiber.
struct FiberModel {
    FiberKind kind;
    int k; // for cyclic fibers; fishtails have k = 1
    std::vector<FiberComponent> components;
};

// Components sum (with multiplicity) to the fiber class, and cyclic fibers
// intersect in a cycle: consecutive pairs hit once, all other pairs miss.
bool fiber_decomposition_check(const FiberModel& f, const HomologyClass& fiber_class);

} // namespace rbd
