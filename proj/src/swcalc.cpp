#include "rbd/swcalc.hpp"

#include <omp.h>

#include <sstream>

namespace rbd {

SWContext::SWContext(Int e_in, Int sigma_in, HomologyClass K_in, HomologyClass H_in)
    : e(std::move(e_in)), sigma(std::move(sigma_in)), K(std::move(K_in)), H(std::move(H_in)) {
    if (!is_characteristic(K))
        throw HypothesisError("context class K must be characteristic");
    if (square(H) <= 0)
        throw HypothesisError("anchor H must have positive square");
    if (!(K.lattice() == H.lattice()))
        throw DimensionError("K and H live over different lattices");
}

Int formal_dimension(const Int& k_sq, const Int& sigma, const Int& e) {
    Int num = k_sq - (3 * sigma + 2 * e);
    if (!divides(Int(4), num))
        throw DomainError("dimension formula not divisible by 4; "
                          "class is not characteristic for this fingerprint");
    return num / 4;
}

Int wall_cross(const Int& minus, const Int& d) {
    if (d < 0 || is_odd(d))
        throw HypothesisError("wall crossing needs d >= 0 and even");
    Int half = d / 2;
    return is_odd(half) ? minus + 1 : minus - 1;
}

bool wall_between(const HomologyClass& K, const HomologyClass& H, const HomologyClass& a) {
    if (square(H) <= 0) throw HypothesisError("H.H > 0 required");
    if (square(a) < 0) throw HypothesisError("a.a >= 0 required");
    if (pair(H, a) <= 0) throw HypothesisError("H.a > 0 required");
    Int kh = pair(K, H);
    Int ka = pair(K, a);
    return (kh > 0 && ka < 0) || (kh < 0 && ka > 0);
}

Int small_perturbation_sw(const SWContext& ctx, const HomologyClass& a,
                          bool psc_chamber_vanishes) {
    Int d = formal_dimension(square(ctx.K), ctx.sigma, ctx.e);
    if (d < 0 || is_odd(d)) return 0; // invariant vanishes outright
    if (!psc_chamber_vanishes)
        throw HypothesisError("anchor-chamber value not known to vanish");
    if (!wall_between(ctx.K, ctx.H, a))
        throw HypothesisError("no wall between the anchor and the given class");
    return wall_cross(Int(0), d);
}

bool unique_chamber(const Int& b_minus) {
    if (b_minus < 0) throw DomainError("b_minus must be >= 0");
    return b_minus <= 9;
}

std::string ClassConditionReport::to_text() const {
    std::ostringstream os;
    os << "a.a: " << a_square.get_str() << ": " << (square_ok ? "PASS" : "FAIL") << "\n";
    os << "H.a: " << h_pairing.get_str() << ": " << (h_ok ? "PASS" : "FAIL") << "\n";
    os << "K.a: " << k_pairing.get_str() << ": " << (k_ok ? "PASS" : "FAIL") << "\n";
    os << "a|P: [";
    for (size_t i = 0; i < sphere_pairings.size(); ++i) {
        if (i) os << ",";
        os << sphere_pairings[i].get_str();
    }
    os << "]: " << (vanishes_on_spheres ? "PASS" : "FAIL") << "\n";
    return os.str();
}

ClassConditionReport class_condition_report(const HomologyClass& a, const HomologyClass& K,
                                            const HomologyClass& H,
                                            const SphereConfiguration& cfg) {
    ClassConditionReport r{square(a), pair(H, a), pair(K, a), {}, false, false, false, true};
    r.square_ok = r.a_square >= 0;
    r.h_ok = r.h_pairing > 0;
    r.k_ok = r.k_pairing < 0;
    for (const auto& s : cfg.classes) {
        Int p = pair(a, s);
        if (p != 0) r.vanishes_on_spheres = false;
        r.sphere_pairings.push_back(std::move(p));
    }
    return r;
}

std::string SweepWitness::to_string() const {
    std::ostringstream os;
    os << "b=" << b << " K=(";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        os << coeffs[i];
    }
    os << ") K^2=" << k_sq;
    return os.str();
}

namespace {

std::vector<long long> odd_values(int bound) {
    std::vector<long long> v;
    for (long long x = -bound; x <= bound; ++x)
        if (x % 2 != 0) v.push_back(x);
    return v;
}

// One block: fixed b and fixed leading coefficient.  Enumeration of the
// remaining coordinates is lexicographic, so the first witness recorded in
// a block is the least one of that block.
struct SweepBlock {
    ChamberSweepResult res;
};

void sweep_recurse(int pos, int b, long long neg_sq_sum, const std::vector<long long>& odds,
                   std::vector<long long>& coeffs, long long dim_floor, ChamberSweepResult& out) {
    if (pos == b) {
        // leaf level: run the innermost coordinate as a tight loop
        for (long long v : odds) {
            coeffs[static_cast<size_t>(b)] = v;
            long long k_sq = coeffs[0] * coeffs[0] - neg_sq_sum - v * v;
            ++out.candidates;
            if (k_sq >= dim_floor) {
                ++out.admissible;
                if (k_sq <= 0) {
                    ++out.nonpositive_square;
                    if (!out.first_nonpositive)
                        out.first_nonpositive =
                            SweepWitness{b, coeffs, k_sq};
                    if (k_sq < 0) {
                        ++out.negative_square;
                        if (!out.first_negative)
                            out.first_negative =
                                SweepWitness{b, coeffs, k_sq};
                    }
                }
            }
        }
        return;
    }
    for (long long v : odds) {
        coeffs[static_cast<size_t>(pos)] = v;
        sweep_recurse(pos + 1, b, neg_sq_sum + v * v, odds, coeffs, dim_floor, out);
    }
}

ChamberSweepResult sweep_block(int b, long long k0, const std::vector<long long>& odds) {
    ChamberSweepResult out;
    // 3*sigma + 2*e for <1> (+) b<-1> realized by a closed simply connected
    // manifold: sigma = 1 - b, e = 3 + b.
    long long dim_floor = 9 - b;
    std::vector<long long> coeffs(static_cast<size_t>(b) + 1, 0);
    coeffs[0] = k0;
    if (b == 0) {
        long long k_sq = k0 * k0;
        ++out.candidates;
        if (k_sq >= dim_floor) {
            ++out.admissible;
            if (k_sq <= 0) {
                ++out.nonpositive_square;
                out.first_nonpositive = SweepWitness{0, coeffs, k_sq};
                if (k_sq < 0) {
                    ++out.negative_square;
                    out.first_negative = SweepWitness{0, coeffs, k_sq};
                }
            }
        }
        return out;
    }
    sweep_recurse(1, b, 0, odds, coeffs, dim_floor, out);
    return out;
}

void merge(ChamberSweepResult& into, const ChamberSweepResult& part) {
    into.candidates += part.candidates;
    into.admissible += part.admissible;
    into.nonpositive_square += part.nonpositive_square;
    into.negative_square += part.negative_square;
    if (!into.first_nonpositive && part.first_nonpositive)
        into.first_nonpositive = part.first_nonpositive;
    if (!into.first_negative && part.first_negative)
        into.first_negative = part.first_negative;
}

} // namespace

ChamberSweepResult chamber_sweep_serial(int b_max, int coeff_bound) {
    if (b_max < 0 || coeff_bound < 1) throw DomainError("bad sweep parameters");
    std::vector<long long> odds = odd_values(coeff_bound);
    ChamberSweepResult total;
    for (int b = 0; b <= b_max; ++b)
        for (long long k0 : odds) merge(total, sweep_block(b, k0, odds));
    return total;
}

ChamberSweepResult chamber_sweep(int b_max, int coeff_bound) {
    if (b_max < 0 || coeff_bound < 1) throw DomainError("bad sweep parameters");
    std::vector<long long> odds = odd_values(coeff_bound);
    const int w = static_cast<int>(odds.size());
    const int grid = (b_max + 1) * w;
    std::vector<ChamberSweepResult> parts(static_cast<size_t>(grid));

#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < grid; ++t) {
        int b = t / w;
        long long k0 = odds[static_cast<size_t>(t % w)];
        parts[static_cast<size_t>(t)] = sweep_block(b, k0, odds);
    }

    // Block order equals lexicographic order, so merging in block order
    // reproduces the serial witnesses exactly.
    ChamberSweepResult total;
    for (const auto& p : parts) merge(total, p);
    return total;
}

namespace {

bool cone_scan(int pos, int rank, long long budget, const std::vector<long long>& k,
               const std::vector<long long>& k_suffix_abs, long long partial_ka,
               long long bound, int want_sign) {
    // budget = a0^2 - sum of squares so far; a.a >= 0 means budget >= 0 at
    // the end.  Returns true if some admissible completion gives K.a with
    // the hunted sign.
    if (pos == rank) return want_sign > 0 ? partial_ka > 0 : partial_ka < 0;
    // Even spending everything left, can the hunted sign still be reached?
    long long reach = bound * k_suffix_abs[static_cast<size_t>(pos)];
    if (want_sign > 0 && partial_ka + reach <= 0) return false;
    if (want_sign < 0 && partial_ka - reach >= 0) return false;
    for (long long v = -bound; v <= bound; ++v) {
        long long nb = budget - v * v;
        if (nb < 0) {
            if (v > 0) break;
            continue;
        }
        if (cone_scan(pos + 1, rank, nb, k, k_suffix_abs,
                      partial_ka - v * k[static_cast<size_t>(pos)], bound, want_sign))
            return true;
    }
    return false;
}

} // namespace

bool no_wall_against_anchor(const HomologyClass& K, long long coeff_bound) {
    const BlowupLattice& lat = K.lattice();
    if (lat.positive_rank() != 1)
        throw DomainError("anchor scan needs a lattice with positive part <1>");
    const int rank = lat.rank();
    std::vector<long long> k;
    for (const Int& c : K.coefficients()) {
        if (!c.fits_slong_p()) throw DomainError("coefficient too large for the scan");
        k.push_back(c.get_si());
    }
    long long kh = k[0]; // K.H with H the first basis vector
    if (kh == 0) return true;
    std::vector<long long> sfx(static_cast<size_t>(rank) + 1, 0);
    for (int i = rank - 1; i >= 1; --i)
        sfx[static_cast<size_t>(i)] = sfx[static_cast<size_t>(i) + 1] + std::llabs(k[static_cast<size_t>(i)]);
    int hunted = kh > 0 ? -1 : +1; // a sign flip of K against the cone
    for (long long a0 = 1; a0 <= coeff_bound; ++a0) {
        if (cone_scan(1, rank, a0 * a0, k, sfx, kh * a0, coeff_bound, hunted))
            return false;
    }
    return true;
}

} // namespace rbd
