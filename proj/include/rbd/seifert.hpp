#pragma once

#include <utility>
#include <vector>

#include "rbd/plumbing.hpp"

namespace rbd {

// Seifert data M(e0; (a1,b1), ..., (am,bm)) over the 2-sphere base.
struct SeifertData {
    Int e0;
    std::vector<std::pair<Int, Int>> pairs; // (alpha, beta), gcd = 1, alpha >= 1

    SeifertData(Int e0_in, std::vector<std::pair<Int, Int>> pairs_in);

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// Minimal negative continued fraction p/q = a1 - 1/(a2 - 1/(...)), ai >= 2.
std::vector<Int> neg_cont_frac(const Int& p, const Int& q);

// Evaluate such an expansion back to p/q.
Rat eval_neg_cont_frac(const std::vector<Int>& terms);

// e = -(e0 + sum beta_i/alpha_i).
Rat euler_number(const SeifertData& d);

// |H1| = |prod(alpha_i) * e|; throws when the euler number vanishes
// (H1 is infinite in that case).
Int h1_order_from_seifert(const SeifertData& d);

// Canonical presentation: one leading (1,1) pair, every other beta reduced
// into (0, alpha), overflow carried into e0.
SeifertData normalize(const SeifertData& d);

// Star-shaped plumbing dictionary.  With the data normalized, the center
// weight is -(e0 + m + 1) for m pairs with alpha > 1, and each such pair
// contributes an arm neg_cont_frac(alpha, alpha - beta), center-outward.
PlumbingGraph seifert_to_plumbing(const SeifertData& d);

// Inverse of the above on star-shaped trees; result is normalized.
SeifertData plumbing_to_seifert(const PlumbingGraph& g);

} // namespace rbd
