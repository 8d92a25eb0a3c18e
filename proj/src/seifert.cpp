#include "rbd/seifert.hpp"

#include <algorithm>

namespace rbd {

SeifertData::SeifertData(Int e0_in, std::vector<std::pair<Int, Int>> pairs_in)
    : e0(std::move(e0_in)), pairs(std::move(pairs_in)) {
    for (const auto& [alpha, beta] : pairs) {
        if (alpha < 1) throw DomainError("seifert multiplicity alpha must be >= 1");
        if (int_gcd(alpha, beta) != 1)
            throw DomainError("seifert pair (alpha, beta) must be coprime");
    }
}

std::vector<Int> neg_cont_frac(const Int& p, const Int& q) {
    if (q < 1 || p <= q || int_gcd(p, q) != 1)
        throw DomainError("neg_cont_frac needs coprime p > q >= 1");
    std::vector<Int> out;
    Int a = p, b = q;
    while (b != 0) {
        // ceil(a/b), then continue with (b, a1*b - a)
        Int a1 = floor_div(a + b - 1, b);
        out.push_back(a1);
        Int r = a1 * b - a;
        a = b;
        b = r;
    }
    return out;
}

Rat eval_neg_cont_frac(const std::vector<Int>& terms) {
    if (terms.empty()) throw DomainError("empty continued fraction");
    Rat v(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        if (v == 0) throw DomainError("continued fraction hits a zero tail");
        v = Rat(*it) - 1 / v;
    }
    return v;
}

Rat euler_number(const SeifertData& d) {
    Rat acc(d.e0);
    for (const auto& [alpha, beta] : d.pairs) acc += Rat(beta) / Rat(alpha);
    return -acc;
}

Int h1_order_from_seifert(const SeifertData& d) {
    Rat e = euler_number(d);
    if (e == 0) throw DomainError("euler number is zero: H1 is infinite");
    Rat prod(1);
    for (const auto& [alpha, beta] : d.pairs) prod *= Rat(alpha);
    Rat order = prod * e;
    if (order.get_den() != 1)
        throw DomainError("non-integral H1 order; seifert data is inconsistent");
    Int n = order.get_num();
    return int_abs(n);
}

SeifertData normalize(const SeifertData& d) {
    Int e0 = d.e0;
    std::vector<std::pair<Int, Int>> reduced;
    for (const auto& [alpha, beta] : d.pairs) {
        if (alpha == 1) {
            e0 += beta;
            continue;
        }
        Int q = floor_div(beta, alpha);
        Int b = beta - q * alpha; // in (0, alpha) since gcd(alpha,beta)=1
        e0 += q;
        reduced.emplace_back(alpha, b);
    }
    // Present with one explicit (1,1) pair, as the family data is written.
    std::vector<std::pair<Int, Int>> pairs;
    pairs.emplace_back(Int(1), Int(1));
    for (auto& p : reduced) pairs.push_back(std::move(p));
    return SeifertData(e0 - 1, std::move(pairs));
}

PlumbingGraph seifert_to_plumbing(const SeifertData& d) {
    SeifertData n = normalize(d);
    const int m = static_cast<int>(n.pairs.size()) - 1; // pairs with alpha > 1
    std::vector<Int> w;
    std::vector<std::pair<int, int>> e;
    w.push_back(-(n.e0 + m + 1));
    for (const auto& [alpha, beta] : n.pairs) {
        if (alpha == 1) continue;
        std::vector<Int> arm = neg_cont_frac(alpha, alpha - beta);
        int prev = 0;
        for (const Int& a : arm) {
            w.push_back(-a);
            e.emplace_back(prev, static_cast<int>(w.size()) - 1);
            prev = static_cast<int>(w.size()) - 1;
        }
    }
    return PlumbingGraph(std::move(w), std::move(e));
}

// Weights along one arm, center-outward, as positive continued-fraction terms.
static std::vector<Int> arm_terms(const PlumbingGraph& g, int center, int start) {
    std::vector<Int> terms;
    int prev = center, cur = start;
    while (true) {
        Int w = g.weights()[static_cast<size_t>(cur)];
        if (w > -2) throw StructureError("arm weight must be <= -2 for the seifert dictionary");
        terms.push_back(-w);
        std::vector<int> next;
        for (int v : g.neighbors(cur))
            if (v != prev) next.push_back(v);
        if (next.empty()) break;
        if (next.size() > 1) throw StructureError("graph is not star-shaped");
        prev = cur;
        cur = next[0];
    }
    return terms;
}

SeifertData plumbing_to_seifert(const PlumbingGraph& g) {
    if (!g.is_tree()) throw StructureError("graph is not star-shaped");
    int center = -1;
    if (g.vertex_count() == 1) {
        center = 0;
    } else {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) >= 3) {
                if (center >= 0) throw StructureError("graph is not star-shaped");
                center = v;
            }
        if (center < 0) throw StructureError("graph has no distinguished center vertex");
    }

    std::vector<std::pair<Int, Int>> pairs;
    pairs.emplace_back(Int(1), Int(1));
    int m = 0;
    for (int start : g.neighbors(center)) {
        std::vector<Int> terms = arm_terms(g, center, start);
        Rat value = eval_neg_cont_frac(terms);
        Int alpha = value.get_num();
        Int beta = alpha - value.get_den();
        pairs.emplace_back(alpha, beta);
        ++m;
    }
    Int e0 = -g.weights()[static_cast<size_t>(center)] - m - 1;
    return SeifertData(e0, std::move(pairs));
}

} // namespace rbd
