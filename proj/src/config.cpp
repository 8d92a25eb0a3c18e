#include "rbd/config.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <climits>
#include <sstream>

namespace rbd {

SphereConfiguration::SphereConfiguration(BlowupLattice lat, PlumbingGraph g,
                                         std::vector<HomologyClass> cls)
    : lattice(lat), graph(std::move(g)), classes(std::move(cls)) {
    if (static_cast<int>(classes.size()) != graph.vertex_count())
        throw DimensionError("one class per graph vertex required");
    for (const auto& c : classes)
        if (!(c.lattice() == lattice))
            throw DimensionError("configuration class over the wrong lattice");
}

std::string ConfigViolation::to_string() const {
    std::ostringstream os;
    if (i == j) {
        os << "class " << i << ": self-intersection " << got.get_str()
           << ", want " << expected.get_str();
    } else {
        os << "classes " << i << "." << j << ": pairing " << got.get_str()
           << ", want " << (edge ? "|1| (edge)" : "0 (no edge)");
    }
    return os.str();
}

std::string VerifyReport::to_string() const {
    if (ok) return "configuration valid\n";
    std::ostringstream os;
    for (const auto& v : violations) os << v.to_string() << "\n";
    return os.str();
}

VerifyReport verify_configuration(const SphereConfiguration& c) {
    VerifyReport report;
    const int n = c.graph.vertex_count();
    for (int i = 0; i < n; ++i) {
        Int sq = square(c.classes[static_cast<size_t>(i)]);
        const Int& w = c.graph.weights()[static_cast<size_t>(i)];
        if (sq != w)
            report.violations.push_back({i, i, sq, w, false});
        for (int j = i + 1; j < n; ++j) {
            Int p = pair(c.classes[static_cast<size_t>(i)], c.classes[static_cast<size_t>(j)]);
            bool edge = c.graph.has_edge(i, j);
            bool good = edge ? (p == 1 || p == -1) : (p == 0);
            if (!good)
                report.violations.push_back({i, j, p, edge ? Int(1) : Int(0), edge});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

namespace {

long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw DomainError("coefficient too large for the search kernel");
    return v.get_si();
}

// Bounded lexicographic DFS.  Classes are filled vertex-major in ascending
// vertex order, each coefficient running from -bound to bound, so the first
// complete assignment found is the lexicographically least one.
struct Searcher {
    const PlumbingGraph& g;
    BlowupLattice lat;
    long long bound;
    int rank;
    int pos; // positive rank, 0 or 1

    std::vector<int> free_vertices;
    std::vector<std::vector<long long>> cls;     // per vertex, filled as known
    std::vector<char> known;
    std::vector<std::vector<long long>> suffix_abs; // per known vertex

    std::atomic<long long>* nodes;
    std::atomic<int>* winner;      // task index that already found a solution
    int task_index = 0;
    bool budget_hit = false;

    std::vector<long long> forced; // values for the leading free coefficients
    std::vector<std::vector<long long>> solution;

    Searcher(const PlumbingGraph& graph, const BlowupLattice& lattice, long long b,
             std::atomic<long long>* node_budget, std::atomic<int>* win)
        : g(graph), lat(lattice), bound(b), rank(lattice.rank()),
          pos(lattice.positive_rank()), nodes(node_budget), winner(win) {
        cls.assign(static_cast<size_t>(g.vertex_count()), {});
        known.assign(static_cast<size_t>(g.vertex_count()), 0);
        suffix_abs.assign(static_cast<size_t>(g.vertex_count()), {});
    }

    void set_known(int v, std::vector<long long> c) {
        std::vector<long long> sfx(static_cast<size_t>(rank) + 1, 0);
        for (int i = rank - 1; i >= 0; --i)
            sfx[static_cast<size_t>(i)] =
                sfx[static_cast<size_t>(i) + 1] + std::llabs(c[static_cast<size_t>(i)]);
        cls[static_cast<size_t>(v)] = std::move(c);
        suffix_abs[static_cast<size_t>(v)] = std::move(sfx);
        known[static_cast<size_t>(v)] = 1;
    }

    bool aborted() const {
        return budget_hit ||
               (winner && winner->load(std::memory_order_relaxed) < task_index);
    }

    bool charge(long long n_nodes) {
        if (!nodes) return true;
        if (nodes->fetch_sub(n_nodes, std::memory_order_relaxed) <= 0) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    // Partners of v whose classes are already pinned down.
    std::vector<int> partners(int v) const {
        std::vector<int> out;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v && known[static_cast<size_t>(u)]) out.push_back(u);
        return out;
    }

    bool search(size_t next_free) {
        if (aborted()) return false;
        if (next_free == free_vertices.size()) {
            solution = cls;
            return true;
        }
        int v = free_vertices[next_free];
        std::vector<int> ps = partners(v);
        std::vector<long long> pairing(ps.size(), 0);
        std::vector<long long> coeffs(static_cast<size_t>(rank), 0);
        long long target = to_ll(g.weights()[static_cast<size_t>(v)]);
        bool found = descend(next_free, v, ps, pairing, coeffs, 0, -target);
        return found;
    }

    // remaining: what the sum of squares of coefficients ci.. must still
    // contribute (negative-definite part counts positively).
    bool descend(size_t next_free, int v, const std::vector<int>& ps,
                 std::vector<long long>& pairing, std::vector<long long>& coeffs,
                 int ci, long long remaining) {
        if (aborted()) return false;
        if (ci == rank) {
            if (remaining != 0) return false;
            for (size_t k = 0; k < ps.size(); ++k) {
                bool edge = g.has_edge(ps[k], v);
                long long p = pairing[k];
                if (edge ? (p != 1 && p != -1) : (p != 0)) return false;
            }
            set_known(v, coeffs);
            bool ok = search(next_free + 1);
            if (!ok) known[static_cast<size_t>(v)] = 0;
            return ok;
        }

        bool positive_slot = ci < pos;
        int slots_left = rank - ci - 1;
        size_t forced_at = next_free == 0 ? static_cast<size_t>(ci) : forced.size();

        if (!charge(2 * bound + 1)) return false;

        for (long long x = -bound; x <= bound; ++x) {
            if (forced_at < forced.size() && x != forced[forced_at]) continue;
            long long rem = positive_slot ? remaining + x * x : remaining - x * x;
            // The positive slot raises the available square budget; the
            // negative slots spend it, so it must land on exactly zero.
            if (rem < 0) {
                if (!positive_slot && x > 0) break; // squares only grow from here
                continue;
            }
            if (rem > bound * bound * slots_left) continue;

            bool feasible = true;
            for (size_t k = 0; k < ps.size() && feasible; ++k) {
                const auto& u_cls = cls[static_cast<size_t>(ps[k])];
                const auto& u_sfx = suffix_abs[static_cast<size_t>(ps[k])];
                long long contrib = (positive_slot ? 1 : -1) * x * u_cls[static_cast<size_t>(ci)];
                long long p = pairing[k] + contrib;
                long long radius = bound * u_sfx[static_cast<size_t>(ci) + 1];
                bool edge = g.has_edge(ps[k], v);
                if (edge)
                    feasible = (p - radius <= 1 && 1 <= p + radius) ||
                               (p - radius <= -1 && -1 <= p + radius);
                else
                    feasible = (p - radius <= 0 && 0 <= p + radius);
                if (feasible) pairing[k] = p;
                else {
                    // roll back the partial sums already applied
                    for (size_t t = 0; t < k; ++t)
                        pairing[t] -= (positive_slot ? 1 : -1) * x *
                                      cls[static_cast<size_t>(ps[t])][static_cast<size_t>(ci)];
                    pairing[k] = pairing[k]; // unchanged
                }
            }
            if (!feasible) continue;

            coeffs[static_cast<size_t>(ci)] = x;
            if (descend(next_free, v, ps, pairing, coeffs, ci + 1, rem)) return true;
            coeffs[static_cast<size_t>(ci)] = 0;
            for (size_t k = 0; k < ps.size(); ++k)
                pairing[k] -= (positive_slot ? 1 : -1) * x *
                              cls[static_cast<size_t>(ps[k])][static_cast<size_t>(ci)];
            if (aborted()) return false;
        }
        return false;
    }
};

void check_fixed_consistency(const PlumbingGraph& g, const std::map<int, HomologyClass>& fixed,
                             const BlowupLattice& lat) {
    for (const auto& [v, c] : fixed) {
        if (v < 0 || v >= g.vertex_count())
            throw DimensionError("fixed class bound to a vertex that does not exist");
        if (!(c.lattice() == lat))
            throw DimensionError("fixed class over the wrong lattice");
        if (square(c) != g.weights()[static_cast<size_t>(v)])
            throw DomainError("fixed class has the wrong self-intersection");
    }
    for (auto it = fixed.begin(); it != fixed.end(); ++it)
        for (auto jt = std::next(it); jt != fixed.end(); ++jt) {
            Int p = pair(it->second, jt->second);
            bool edge = g.has_edge(it->first, jt->first);
            bool good = edge ? (p == 1 || p == -1) : (p == 0);
            if (!good) throw DomainError("fixed classes are mutually inconsistent");
        }
}

std::optional<SphereConfiguration> run_search(const PlumbingGraph& g, const BlowupLattice& lat,
                                              const std::map<int, HomologyClass>& fixed,
                                              const SearchOptions& opts, bool parallel) {
    if (opts.coefficient_bound < 1) throw DomainError("search bound must be >= 1");
    check_fixed_consistency(g, fixed, lat);

    std::vector<int> free_vertices;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!fixed.count(v)) free_vertices.push_back(v);

    auto materialize = [&](const std::vector<std::vector<long long>>& raw) {
        std::vector<HomologyClass> out;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (auto it = fixed.find(v); it != fixed.end()) {
                out.push_back(it->second);
            } else {
                std::vector<Int> c;
                for (long long x : raw[static_cast<size_t>(v)]) c.emplace_back(x);
                out.emplace_back(lat, std::move(c));
            }
        }
        return SphereConfiguration(lat, g, std::move(out));
    };

    std::atomic<long long> nodes(opts.node_budget);

    if (free_vertices.empty())
        return materialize({}); // everything fixed; consistency already checked

    if (!parallel) {
        Searcher s(g, lat, opts.coefficient_bound, &nodes, nullptr);
        for (const auto& [v, c] : fixed) {
            std::vector<long long> raw;
            for (const Int& x : c.coefficients()) raw.push_back(to_ll(x));
            s.set_known(v, std::move(raw));
        }
        s.free_vertices = free_vertices;
        bool found = s.search(0);
        if (s.budget_hit) throw BudgetError("search node budget exhausted");
        if (!found) return std::nullopt;
        return materialize(s.solution);
    }

    // Split the leading coefficients of the first free vertex across tasks.
    // Task order agrees with lex order, so the lowest winning task carries
    // the same answer a serial run would find.
    const long long b = opts.coefficient_bound;
    const long long width = 2 * b + 1;
    const int depth = lat.rank() >= 2 ? 2 : 1;
    const long long tasks = depth == 2 ? width * width : width;

    std::atomic<int> winner(INT_MAX);
    std::atomic<bool> budget_hit(false);
    std::vector<std::optional<std::vector<std::vector<long long>>>> results(static_cast<size_t>(tasks));

#pragma omp parallel for schedule(dynamic, 1)
    for (long long t = 0; t < tasks; ++t) {
        if (winner.load(std::memory_order_relaxed) < t || budget_hit.load()) continue;
        Searcher s(g, lat, b, &nodes, &winner);
        s.task_index = static_cast<int>(t);
        for (const auto& [v, c] : fixed) {
            std::vector<long long> raw;
            for (const Int& x : c.coefficients()) raw.push_back(to_ll(x));
            s.set_known(v, std::move(raw));
        }
        s.free_vertices = free_vertices;
        if (depth == 2)
            s.forced = {t / width - b, t % width - b};
        else
            s.forced = {t - b};
        bool found = s.search(0);
        if (s.budget_hit) budget_hit.store(true);
        if (found) {
            results[static_cast<size_t>(t)] = s.solution;
            int expected = winner.load();
            while (t < expected && !winner.compare_exchange_weak(expected, static_cast<int>(t))) {
            }
        }
    }

    if (budget_hit.load()) throw BudgetError("search node budget exhausted");
    for (auto& r : results)
        if (r) return materialize(*r);
    return std::nullopt;
}

} // namespace

std::optional<SphereConfiguration> find_configuration_serial(
    const PlumbingGraph& g, const BlowupLattice& lat,
    const std::map<int, HomologyClass>& fixed, const SearchOptions& opts) {
    return run_search(g, lat, fixed, opts, false);
}

std::optional<SphereConfiguration> find_configuration(
    const PlumbingGraph& g, const BlowupLattice& lat,
    const std::map<int, HomologyClass>& fixed, const SearchOptions& opts) {
    return run_search(g, lat, fixed, opts, opts.parallel);
}

std::pair<HomologyClass, BlowupLattice> blow_up(const HomologyClass& x, const Int& m) {
    if (m < 0) throw DomainError("blow-up multiplicity must be >= 0");
    BlowupLattice bigger = x.lattice().blow_up();
    std::vector<Int> c = x.coefficients();
    c.push_back(-m);
    return {HomologyClass(bigger, std::move(c)), bigger};
}

HomologyClass smooth_intersection(const HomologyClass& x, const HomologyClass& y) {
    if (pair(x, y) < 1)
        throw HypothesisError("smoothing requires a positive intersection: x.y >= 1");
    return x + y;
}

PseudoSection pseudo_section(const HomologyClass& s, int double_points) {
    if (double_points < 0) throw DomainError("double point count must be >= 0");
    return PseudoSection{s, double_points};
}

std::pair<HomologyClass, BlowupLattice> resolve(const PseudoSection& s) {
    HomologyClass cls = s.cls;
    for (int i = 0; i < s.double_points; ++i) {
        auto [next, lat] = blow_up(cls, Int(2));
        cls = next;
    }
    return {cls, cls.lattice()};
}

bool fiber_decomposition_check(const FiberModel& f, const HomologyClass& fiber_class) {
    if (f.components.empty()) return false;
    HomologyClass sum = f.components[0].cls.scaled(f.components[0].multiplicity);
    for (size_t i = 1; i < f.components.size(); ++i)
        sum = sum + f.components[i].cls.scaled(f.components[i].multiplicity);
    if (!(sum == fiber_class)) return false;

    if (f.kind == FiberKind::fishtail || f.k == 1)
        return f.components.size() == 1 && f.components[0].multiplicity == 1;

    const int k = f.k;
    if (static_cast<int>(f.components.size()) != k) return false;
    for (const auto& c : f.components) {
        if (c.multiplicity != 1) return false;
        if (square(c.cls) != -2) return false;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Int p = pair(f.components[static_cast<size_t>(i)].cls,
                         f.components[static_cast<size_t>(j)].cls);
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            Int want = consecutive ? Int(k == 2 ? 2 : 1) : Int(0);
            if (p != want) return false;
        }
    return true;
}

} // namespace rbd
