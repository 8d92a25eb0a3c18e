#include "rbd/repro.hpp"

#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rbd/fixtures.hpp"
#include "rbd/jsonio.hpp"
#include "rbd/swcalc.hpp"

namespace rbd {

using nlohmann::json;

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::stated: return "stated";
        case Provenance::derived: return "derived";
        case Provenance::definitional: return "definitional";
    }
    return "?";
}

namespace {

CheckOutcome ok(std::string detail) { return {true, std::move(detail)}; }
CheckOutcome bad(std::string detail) { return {false, std::move(detail)}; }

std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

CheckOutcome expect_int(const Int& got, const Int& want, const std::string& label) {
    if (got == want) return ok(label + " = " + got.get_str());
    return bad(label + " = " + got.get_str() + ", want " + want.get_str());
}

// ---- randomized property suites ------------------------------------------

Int rnd_int(std::mt19937& rng, int lo, int hi) {
    return Int(static_cast<long>(std::uniform_int_distribution<int>(lo, hi)(rng)));
}

HomologyClass rnd_class(std::mt19937& rng, const BlowupLattice& lat, int bound) {
    std::vector<Int> c;
    for (int i = 0; i < lat.rank(); ++i) c.push_back(rnd_int(rng, -bound, bound));
    return HomologyClass(lat, std::move(c));
}

CheckOutcome suite_bilinearity(int cases) {
    std::mt19937 rng(20240301);
    for (int t = 0; t < cases; ++t) {
        BlowupLattice lat(1, std::uniform_int_distribution<int>(1, 10)(rng));
        HomologyClass x = rnd_class(rng, lat, 50), y = rnd_class(rng, lat, 50),
                      z = rnd_class(rng, lat, 50);
        if (pair(x + y, z) != pair(x, z) + pair(y, z))
            return bad("bilinearity failed on case " + std::to_string(t));
    }
    return ok(std::to_string(cases) + " cases");
}

CheckOutcome suite_characteristic(int cases) {
    std::mt19937 rng(20240302);
    for (int t = 0; t < cases; ++t) {
        BlowupLattice lat(1, std::uniform_int_distribution<int>(1, 10)(rng));
        std::vector<Int> kc;
        for (int i = 0; i < lat.rank(); ++i) {
            Int v = rnd_int(rng, -25, 24);
            kc.push_back(is_odd(v) ? v : v + 1);
        }
        HomologyClass K(lat, std::move(kc));
        if (!is_characteristic(K)) return bad("odd-coefficient class not characteristic");
        HomologyClass x = rnd_class(rng, lat, 50);
        if (!divides(Int(2), pair(K, x) - pair(x, x)))
            return bad("K.x != x.x (mod 2) on case " + std::to_string(t));
    }
    return ok(std::to_string(cases) + " cases");
}

CheckOutcome suite_snf_chain(int cases) {
    std::mt19937 rng(20240303);
    for (int t = 0; t < cases; ++t) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        std::vector<std::vector<Int>> m(static_cast<size_t>(n),
                                        std::vector<Int>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Int v = rnd_int(rng, -6, 6);
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                m[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            }
        SymmetricForm q(m);
        std::vector<Int> d = smith_normal_form(q);
        Int prod = 1;
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] != 0 && d[i] == 0)
                return bad("zero before nonzero divisor on case " + std::to_string(t));
            if (d[i] != 0 && d[i + 1] != 0 && !divides(d[i], d[i + 1]))
                return bad("divisor chain broken on case " + std::to_string(t));
        }
        for (const Int& v : d)
            if (v != 0) prod *= v;
        if (prod != int_abs(determinant(q)))
            return bad("divisor product != |det| on case " + std::to_string(t));
    }
    return ok(std::to_string(cases) + " cases");
}

CheckOutcome suite_blowup_pairing(int cases) {
    std::mt19937 rng(20240304);
    for (int t = 0; t < cases; ++t) {
        BlowupLattice lat(1, std::uniform_int_distribution<int>(1, 10)(rng));
        HomologyClass x = rnd_class(rng, lat, 50), y = rnd_class(rng, lat, 50);
        Int m = rnd_int(rng, 0, 5);
        auto [xb, big] = blow_up(x, m);
        std::vector<Int> yc = y.coefficients();
        yc.push_back(0);
        HomologyClass yb(big, std::move(yc));
        if (pair(xb, yb) != pair(x, y))
            return bad("blow-up broke a pairing on case " + std::to_string(t));
        if (square(xb) != square(x) - m * m)
            return bad("blow-up square law failed on case " + std::to_string(t));
    }
    return ok(std::to_string(cases) + " cases");
}

CheckOutcome suite_wallcross(int cases) {
    std::mt19937 rng(20240305);
    for (int t = 0; t < cases; ++t) {
        Int minus = rnd_int(rng, -100, 100);
        Int d = 2 * rnd_int(rng, 0, 20);
        Int plus = wall_cross(minus, d);
        Int sign = is_odd(Int(d / 2)) ? Int(-1) : Int(1);
        if (minus != plus + sign)
            return bad("crossing back failed on case " + std::to_string(t));
    }
    return ok(std::to_string(cases) + " cases");
}

CheckOutcome suite_sl2(int cases) {
    std::mt19937 rng(20240306);
    for (int t = 0; t < cases; ++t) {
        int len = std::uniform_int_distribution<int>(0, 25)(rng);
        std::vector<WordLetter> ls;
        for (int i = 0; i < len; ++i) {
            char gen = std::uniform_int_distribution<int>(0, 1)(rng) ? 'a' : 'b';
            Int e = rnd_int(rng, -3, 3);
            if (e == 0) continue;
            ls.push_back({gen, e});
        }
        MonodromyWord w(ls);
        SL2Matrix m = evaluate(w);
        if (m.m00 * m.m11 - m.m01 * m.m10 != 1)
            return bad("determinant drifted on case " + std::to_string(t));
        if (!evaluate(w * w.inverse()).is_identity())
            return bad("w * w^-1 != 1 on case " + std::to_string(t));
        MonodromyWord x(std::vector<WordLetter>{{'a', Int(1)}, {'b', Int(1)}});
        if (evaluate(w * x * w.inverse()).trace() != evaluate(x).trace())
            return bad("conjugation changed a trace on case " + std::to_string(t));
    }
    return ok(std::to_string(cases) + " cases");
}

} // namespace

CheckOutcome run_property_suite(const std::string& suite, int cases) {
    if (suite == "bilinearity") return suite_bilinearity(cases);
    if (suite == "characteristic_congruence") return suite_characteristic(cases);
    if (suite == "snf_chain") return suite_snf_chain(cases);
    if (suite == "blowup_pairing") return suite_blowup_pairing(cases);
    if (suite == "wallcross_involution") return suite_wallcross(cases);
    if (suite == "sl2_det_closure") return suite_sl2(cases);
    return bad("unknown property suite: " + suite);
}

// ---- bundled manifest ------------------------------------------------------

namespace {

CheckOutcome check_tree_order(const Int& r, const Int& expected) {
    BoundaryInvariants b = boundary_h1(wahl_tree(r));
    return expect_int(b.h1_order, expected, "|H1|");
}

CheckOutcome check_blowdown(const fixtures::NamedPlan& np) {
    ClosedManifoldModel m = rational_blowdown(np.plan);
    if (m.e != np.expected_e || m.sigma != np.expected_sigma)
        return bad(np.name + ": (e,sigma) = (" + m.e.get_str() + "," + m.sigma.get_str() +
                   "), want (" + np.expected_e.get_str() + "," + np.expected_sigma.get_str() + ")");
    std::string name = freedman_classify(m);
    if (name != np.expected_name)
        return bad(np.name + ": classified as " + name + ", want " + np.expected_name);
    return ok(np.name + " -> (" + m.e.get_str() + "," + m.sigma.get_str() + ") = " + name);
}

CheckOutcome check_class_report(const HomologyClass& a, const HomologyClass& K,
                                const SphereConfiguration& cfg, const Int& want_sq,
                                const Int& want_h, const Int& want_k) {
    HomologyClass H = fixtures::hyperplane(a.lattice());
    ClassConditionReport r = class_condition_report(a, K, H, cfg);
    if (r.a_square != want_sq || r.h_pairing != want_h || r.k_pairing != want_k)
        return bad("report (" + r.a_square.get_str() + "," + r.h_pairing.get_str() + "," +
                   r.k_pairing.get_str() + "), want (" + want_sq.get_str() + "," +
                   want_h.get_str() + "," + want_k.get_str() + ")");
    if (!r.vanishes_on_spheres)
        return bad("class does not vanish on the configured spheres: " +
                   join_ints(r.sphere_pairings));
    if (!r.all_pass()) return bad("a condition failed:\n" + r.to_text());
    return ok("(" + r.a_square.get_str() + "," + r.h_pairing.get_str() + "," +
              r.k_pairing.get_str() + "), zero on all spheres");
}

CheckOutcome check_identity(const std::string& word) {
    SL2Matrix m = evaluate(parse_word(word));
    if (m.is_identity()) return ok(word + " = 1");
    return bad(word + " = " + m.to_string() + ", want identity");
}

CheckOutcome check_census(const FibrationCensus& c, const std::string& label) {
    Int e = euler_count(c);
    if (e != 12) return bad(label + ": euler count " + e.get_str() + ", want 12");
    if (!verify_certificate(c)) return bad(label + ": certificate does not close up");
    return ok(label + ": euler 12, certificate closes");
}

} // namespace

std::vector<ReproCheck> bundled_checks() {
    using fixtures::rational_surface;
    std::vector<ReproCheck> cs;

    // 1. boundary order of the r=2 tree
    cs.push_back({1, "tree_r2_boundary_order", "first construction, boundary group order",
                  Provenance::stated, [] {
                      SymmetricForm q = intersection_form(wahl_tree(Int(2)));
                      Int det = determinant(q);
                      if (int_abs(det) != 81) return bad("det = " + det.get_str() + ", want 81");
                      std::vector<Int> d = smith_normal_form(q);
                      std::vector<Int> want{Int(1), Int(1), Int(3), Int(27)};
                      if (d != want) return bad("divisors " + join_ints(d) + ", want (1,1,3,27)");
                      return ok("|det| = 81, divisors (1,1,3,27)");
                  }});

    // 2. the whole family
    for (long r : {2L, 4L, 6L, 8L, 10L}) {
        Int expected = (4 * Int(r) + 1) * (4 * Int(r) + 1);
        cs.push_back({2, "wahl_family_order_r" + std::to_string(r),
                      "family boundary orders are odd perfect squares", Provenance::derived,
                      [r, expected] { return check_tree_order(Int(r), expected); }});
    }

    // 3. definiteness
    for (long r : {2L, 4L, 6L}) {
        cs.push_back({3, "negative_definite_r" + std::to_string(r),
                      "blow-down hypothesis: pieces are negative definite", Provenance::stated,
                      [r] {
                          if (!is_negative_definite(wahl_tree(Int(r))))
                              return bad("tree r=" + std::to_string(r) + " is not negative definite");
                          return ok("negative definite");
                      }});
    }

    // 4. blow-down fingerprints and classification
    for (const auto& np : fixtures::blowdown_plans()) {
        cs.push_back({4, "blowdown_" + np.name, "surgery fingerprints and their classification",
                      Provenance::stated, [np] { return check_blowdown(np); }});
    }

    // 5. chamber class conditions
    cs.push_back({5, "chamber_class_first", "first construction, crossing-class conditions",
                  Provenance::stated, [] {
                      return check_class_report(fixtures::chamber_class_first(),
                                                fixtures::characteristic_first(),
                                                fixtures::p1_in_13(), Int(1), Int(6), Int(-1));
                  }});
    cs.push_back({5, "chamber_class_second", "second construction, crossing-class conditions",
                  Provenance::derived, [] {
                      return check_class_report(fixtures::chamber_class_second(),
                                                fixtures::characteristic_second(),
                                                fixtures::p2_in_14(), Int(2), Int(7), Int(-2));
                  }});

    // 6. dimension and wall crossing
    cs.push_back({6, "dimension_first", "dimension count of the first construction",
                  Provenance::stated, [] {
                      HomologyClass K = fixtures::characteristic_first();
                      return expect_int(formal_dimension(square(K), Int(-12), Int(16)), Int(0), "d");
                  }});
    cs.push_back({6, "wall_and_value_first", "a wall separates the anchor from the crossing class",
                  Provenance::stated, [] {
                      BlowupLattice lat = rational_surface(13);
                      HomologyClass K = fixtures::characteristic_first();
                      HomologyClass a = fixtures::chamber_class_first();
                      SWContext ctx(Int(16), Int(-12), K, fixtures::hyperplane(lat));
                      if (!wall_between(K, fixtures::hyperplane(lat), a))
                          return bad("no wall detected");
                      Int v = small_perturbation_sw(ctx, a, true);
                      if (int_abs(v) != 1)
                          return bad("|SW| = " + int_abs(v).get_str() + ", want 1");
                      return ok("wall present; SW value " + v.get_str() +
                                " (sign is a convention), magnitude 1");
                  }});
    cs.push_back({6, "wall_and_value_second", "same conditions in the second construction",
                  Provenance::derived, [] {
                      BlowupLattice lat = rational_surface(14);
                      HomologyClass K = fixtures::characteristic_second();
                      HomologyClass a = fixtures::chamber_class_second();
                      SWContext ctx(Int(17), Int(-13), K, fixtures::hyperplane(lat));
                      if (!wall_between(K, fixtures::hyperplane(lat), a))
                          return bad("no wall detected");
                      Int v = small_perturbation_sw(ctx, a, true);
                      if (int_abs(v) != 1)
                          return bad("|SW| = " + int_abs(v).get_str() + ", want 1");
                      return ok("wall present; magnitude 1");
                  }});

    // 7. the chamber sweep, exactly as claimed (strict positivity).  The
    // strict form has a genuine boundary counterexample at b = 9: the null
    // characteristic vector (3,1,...,1) has dimension 0 and square 0.  It
    // is reported rather than papered over; the no-wall form below is the
    // statement that actually holds.
    cs.push_back({7, "chamber_sweep_strict_positive", "only one chamber: strict K^2 > 0 sweep",
                  Provenance::stated, [] {
                      ChamberSweepResult r = chamber_sweep(9, 7);
                      if (r.first_nonpositive)
                          return bad("counterexample: " + r.first_nonpositive->to_string() +
                                     " (" + std::to_string(r.nonpositive_square) +
                                     " nonpositive squares among " +
                                     std::to_string(r.admissible) + " admissible classes)");
                      return ok("all admissible classes have positive square");
                  }});
    cs.push_back({-1, "chamber_sweep_no_wall", "only one chamber: no admissible wall class",
                  Provenance::derived, [] {
                      ChamberSweepResult r = chamber_sweep(9, 7);
                      if (r.first_negative)
                          return bad("wall class found: " + r.first_negative->to_string());
                      std::ostringstream os;
                      os << r.candidates << " classes swept, " << r.admissible
                         << " admissible, none with negative square";
                      return ok(os.str());
                  }});
    cs.push_back({-1, "null_class_sees_no_wall", "null classes admit no wall in the positive cone",
                  Provenance::derived, [] {
                      std::vector<Int> c(10, Int(1));
                      c[0] = 3;
                      HomologyClass K(rational_surface(9), std::move(c));
                      if (!no_wall_against_anchor(K, 3))
                          return bad("found an admissible class on the far side of a wall");
                      return ok("no admissible pair at bound 3 crosses the null class");
                  }});

    // 8. monodromy identities and censuses
    cs.push_back({8, "relation_cubed", "torus relation of the fiber sum", Provenance::stated,
                  [] { return check_identity("(a^3 b)^3"); }});
    cs.push_back({8, "fishtail_conjugate", "second generator is a conjugate of the first",
                  Provenance::stated, [] {
                      if (verify_relation(parse_word("b"), parse_word("(a b) a (a b)^-1")))
                          return ok("b = (ab)a(ab)^-1");
                      return bad("conjugation identity failed");
                  }});
    cs.push_back({8, "relation_rewritten", "the same relation spelled fiber by fiber",
                  Provenance::stated, [] { return check_identity("a^5 (A^2 b a^2) a b a a a b"); }});
    cs.push_back({8, "cyclic_powers", "cyclic fiber monodromy is a power of the first generator",
                  Provenance::stated, [] {
                      for (long k = 1; k <= 20; ++k) {
                          SL2Matrix m = evaluate(parse_word("a^" + std::to_string(k)));
                          if (!(m == SL2Matrix(1, Int(k), 0, 1)))
                              return bad("a^" + std::to_string(k) + " = " + m.to_string());
                      }
                      return ok("a^k = [[1,k],[0,1]] for k <= 20");
                  }});
    cs.push_back({8, "census_i3", "twelve euler points: one I3 plus nine fishtails",
                  Provenance::stated, [] { return check_census(fixtures::census_i3(), "I3+9"); }});
    cs.push_back({8, "census_i5", "twelve euler points: one I5 plus seven fishtails",
                  Provenance::stated, [] { return check_census(fixtures::census_i5(), "I5+7"); }});
    cs.push_back({8, "census_i7", "twelve euler points: one I7 plus five fishtails",
                  Provenance::stated, [] { return check_census(fixtures::census_i7(), "I7+5"); }});

    // 9. configuration search
    cs.push_back({9, "search_r2_negative4", "r=2 tree embeds in the length-4 negative lattice",
                  Provenance::derived, [] {
                      SearchOptions opts;
                      opts.coefficient_bound = 1;
                      auto found = find_configuration(wahl_tree(Int(2)),
                                                      fixtures::negative_lattice(4), {}, opts);
                      if (!found) return bad("no configuration found at bound 1");
                      VerifyReport v = verify_configuration(*found);
                      if (!v.ok) return bad("search result fails verification:\n" + v.to_string());
                      return ok("found and verified at bound 1");
                  }});
    cs.push_back({9, "search_completes_prose_spheres",
                  "the two stated spheres extend to the whole tree", Provenance::stated, [] {
                      std::map<int, HomologyClass> fixed{
                          {1, fixtures::cycle_leg_sphere()},
                          {3, fixtures::smoothed_fishtail_sphere()},
                      };
                      auto found = find_configuration(wahl_tree(Int(2)),
                                                      fixtures::rational_surface(13), fixed, {});
                      if (!found) return bad("no completion found at bound 3");
                      VerifyReport v = verify_configuration(*found);
                      if (!v.ok) return bad("completion fails verification:\n" + v.to_string());
                      return ok("completed to a verified 4-sphere configuration");
                  }});
    cs.push_back({9, "smoothing_gives_leg", "blown-up fishtail smoothed into the section",
                  Provenance::derived, [] {
                      BlowupLattice lat9 = fixtures::rational_surface(9);
                      HomologyClass fiber = fixtures::elliptic_fiber_class();
                      auto [blown, lat10] = blow_up(fiber, Int(2));
                      std::vector<Int> sec(11, Int(0));
                      sec[3] = 1; // the section E3
                      HomologyClass section(lat10, std::move(sec));
                      HomologyClass leg = smooth_intersection(blown, section);
                      return expect_int(square(leg), Int(-3), "smoothed square");
                  }});

    // 10. seifert cross-checks
    cs.push_back({10, "seifert_h1_r2", "Seifert presentation reproduces the boundary order",
                  Provenance::stated, [] {
                      SeifertData d(Int(0), {{Int(1), Int(1)}, {Int(3), Int(2)},
                                             {Int(3), Int(2)}, {Int(3), Int(2)}});
                      Int h = h1_order_from_seifert(d);
                      Int plumbed = boundary_h1(seifert_to_plumbing(d)).h1_order;
                      if (h != 81 || plumbed != 81)
                          return bad("orders " + h.get_str() + " / " + plumbed.get_str() +
                                     ", want 81 both ways");
                      return ok("81 from the Seifert data and from the plumbing");
                  }});
    cs.push_back({10, "seifert_roundtrip_family", "dictionary round-trips on the family data",
                  Provenance::derived, [] {
                      for (long r : {2L, 4L, 6L}) {
                          SeifertData d(Int(0), {{Int(1), Int(1)},
                                                 {Int(3), Int(2)},
                                                 {Int(r + 1), Int(r)},
                                                 {Int(2 * r - 1), Int(2)}});
                          SeifertData back = plumbing_to_seifert(seifert_to_plumbing(d));
                          if (!(back == d))
                              return bad("round trip moved the r=" + std::to_string(r) + " data");
                          if (!seifert_to_plumbing(d).isomorphic_star(wahl_tree(Int(r))))
                              return bad("dictionary image differs from the r=" +
                                         std::to_string(r) + " tree");
                      }
                      return ok("identity on the r = 2, 4, 6 family data");
                  }});

    // 11. property suites
    for (const char* suite : {"bilinearity", "characteristic_congruence", "snf_chain",
                              "blowup_pairing", "wallcross_involution", "sl2_det_closure"}) {
        cs.push_back({11, std::string("property_") + suite, "randomized invariant suite",
                      Provenance::definitional,
                      [suite] { return run_property_suite(suite, 1000); }});
    }

    return cs;
}

ReproReport run_checks(const std::vector<ReproCheck>& checks, std::ostream& out, bool json_format) {
    ReproReport report;
    json jout = json::array();
    for (const auto& c : checks) {
        CheckOutcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("error: ") + e.what()};
        }
        if (outcome.pass)
            ++report.passed;
        else
            ++report.failed;
        if (json_format) {
            jout.push_back({{"name", c.name},
                            {"criterion", c.criterion},
                            {"source", c.source},
                            {"provenance", to_string(c.provenance)},
                            {"pass", outcome.pass},
                            {"detail", outcome.detail}});
        } else {
            out << (outcome.pass ? "PASS" : "FAIL") << "  " << c.name << "  ["
                << to_string(c.provenance) << "]  " << c.source;
            if (!outcome.detail.empty()) out << "  -- " << outcome.detail;
            out << "\n";
        }
    }
    if (json_format) {
        out << jout.dump(2) << "\n";
    } else {
        out << report.passed << " passed, " << report.failed << " failed\n";
    }
    return report;
}

// ---- external manifests ----------------------------------------------------

namespace {

Provenance provenance_from_string(const std::string& s) {
    if (s == "stated") return Provenance::stated;
    if (s == "derived") return Provenance::derived;
    if (s == "definitional") return Provenance::definitional;
    throw ParseError("unknown provenance: " + s);
}

std::string resolve(const std::filesystem::path& base, const std::string& rel) {
    return (base / rel).string();
}

} // namespace

std::vector<ReproCheck> load_manifest(const std::string& path) {
    json j = load_json_file(path);
    if (!j.contains("checks")) throw ParseError("manifest needs a 'checks' list");
    std::filesystem::path base = std::filesystem::path(path).parent_path();

    std::vector<ReproCheck> out;
    for (const auto& cj : j.at("checks")) {
        ReproCheck check;
        check.criterion = cj.value("criterion", -1);
        check.name = cj.at("name").get<std::string>();
        check.source = cj.value("source", "");
        check.provenance = provenance_from_string(cj.value("provenance", "derived"));
        std::string op = cj.at("op").get<std::string>();

        if (op == "boundary_order") {
            std::string gpath = resolve(base, cj.at("graph").get<std::string>());
            Int expected = int_from_json(cj.at("expected_order"));
            check.run = [gpath, expected] {
                return expect_int(boundary_h1(load_graph(gpath)).h1_order, expected, "|H1|");
            };
        } else if (op == "wahl_boundary") {
            Int r = int_from_json(cj.at("r"));
            Int expected = int_from_json(cj.at("expected_order"));
            check.run = [r, expected] { return check_tree_order(r, expected); };
        } else if (op == "negative_definite") {
            std::string gpath = resolve(base, cj.at("graph").get<std::string>());
            bool expected = cj.value("expected", true);
            check.run = [gpath, expected] {
                bool got = is_negative_definite(load_graph(gpath));
                if (got == expected) return ok(got ? "negative definite" : "not negative definite");
                return bad("definiteness mismatch");
            };
        } else if (op == "snf_divisors") {
            std::string gpath = resolve(base, cj.at("graph").get<std::string>());
            std::vector<Int> expected;
            for (const auto& v : cj.at("expected")) expected.push_back(int_from_json(v));
            check.run = [gpath, expected] {
                std::vector<Int> d = smith_normal_form(intersection_form(load_graph(gpath)));
                if (d == expected) return ok("divisors " + join_ints(d));
                return bad("divisors " + join_ints(d) + ", want " + join_ints(expected));
            };
        } else if (op == "plumbed_invariants") {
            std::string gpath = resolve(base, cj.at("graph").get<std::string>());
            Int e = int_from_json(cj.at("e")), sigma = int_from_json(cj.at("sigma"));
            check.run = [gpath, e, sigma] {
                CompactPieceInvariants inv = plumbed_invariants(load_graph(gpath));
                if (inv.e == e && inv.sigma == sigma)
                    return ok("(e,sigma) = (" + e.get_str() + "," + sigma.get_str() + ")");
                return bad("(e,sigma) = (" + inv.e.get_str() + "," + inv.sigma.get_str() + ")");
            };
        } else if (op == "blowdown") {
            std::string ppath = resolve(base, cj.at("plan").get<std::string>());
            Int e = int_from_json(cj.at("expected_e")), sigma = int_from_json(cj.at("expected_sigma"));
            std::string name = cj.value("expected_name", "");
            check.run = [ppath, e, sigma, name] {
                ClosedManifoldModel m = rational_blowdown(load_plan(ppath));
                if (m.e != e || m.sigma != sigma)
                    return bad("(e,sigma) = (" + m.e.get_str() + "," + m.sigma.get_str() + ")");
                if (!name.empty() && freedman_classify(m) != name)
                    return bad("classified as " + freedman_classify(m));
                return ok("(" + m.e.get_str() + "," + m.sigma.get_str() + ")" +
                          (name.empty() ? "" : " = " + name));
            };
        } else if (op == "formal_dimension") {
            Int ksq = int_from_json(cj.at("k_sq")), sigma = int_from_json(cj.at("sigma"));
            Int e = int_from_json(cj.at("e")), expected = int_from_json(cj.at("expected"));
            check.run = [ksq, sigma, e, expected] {
                return expect_int(formal_dimension(ksq, sigma, e), expected, "d");
            };
        } else if (op == "wall_cross") {
            Int minus = int_from_json(cj.at("minus")), d = int_from_json(cj.at("d"));
            Int expected = int_from_json(cj.at("expected"));
            check.run = [minus, d, expected] {
                return expect_int(wall_cross(minus, d), expected, "SW+");
            };
        } else if (op == "monodromy_identity") {
            std::string word = cj.at("word").get<std::string>();
            std::string equals = cj.value("equals", "identity");
            check.run = [word, equals] {
                if (equals == "identity") return check_identity(word);
                if (verify_relation(parse_word(word), parse_word(equals)))
                    return ok(word + " = " + equals);
                return bad(word + " != " + equals);
            };
        } else if (op == "census") {
            std::string cpath = resolve(base, cj.at("census").get<std::string>());
            bool verify = cj.value("verify_certificate", true);
            check.run = [cpath, verify] {
                FibrationCensus c = load_census(cpath);
                Int e = euler_count(c);
                if (e != 12) return bad("euler count " + e.get_str() + ", want 12");
                if (verify && !verify_certificate(c)) return bad("certificate does not close up");
                return ok("euler 12" + std::string(verify ? ", certificate closes" : ""));
            };
        } else if (op == "config_verify") {
            std::string cpath = resolve(base, cj.at("config").get<std::string>());
            check.run = [cpath] {
                VerifyReport v = verify_configuration(load_configuration(cpath));
                if (v.ok) return ok("configuration valid");
                return bad(v.to_string());
            };
        } else if (op == "config_search") {
            std::string gpath = resolve(base, cj.at("graph").get<std::string>());
            BlowupLattice lat = lattice_from_json(cj.at("lattice"));
            SearchOptions opts;
            opts.coefficient_bound = cj.value("bound", 3);
            std::map<int, HomologyClass> fixed;
            if (cj.contains("fixed"))
                for (const auto& [key, val] : cj.at("fixed").items())
                    fixed.emplace(std::stoi(key), class_from_json(val, lat));
            check.run = [gpath, lat, opts, fixed] {
                auto found = find_configuration(load_graph(gpath), lat, fixed, opts);
                if (!found) return bad("no configuration found");
                VerifyReport v = verify_configuration(*found);
                if (!v.ok) return bad("result fails verification:\n" + v.to_string());
                return ok("found and verified");
            };
        } else if (op == "seifert_h1") {
            SeifertData d = seifert_from_json(cj.at("seifert"));
            Int expected = int_from_json(cj.at("expected"));
            check.run = [d, expected] {
                return expect_int(h1_order_from_seifert(d), expected, "|H1|");
            };
        } else if (op == "seifert_roundtrip") {
            SeifertData d = seifert_from_json(cj.at("seifert"));
            check.run = [d] {
                SeifertData back = plumbing_to_seifert(seifert_to_plumbing(d));
                if (back == normalize(d)) return ok("round trip is the identity");
                return bad("round trip moved the data");
            };
        } else if (op == "chamber_sweep") {
            int b_max = cj.value("b_max", 9);
            int bound = cj.value("bound", 7);
            std::string mode = cj.value("mode", "no_wall");
            check.run = [b_max, bound, mode] {
                ChamberSweepResult r = chamber_sweep(b_max, bound);
                if (mode == "strict") {
                    if (r.first_nonpositive)
                        return bad("counterexample: " + r.first_nonpositive->to_string());
                    return ok("all admissible classes have positive square");
                }
                if (r.first_negative)
                    return bad("wall class: " + r.first_negative->to_string());
                return ok("no admissible wall class");
            };
        } else if (op == "property_suite") {
            std::string suite = cj.at("suite").get<std::string>();
            int cases = cj.value("cases", 1000);
            check.run = [suite, cases] { return run_property_suite(suite, cases); };
        } else {
            throw ParseError("unknown manifest op: " + op);
        }
        out.push_back(std::move(check));
    }
    return out;
}

} // namespace rbd
