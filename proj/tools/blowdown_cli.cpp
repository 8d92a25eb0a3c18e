// Command-line front end: plumbing calculus, blow-down bookkeeping,
// wall-crossing arithmetic, configuration search, monodromy checks, and the
// bundled reproduction manifest.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rbd/fixtures.hpp"
#include "rbd/jsonio.hpp"
#include "rbd/repro.hpp"
#include "rbd/swcalc.hpp"

using namespace rbd;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

void print_form(const SymmetricForm& q, std::ostream& out) {
    for (int i = 0; i < q.size(); ++i) {
        out << "  [";
        for (int j = 0; j < q.size(); ++j) {
            if (j) out << ",";
            out << q.at(i, j).get_str();
        }
        out << "]\n";
    }
}

std::string divisors_str(const std::vector<Int>& ds) {
    std::string s = "(";
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) s += ",";
        s += ds[i].get_str();
    }
    return s + ")";
}

int cmd_info(const std::string& path, bool as_json) {
    PlumbingGraph g = load_graph(path);
    SymmetricForm q = intersection_form(g);
    BoundaryInvariants b = boundary_h1(g);
    SignatureStats s = signature_stats(q);
    bool neg_def = s.b_plus == 0 && s.b_zero == 0;

    if (as_json) {
        json out{{"vertices", g.vertex_count()},
                 {"determinant", int_to_json(determinant(q))},
                 {"negative_definite", neg_def},
                 {"signature", {{"b_plus", s.b_plus}, {"b_minus", s.b_minus}, {"b_zero", s.b_zero}}},
                 {"parity", to_string(s.parity)},
                 {"h1_order", int_to_json(b.h1_order)},
                 {"h1_divisors", json::array()}};
        for (const Int& d : b.h1_divisors) out["h1_divisors"].push_back(int_to_json(d));
        if (g.is_tree()) {
            CompactPieceInvariants inv = plumbed_invariants(g);
            out["e"] = int_to_json(inv.e);
            out["sigma"] = int_to_json(inv.sigma);
        }
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }

    std::cout << "intersection form:\n";
    print_form(q, std::cout);
    std::cout << "determinant: " << determinant(q).get_str() << "\n";
    std::cout << "signature: (" << s.b_plus << "," << s.b_minus << "," << s.b_zero << "), parity "
              << to_string(s.parity) << (neg_def ? ", negative definite" : "") << "\n";
    if (g.is_tree()) {
        CompactPieceInvariants inv = plumbed_invariants(g);
        std::cout << "plumbed 4-manifold: e=" << inv.e.get_str() << " sigma=" << inv.sigma.get_str()
                  << " b1=" << inv.b1.get_str() << " b2=" << inv.b2.get_str() << "\n";
    }
    if (b.h1_order == 0)
        std::cout << "boundary H1: infinite\n";
    else
        std::cout << "boundary H1: order " << b.h1_order.get_str() << ", divisors "
                  << divisors_str(b.h1_divisors) << "\n";
    return kExitPass;
}

int cmd_boundary(const std::string& path, bool as_json) {
    BoundaryInvariants b = boundary_h1(load_graph(path));
    if (as_json) {
        json out{{"h1_order", int_to_json(b.h1_order)}, {"h1_divisors", json::array()}};
        for (const Int& d : b.h1_divisors) out["h1_divisors"].push_back(int_to_json(d));
        std::cout << out.dump(2) << "\n";
    } else if (b.h1_order == 0) {
        std::cout << "H1 infinite\n";
    } else {
        std::cout << "H1 order " << b.h1_order.get_str() << ", divisors "
                  << divisors_str(b.h1_divisors) << "\n";
    }
    return kExitPass;
}

int cmd_blowdown(const std::string& path, bool as_json) {
    BlowdownPlan plan = load_plan(path);
    ClosedManifoldModel m = rational_blowdown(plan);
    std::string name = m.simply_connected ? freedman_classify(m) : "unclassified";
    if (as_json) {
        json out{{"e", int_to_json(m.e)},
                 {"sigma", int_to_json(m.sigma)},
                 {"classification", name},
                 {"assumptions", m.assumptions}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << name << " (e=" << m.e.get_str() << ", sigma=" << m.sigma.get_str() << ")\n";
        std::cout << "recorded assumptions:\n";
        for (const auto& a : m.assumptions) std::cout << "  - " << a << "\n";
    }
    return kExitPass;
}

HomologyClass class_from_text(const std::string& text, const BlowupLattice& lat) {
    return class_from_json(json::parse(text), lat);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for rational blow-down constructions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--format-json,--json", as_json, "emit reports as JSON");

    // info / boundary
    std::string info_path;
    auto* info = app.add_subcommand("info", "intersection form, definiteness and boundary of a graph");
    info->add_option("graph", info_path, "graph JSON file")->required();

    std::string boundary_path;
    auto* boundary = app.add_subcommand("boundary", "boundary H1 of a plumbing graph");
    boundary->add_option("graph", boundary_path, "graph JSON file")->required();

    // wahl
    long wahl_r = 0;
    std::string wahl_out;
    auto* wahl = app.add_subcommand("wahl", "emit the even-parameter family tree");
    wahl->add_option("r", wahl_r, "even parameter >= 2")->required();
    wahl->add_option("--out", wahl_out, "write graph JSON here instead of stdout");

    // blowdown
    std::string plan_path;
    auto* blowdown = app.add_subcommand("blowdown", "cut-and-paste fingerprint of a plan");
    blowdown->add_option("plan", plan_path, "plan JSON file")->required();

    // swdim / wallcross
    long long sw_ksq = 0, sw_sigma = 0, sw_e = 0;
    auto* swdim = app.add_subcommand("swdim", "formal dimension from the fingerprint");
    swdim->add_option("--ksq", sw_ksq)->required();
    swdim->add_option("--sigma", sw_sigma)->required();
    swdim->add_option("--e", sw_e)->required();

    long long wc_minus = 0, wc_d = 0;
    auto* wallcross = app.add_subcommand("wallcross", "value on the far side of a wall");
    wallcross->add_option("--minus", wc_minus)->required();
    wallcross->add_option("--d", wc_d)->required();

    // swreport
    std::string rep_config, rep_a, rep_k, rep_h;
    auto* swreport = app.add_subcommand("swreport", "crossing-class condition report");
    swreport->add_option("--config", rep_config, "configuration JSON file")->required();
    swreport->add_option("--a", rep_a, "class as an integer array")->required();
    swreport->add_option("--k", rep_k, "characteristic class as an integer array")->required();
    swreport->add_option("--h", rep_h, "anchor class; defaults to (1,0,...,0)");

    // config verify / search
    auto* config = app.add_subcommand("config", "sphere configurations");
    config->require_subcommand(1);
    std::string cfg_path;
    auto* cfg_verify = config->add_subcommand("verify", "check a configuration file");
    cfg_verify->add_option("config", cfg_path, "configuration JSON file")->required();

    std::string search_graph;
    int search_pos = 1, search_neg = 0;
    long long search_bound = 3, search_budget = 200'000'000;
    bool search_serial = false;
    std::vector<std::string> search_fixed;
    std::string search_out;
    auto* cfg_search = config->add_subcommand("search", "bounded search for a configuration");
    cfg_search->add_option("--graph", search_graph)->required();
    cfg_search->add_option("--positive", search_pos, "positive rank of the lattice (0 or 1)");
    cfg_search->add_option("--negative", search_neg, "negative rank of the lattice")->required();
    cfg_search->add_option("--bound", search_bound, "coefficient bound (default 3)");
    cfg_search->add_option("--budget", search_budget, "node budget");
    cfg_search->add_flag("--serial", search_serial, "single-threaded search");
    cfg_search->add_option("--fix", search_fixed, "vertex:classarray, e.g. 1:[3,-2,...]");
    cfg_search->add_option("--out", search_out, "write the found configuration here");

    // monodromy
    auto* monodromy = app.add_subcommand("monodromy", "exact SL(2,Z) word calculus");
    monodromy->require_subcommand(1);
    std::string eval_word;
    bool expect_identity = false;
    auto* mono_eval = monodromy->add_subcommand("eval", "evaluate a word");
    mono_eval->add_option("word", eval_word)->required();
    mono_eval->add_flag("--expect-identity", expect_identity, "exit 1 unless the product is 1");

    std::string rel_lhs, rel_rhs;
    auto* mono_verify = monodromy->add_subcommand("verify", "compare two words");
    mono_verify->add_option("lhs", rel_lhs)->required();
    mono_verify->add_option("rhs", rel_rhs)->required();

    std::string census_path;
    bool census_no_cert = false;
    auto* mono_census = monodromy->add_subcommand("census", "euler count and certificate of a census");
    mono_census->add_option("census", census_path, "census JSON file")->required();
    mono_census->add_flag("--no-certificate", census_no_cert, "skip the certificate product");

    // seifert
    auto* seifert = app.add_subcommand("seifert", "Seifert data dictionary");
    seifert->require_subcommand(1);
    std::string seifert_in;
    auto* s2p = seifert->add_subcommand("to-plumbing", "star-shaped tree of the data");
    s2p->add_option("seifert", seifert_in, "seifert JSON file")->required();
    std::string plumb_in;
    auto* p2s = seifert->add_subcommand("from-plumbing", "Seifert data of a star-shaped tree");
    p2s->add_option("graph", plumb_in, "graph JSON file")->required();
    std::string h1_in;
    long long h1_expect = -1;
    auto* sh1 = seifert->add_subcommand("h1", "boundary H1 order from the Seifert data");
    sh1->add_option("seifert", h1_in, "seifert JSON file")->required();
    sh1->add_option("--expect", h1_expect, "exit 1 unless the order matches");

    // repro
    std::string manifest_path;
    auto* repro = app.add_subcommand("repro", "run the reproduction manifest");
    repro->add_option("--manifest", manifest_path, "external manifest JSON (default: bundled)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) return cmd_info(info_path, as_json);
        if (*boundary) return cmd_boundary(boundary_path, as_json);

        if (*wahl) {
            json j = graph_to_json(wahl_tree(Int(wahl_r)));
            if (wahl_out.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::ofstream out(wahl_out);
                if (!out) throw ParseError("cannot write " + wahl_out);
                out << j.dump(2) << "\n";
            }
            return kExitPass;
        }

        if (*blowdown) return cmd_blowdown(plan_path, as_json);

        if (*swdim) {
            Int d = formal_dimension(Int(sw_ksq), Int(sw_sigma), Int(sw_e));
            std::cout << d.get_str() << "\n";
            return kExitPass;
        }

        if (*wallcross) {
            std::cout << wall_cross(Int(wc_minus), Int(wc_d)).get_str() << "\n";
            return kExitPass;
        }

        if (*swreport) {
            SphereConfiguration cfg = load_configuration(rep_config);
            HomologyClass a = class_from_text(rep_a, cfg.lattice);
            HomologyClass k = class_from_text(rep_k, cfg.lattice);
            HomologyClass h = rep_h.empty() ? fixtures::hyperplane(cfg.lattice)
                                            : class_from_text(rep_h, cfg.lattice);
            ClassConditionReport r = class_condition_report(a, k, h, cfg);
            if (as_json) {
                json out{{"a_square", int_to_json(r.a_square)},
                         {"h_pairing", int_to_json(r.h_pairing)},
                         {"k_pairing", int_to_json(r.k_pairing)},
                         {"sphere_pairings", json::array()},
                         {"pass", r.all_pass()}};
                for (const Int& p : r.sphere_pairings)
                    out["sphere_pairings"].push_back(int_to_json(p));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << r.to_text();
            }
            return r.all_pass() ? kExitPass : kExitCheckFailed;
        }

        if (*cfg_verify) {
            VerifyReport r = verify_configuration(load_configuration(cfg_path));
            std::cout << r.to_string();
            return r.ok ? kExitPass : kExitCheckFailed;
        }

        if (*cfg_search) {
            PlumbingGraph g = load_graph(search_graph);
            BlowupLattice lat(search_pos, search_neg);
            std::map<int, HomologyClass> fixed;
            for (const std::string& spec : search_fixed) {
                size_t colon = spec.find(':');
                if (colon == std::string::npos)
                    throw ParseError("--fix wants vertex:classarray, got " + spec);
                int vertex = std::stoi(spec.substr(0, colon));
                fixed.emplace(vertex, class_from_text(spec.substr(colon + 1), lat));
            }
            SearchOptions opts;
            opts.coefficient_bound = search_bound;
            opts.node_budget = search_budget;
            opts.parallel = !search_serial;
            auto found = find_configuration(g, lat, fixed, opts);
            if (!found) {
                std::cout << "no configuration within bound " << search_bound << "\n";
                return kExitCheckFailed;
            }
            json out = configuration_to_json(*found, search_graph);
            if (search_out.empty()) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::ofstream os(search_out);
                if (!os) throw ParseError("cannot write " + search_out);
                os << out.dump(2) << "\n";
            }
            return kExitPass;
        }

        if (*mono_eval) {
            SL2Matrix m = evaluate(parse_word(eval_word));
            std::cout << m.to_string() << "\n";
            return (!expect_identity || m.is_identity()) ? kExitPass : kExitCheckFailed;
        }

        if (*mono_verify) {
            bool equal = verify_relation(parse_word(rel_lhs), parse_word(rel_rhs));
            std::cout << (equal ? "equal" : "different") << "\n";
            return equal ? kExitPass : kExitCheckFailed;
        }

        if (*mono_census) {
            FibrationCensus c = load_census(census_path);
            Int e = euler_count(c);
            std::cout << "euler count: " << e.get_str() << "\n";
            bool pass = e == 12;
            if (!census_no_cert) {
                bool closed = verify_certificate(c);
                std::cout << "certificate: " << (closed ? "closes up" : "does not close") << "\n";
                pass = pass && closed;
            }
            return pass ? kExitPass : kExitCheckFailed;
        }

        if (*s2p) {
            std::cout << graph_to_json(seifert_to_plumbing(load_seifert(seifert_in))).dump(2) << "\n";
            return kExitPass;
        }

        if (*p2s) {
            std::cout << seifert_to_json(plumbing_to_seifert(load_graph(plumb_in))).dump(2) << "\n";
            return kExitPass;
        }

        if (*sh1) {
            Int order = h1_order_from_seifert(load_seifert(h1_in));
            std::cout << order.get_str() << "\n";
            if (h1_expect >= 0 && order != h1_expect) return kExitCheckFailed;
            return kExitPass;
        }

        if (*repro) {
            std::vector<ReproCheck> checks =
                manifest_path.empty() ? bundled_checks() : load_manifest(manifest_path);
            ReproReport report = run_checks(checks, std::cout, as_json);
            return report.all_pass() ? kExitPass : kExitCheckFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
