#include "rbd/jsonio.hpp"

#include <filesystem>
#include <fstream>

namespace rbd {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>()); // large values
    throw ParseError("expected an exact integer, got " + j.dump());
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

PlumbingGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph file needs 'vertices' and 'edges'");
    std::map<long long, int> index_of;
    std::vector<Int> weights;
    for (const auto& v : j.at("vertices")) {
        if (!v.contains("id") || !v.contains("weight"))
            throw ParseError("graph vertex needs 'id' and 'weight'");
        long long id = v.at("id").get<long long>();
        if (id < 0) throw ParseError("vertex ids must be non-negative");
        if (index_of.count(id)) throw ParseError("duplicate vertex id " + std::to_string(id));
        index_of[id] = static_cast<int>(weights.size());
        weights.push_back(int_from_json(v.at("weight")));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edges must be id pairs");
        long long a = e.at(0).get<long long>(), b = e.at(1).get<long long>();
        if (!index_of.count(a) || !index_of.count(b))
            throw ParseError("edge references an unknown vertex id");
        edges.emplace_back(index_of.at(a), index_of.at(b));
    }
    return PlumbingGraph(std::move(weights), std::move(edges));
}

json graph_to_json(const PlumbingGraph& g) {
    json verts = json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        verts.push_back({{"id", v}, {"weight", int_to_json(g.weights()[static_cast<size_t>(v)])}});
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    return json{{"vertices", verts}, {"edges", edges}};
}

PlumbingGraph load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

BlowupLattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("positive") || !j.contains("negative"))
        throw ParseError("lattice needs 'positive' and 'negative' ranks");
    return BlowupLattice(j.at("positive").get<int>(), j.at("negative").get<int>());
}

json lattice_to_json(const BlowupLattice& lat) {
    return json{{"positive", lat.positive_rank()}, {"negative", lat.negative_rank()}};
}

HomologyClass class_from_json(const json& j, const BlowupLattice& lat) {
    if (!j.is_array()) throw ParseError("class must be an integer array");
    std::vector<Int> c;
    for (const auto& v : j) c.push_back(int_from_json(v));
    return HomologyClass(lat, std::move(c));
}

json class_to_json(const HomologyClass& c) {
    json out = json::array();
    for (const Int& v : c.coefficients()) out.push_back(int_to_json(v));
    return out;
}

SphereConfiguration load_configuration(const std::string& path) {
    json j = load_json_file(path);
    if (!j.contains("lattice") || !j.contains("graph") || !j.contains("classes"))
        throw ParseError("configuration needs 'lattice', 'graph' and 'classes'");
    BlowupLattice lat = lattice_from_json(j.at("lattice"));
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    PlumbingGraph g = load_graph((base / j.at("graph").get<std::string>()).string());
    std::vector<HomologyClass> classes;
    for (const auto& c : j.at("classes")) classes.push_back(class_from_json(c, lat));
    return SphereConfiguration(lat, std::move(g), std::move(classes));
}

json configuration_to_json(const SphereConfiguration& c, const std::string& graph_path) {
    json classes = json::array();
    for (const auto& cls : c.classes) classes.push_back(class_to_json(cls));
    return json{{"lattice", lattice_to_json(c.lattice)}, {"graph", graph_path}, {"classes", classes}};
}

SeifertData seifert_from_json(const json& j) {
    if (!j.is_object() || !j.contains("e0") || !j.contains("pairs"))
        throw ParseError("seifert data needs 'e0' and 'pairs'");
    std::vector<std::pair<Int, Int>> pairs;
    for (const auto& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw ParseError("seifert pairs are [alpha, beta]");
        pairs.emplace_back(int_from_json(p.at(0)), int_from_json(p.at(1)));
    }
    return SeifertData(int_from_json(j.at("e0")), std::move(pairs));
}

json seifert_to_json(const SeifertData& d) {
    json pairs = json::array();
    for (const auto& [a, b] : d.pairs) pairs.push_back({int_to_json(a), int_to_json(b)});
    return json{{"e0", int_to_json(d.e0)}, {"pairs", pairs}};
}

SeifertData load_seifert(const std::string& path) {
    return seifert_from_json(load_json_file(path));
}

FibrationCensus census_from_json(const json& j) {
    if (!j.is_object() || !j.contains("fibers"))
        throw ParseError("census needs a 'fibers' list");
    FibrationCensus c;
    for (const auto& f : j.at("fibers")) {
        std::string kind = f.at("kind").get<std::string>();
        Fiber fiber;
        if (kind == "I") {
            fiber.cyclic = true;
            fiber.k = f.at("k").get<int>();
        } else if (kind == "fishtail") {
            fiber.cyclic = false;
            fiber.k = 1;
        } else {
            throw ParseError("fiber kind must be \"I\" or \"fishtail\"");
        }
        if (f.contains("conjugator"))
            fiber.conjugator = parse_word(f.at("conjugator").get<std::string>());
        c.fibers.push_back(std::move(fiber));
    }
    return c;
}

FibrationCensus load_census(const std::string& path) {
    return census_from_json(load_json_file(path));
}

static Parity parity_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw ParseError("parity must be \"even\" or \"odd\"");
}

BlowdownPlan load_plan(const std::string& path) {
    json j = load_json_file(path);
    if (!j.contains("ambient") || !j.contains("piece_graph"))
        throw ParseError("plan needs 'ambient' and 'piece_graph'");
    const json& am = j.at("ambient");

    BlowdownPlan plan;
    plan.ambient.e = int_from_json(am.at("e"));
    plan.ambient.sigma = int_from_json(am.at("sigma"));
    plan.ambient.b1 = am.contains("b1") ? int_from_json(am.at("b1")) : Int(0);
    plan.ambient.simply_connected = am.value("simply_connected", false);
    plan.ambient.parity = am.contains("parity") ? parity_from_json(am.at("parity")) : Parity::odd;
    if (am.contains("assumptions"))
        for (const auto& a : am.at("assumptions"))
            plan.ambient.assumptions.push_back(a.get<std::string>());

    std::filesystem::path base = std::filesystem::path(path).parent_path();
    PlumbingGraph piece = load_graph((base / j.at("piece_graph").get<std::string>()).string());
    plan.piece = plumbed_invariants(piece);
    plan.boundary = boundary_h1(piece);

    if (j.contains("ball")) {
        const json& ball = j.at("ball");
        plan.ball.e = int_from_json(ball.at("e"));
        plan.ball.sigma = int_from_json(ball.at("sigma"));
        plan.ball.b1 = ball.contains("b1") ? int_from_json(ball.at("b1")) : Int(0);
        plan.ball.b2 = ball.contains("b2") ? int_from_json(ball.at("b2")) : Int(0);
    } else {
        plan.ball = rational_ball_invariants();
    }
    plan.lspace_flag = j.value("lspace", true);
    if (j.contains("assumptions"))
        for (const auto& a : j.at("assumptions")) plan.assumptions.push_back(a.get<std::string>());
    return plan;
}

} // namespace rbd
