#pragma once

#include <string>

#include <json.hpp>

#include "rbd/config.hpp"
#include "rbd/cutpaste.hpp"
#include "rbd/monodromy.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/seifert.hpp"

namespace rbd {

// All files are UTF-8 JSON with exact integers; floating point numbers are
// rejected outright.

nlohmann::json load_json_file(const std::string& path);

PlumbingGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const PlumbingGraph& g);
PlumbingGraph load_graph(const std::string& path);

BlowupLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const BlowupLattice& lat);

HomologyClass class_from_json(const nlohmann::json& j, const BlowupLattice& lat);
nlohmann::json class_to_json(const HomologyClass& c);

// {"lattice":{...},"graph":"<path>","classes":[[...],...]}; the graph path
// is resolved relative to the configuration file.
SphereConfiguration load_configuration(const std::string& path);
nlohmann::json configuration_to_json(const SphereConfiguration& c, const std::string& graph_path);

SeifertData seifert_from_json(const nlohmann::json& j);
nlohmann::json seifert_to_json(const SeifertData& d);
SeifertData load_seifert(const std::string& path);

FibrationCensus census_from_json(const nlohmann::json& j);
FibrationCensus load_census(const std::string& path);

// {"ambient":{...},"piece_graph":"<path>","ball":{...},"lspace":true,...}
BlowdownPlan load_plan(const std::string& path);

Int int_from_json(const nlohmann::json& j);
nlohmann::json int_to_json(const Int& v);

} // namespace rbd
