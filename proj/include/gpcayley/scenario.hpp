#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpcayley/presentation.hpp"

namespace gpcayley {

inline constexpr int kScenarioSchemaVersion = 1;

// A parsed scenario file: one or two presentations plus task parameters.
// Gensets default to "all" (every non-identity element); the iso family
// defaults to auto-search.
struct Scenario {
    int schema_version = 0;
    GraphProductPresentation source;
    std::optional<GraphProductPresentation> target;
    std::map<std::string, std::vector<int>> family; // supplied vertex isos by name
    std::optional<int> radius;
    std::optional<std::string> dot_path;
    std::optional<std::string> json_path;
};

// {"type":"cyclic","n":4} | {"type":"symmetric","n":3} |
// {"type":"product","factors":[...]} |
// {"type":"table","identity":0,"table":[[...]],"labels":[...]}
FiniteGroup group_from_json(const nlohmann::json& desc);

// {"vertices":["u","v"],"edges":[["u","v"]]}
SimplicialGraph graph_from_json(const nlohmann::json& desc);

// {"graph":{...},"vertex_groups":{name:descriptor},"gensets":{name:"all"|[labels-or-indices]}}
GraphProductPresentation presentation_from_json(const nlohmann::json& desc);

Scenario scenario_from_json(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

struct Diagnostic {
    std::string code;
    std::string where;
    std::string message;
};

// Best-effort validation: collects one diagnostic per independent problem
// (group axioms, graph shape, genset symmetry/generation, family shape)
// instead of stopping at the first. Empty result means the scenario loads.
std::vector<Diagnostic> validate_scenario(const nlohmann::json& doc);

nlohmann::json diagnostics_to_json(const std::vector<Diagnostic>& diagnostics);

} // namespace gpcayley
