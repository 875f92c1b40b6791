#include "gpcayley/scenario.hpp"

#include <algorithm>
#include <fstream>

namespace gpcayley {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& detail) {
    throw_error(ErrorCode::MalformedScenario, detail);
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        malformed(std::string("missing or non-integer \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<int> genset_from_json(const json& entry, const FiniteGroup& g,
                                  const std::string& vertex) {
    if (entry.is_string()) {
        if (entry.get<std::string>() != "all")
            malformed("genset for \"" + vertex + "\": expected \"all\" or a list");
        return full_genset(g);
    }
    if (!entry.is_array())
        malformed("genset for \"" + vertex + "\": expected \"all\" or a list");
    std::vector<int> out;
    for (const auto& item : entry) {
        if (item.is_number_integer()) {
            out.push_back(item.get<int>());
        } else if (item.is_string()) {
            const auto idx = g.index_of_label(item.get<std::string>());
            if (!idx)
                throw_error(ErrorCode::BadElementIndex,
                            "genset for \"" + vertex + "\": no element labelled \"" +
                                item.get<std::string>() + "\"");
            out.push_back(*idx);
        } else {
            malformed("genset for \"" + vertex + "\": entries must be labels or indices");
        }
    }
    return out;
}

} // namespace

FiniteGroup group_from_json(const json& desc) {
    if (!desc.is_object() || !desc.contains("type") || !desc["type"].is_string())
        malformed("group descriptor needs a \"type\" string");
    const std::string type = desc["type"].get<std::string>();

    if (type == "cyclic")
        return FiniteGroup::cyclic(require_int(desc, "n"));
    if (type == "symmetric")
        return FiniteGroup::symmetric(require_int(desc, "n"));
    if (type == "product") {
        if (!desc.contains("factors") || !desc["factors"].is_array())
            malformed("product descriptor needs a \"factors\" array");
        std::vector<FiniteGroup> factors;
        for (const auto& f : desc["factors"])
            factors.push_back(group_from_json(f));
        return FiniteGroup::direct_product(factors);
    }
    if (type == "table") {
        if (!desc.contains("table") || !desc["table"].is_array())
            malformed("table descriptor needs a \"table\" array");
        std::vector<std::vector<int>> table;
        for (const auto& row : desc["table"]) {
            if (!row.is_array())
                malformed("table rows must be arrays");
            table.push_back(row.get<std::vector<int>>());
        }
        std::vector<std::string> labels;
        if (desc.contains("labels"))
            labels = desc["labels"].get<std::vector<std::string>>();
        return FiniteGroup::from_table(table, require_int(desc, "identity"), std::move(labels));
    }
    malformed("unknown group type \"" + type + "\"");
}

SimplicialGraph graph_from_json(const json& desc) {
    if (!desc.is_object() || !desc.contains("vertices") || !desc["vertices"].is_array())
        malformed("graph descriptor needs a \"vertices\" array");
    const auto vertices = desc["vertices"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    if (desc.contains("edges")) {
        for (const auto& e : desc["edges"]) {
            if (!e.is_array() || e.size() != 2)
                malformed("each edge must be a two-element array");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return build_graph(vertices, edges);
}

GraphProductPresentation presentation_from_json(const json& desc) {
    if (!desc.is_object() || !desc.contains("graph"))
        malformed("presentation descriptor needs a \"graph\"");
    SimplicialGraph graph = graph_from_json(desc["graph"]);

    if (!desc.contains("vertex_groups") || !desc["vertex_groups"].is_object())
        malformed("presentation descriptor needs a \"vertex_groups\" object");
    std::map<std::string, FiniteGroup> groups;
    for (const auto& [name, g] : desc["vertex_groups"].items())
        groups.emplace(name, group_from_json(g));

    std::map<std::string, std::vector<int>> gensets;
    if (desc.contains("gensets")) {
        if (!desc["gensets"].is_object())
            malformed("\"gensets\" must be an object keyed by vertex name");
        for (const auto& [name, entry] : desc["gensets"].items()) {
            const auto it = groups.find(name);
            if (it == groups.end())
                throw_error(ErrorCode::UnknownVertex, "genset for \"" + name + "\"");
            gensets.emplace(name, genset_from_json(entry, it->second, name));
        }
    }
    return GraphProductPresentation(std::move(graph), groups, gensets);
}

Scenario scenario_from_json(const json& doc) {
    if (!doc.is_object())
        malformed("scenario must be a JSON object");
    if (!doc.contains("schema_version"))
        malformed("missing \"schema_version\"");
    const int version = require_int(doc, "schema_version");
    if (version != kScenarioSchemaVersion)
        malformed("unsupported schema_version " + std::to_string(version));
    if (!doc.contains("source"))
        malformed("missing \"source\" presentation");

    Scenario scenario{version, presentation_from_json(doc["source"]), std::nullopt, {}, {}, {}, {}};
    if (doc.contains("target"))
        scenario.target = presentation_from_json(doc["target"]);

    if (doc.contains("family") && !doc["family"].is_null()) {
        const auto& family = doc["family"];
        if (family.is_string()) {
            if (family.get<std::string>() != "auto")
                malformed("\"family\" must be \"auto\" or a list of vertex isos");
        } else if (family.is_array()) {
            for (const auto& entry : family) {
                if (!entry.is_object() || !entry.contains("vertex") || !entry.contains("map"))
                    malformed("family entries need \"vertex\" and \"map\"");
                scenario.family[entry["vertex"].get<std::string>()] =
                    entry["map"].get<std::vector<int>>();
            }
        } else {
            malformed("\"family\" must be \"auto\" or a list of vertex isos");
        }
    }

    if (doc.contains("radius"))
        scenario.radius = require_int(doc, "radius");
    if (doc.contains("output") && doc["output"].is_object()) {
        const auto& out = doc["output"];
        if (out.contains("dot"))
            scenario.dot_path = out["dot"].get<std::string>();
        if (out.contains("json"))
            scenario.json_path = out["json"].get<std::string>();
    }
    return scenario;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        malformed("cannot open \"" + path + "\"");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        malformed("JSON parse error in \"" + path + "\": " + e.what());
    }
    return scenario_from_json(doc);
}

namespace {

void validate_presentation_json(const json& desc, const std::string& side,
                                std::vector<Diagnostic>& out) {
    std::optional<SimplicialGraph> graph;
    try {
        if (!desc.is_object() || !desc.contains("graph"))
            malformed("presentation descriptor needs a \"graph\"");
        graph = graph_from_json(desc["graph"]);
    } catch (const Error& e) {
        out.push_back({std::string(to_string(e.code())), side + ".graph", e.what()});
        return;
    }

    if (!desc.contains("vertex_groups") || !desc["vertex_groups"].is_object()) {
        out.push_back({std::string(to_string(ErrorCode::MalformedScenario)),
                       side + ".vertex_groups", "missing \"vertex_groups\" object"});
        return;
    }

    std::map<std::string, FiniteGroup> groups;
    bool groups_ok = true;
    for (const auto& name : graph->vertices()) {
        if (!desc["vertex_groups"].contains(name)) {
            out.push_back({std::string(to_string(ErrorCode::MissingVertexGroup)),
                           side + ".vertex_groups", "no group for vertex \"" + name + "\""});
            groups_ok = false;
            continue;
        }
        try {
            groups.emplace(name, group_from_json(desc["vertex_groups"][name]));
        } catch (const Error& e) {
            out.push_back(
                {std::string(to_string(e.code())), side + ".vertex_groups." + name, e.what()});
            groups_ok = false;
        }
    }
    for (const auto& [name, unused] : desc["vertex_groups"].items())
        if (!graph->has_vertex(name)) {
            out.push_back({std::string(to_string(ErrorCode::UnknownVertex)),
                           side + ".vertex_groups." + name,
                           "vertex \"" + name + "\" is not in the graph"});
            groups_ok = false;
        }
    if (!groups_ok)
        return;

    bool gensets_ok = true;
    if (desc.contains("gensets")) {
        if (!desc["gensets"].is_object()) {
            out.push_back({std::string(to_string(ErrorCode::MalformedScenario)), side + ".gensets",
                           "\"gensets\" must be an object keyed by vertex name"});
            return;
        }
        for (const auto& [name, entry] : desc["gensets"].items()) {
            const auto it = groups.find(name);
            if (it == groups.end()) {
                out.push_back({std::string(to_string(ErrorCode::UnknownVertex)),
                               side + ".gensets." + name,
                               "vertex \"" + name + "\" is not in the graph"});
                gensets_ok = false;
                continue;
            }
            try {
                auto s = genset_from_json(entry, it->second, name);
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                checked_genset_distances(it->second, s, name);
            } catch (const Error& e) {
                out.push_back(
                    {std::string(to_string(e.code())), side + ".gensets." + name, e.what()});
                gensets_ok = false;
            }
        }
    }
    if (!gensets_ok)
        return;

    try {
        presentation_from_json(desc);
    } catch (const Error& e) {
        out.push_back({std::string(to_string(e.code())), side, e.what()});
    }
}

} // namespace

std::vector<Diagnostic> validate_scenario(const json& doc) {
    std::vector<Diagnostic> out;
    if (!doc.is_object()) {
        out.push_back({std::string(to_string(ErrorCode::MalformedScenario)), "",
                       "scenario must be a JSON object"});
        return out;
    }
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
        out.push_back({std::string(to_string(ErrorCode::MalformedScenario)), "schema_version",
                       "missing or non-integer \"schema_version\""});
    else if (doc["schema_version"].get<int>() != kScenarioSchemaVersion)
        out.push_back({std::string(to_string(ErrorCode::MalformedScenario)), "schema_version",
                       "unsupported schema_version"});

    if (!doc.contains("source"))
        out.push_back({std::string(to_string(ErrorCode::MalformedScenario)), "source",
                       "missing \"source\" presentation"});
    else
        validate_presentation_json(doc["source"], "source", out);
    if (doc.contains("target"))
        validate_presentation_json(doc["target"], "target", out);

    if (doc.contains("family") && doc["family"].is_array()) {
        for (const auto& entry : doc["family"]) {
            if (!entry.is_object() || !entry.contains("vertex") || !entry.contains("map") ||
                !entry["map"].is_array()) {
                out.push_back({std::string(to_string(ErrorCode::MalformedScenario)), "family",
                               "family entries need \"vertex\" and a \"map\" array"});
            }
        }
    }
    return out;
}

nlohmann::json diagnostics_to_json(const std::vector<Diagnostic>& diagnostics) {
    json list = json::array();
    for (const auto& d : diagnostics)
        list.push_back({{"code", d.code}, {"where", d.where}, {"message", d.message}});
    return json{{"ok", diagnostics.empty()}, {"diagnostics", list}};
}

} // namespace gpcayley
