#include "gpcayley/clique_cert.hpp"

#include <algorithm>

namespace gpcayley {

FiniteGroup clique_subgroup(const GraphProductPresentation& p,
                            const std::vector<std::string>& clique) {
    std::vector<int> indices;
    indices.reserve(clique.size());
    for (const auto& name : clique)
        indices.push_back(p.graph().index_of(name));
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j)
            if (!p.adjacent(indices[i], indices[j]))
                throw_error(ErrorCode::NotAClique,
                            "vertices \"" + p.vertex_name(indices[i]) + "\" and \"" +
                                p.vertex_name(indices[j]) + "\" are not adjacent");

    std::vector<FiniteGroup> factors;
    factors.reserve(indices.size());
    for (int v : indices)
        factors.push_back(p.group(v));
    return FiniteGroup::direct_product(factors);
}

namespace {

CliqueSubgroupSummary summarize(const GraphProductPresentation& p,
                                const std::vector<std::string>& clique) {
    const FiniteGroup g = clique_subgroup(p, clique);
    return CliqueSubgroupSummary{clique, g.order(), g.element_order_multiset()};
}

nlohmann::json summary_to_json(const CliqueSubgroupSummary& s) {
    return nlohmann::json{
        {"clique", s.clique}, {"order", s.order}, {"element_orders", s.element_orders}};
}

} // namespace

nlohmann::json NonIsoCertificate::to_json() const {
    nlohmann::json src = nlohmann::json::array();
    for (const auto& s : clique_subgroups_source)
        src.push_back(summary_to_json(s));
    nlohmann::json tgt = nlohmann::json::array();
    for (const auto& s : clique_subgroups_target)
        tgt.push_back(summary_to_json(s));
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : checked_pairs)
        pairs.push_back({{"source_clique", p.source_clique},
                         {"target_clique", p.target_clique},
                         {"reason", p.reason}});
    return nlohmann::json{{"source", source_id},
                          {"target", target_id},
                          {"clique_subgroups_source", src},
                          {"clique_subgroups_target", tgt},
                          {"checked_pairs", pairs},
                          {"conclusion", "groups are not isomorphic"}};
}

std::optional<NonIsoCertificate> noniso_certificate(const GraphProductPresentation& source,
                                                    const GraphProductPresentation& target,
                                                    IsoDiagnostics* diag) {
    NonIsoCertificate cert;
    cert.source_id = "source";
    cert.target_id = "target";

    const auto source_cliques = maximal_cliques(source.graph());
    const auto target_cliques = maximal_cliques(target.graph());

    std::vector<FiniteGroup> source_groups, target_groups;
    for (const auto& clique : source_cliques) {
        cert.clique_subgroups_source.push_back(summarize(source, clique));
        source_groups.push_back(clique_subgroup(source, clique));
    }
    for (const auto& clique : target_cliques) {
        cert.clique_subgroups_target.push_back(summarize(target, clique));
        target_groups.push_back(clique_subgroup(target, clique));
    }

    for (std::size_t i = 0; i < source_cliques.size(); ++i) {
        for (std::size_t j = 0; j < target_cliques.size(); ++j) {
            const auto& g = source_groups[i];
            const auto& h = target_groups[j];
            std::string reason;
            if (g.order() != h.order()) {
                reason = "order mismatch";
            } else if (g.element_order_multiset() != h.element_order_multiset()) {
                reason = "order-multiset mismatch";
            } else if (!are_isomorphic(g, h, diag)) {
                reason = "exhausted search";
            } else {
                return std::nullopt; // some clique-subgroup pair is isomorphic
            }
            cert.checked_pairs.push_back({source_cliques[i], target_cliques[j], reason});
        }
    }
    return cert;
}

} // namespace gpcayley
