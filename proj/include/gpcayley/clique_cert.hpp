#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpcayley/presentation.hpp"

namespace gpcayley {

// The subgroup generated by the vertex groups of a clique: their direct
// product, factors in the fixed vertex order. Throws NotAClique with a
// witness non-adjacent pair when the vertex set is not a clique.
FiniteGroup clique_subgroup(const GraphProductPresentation& p,
                            const std::vector<std::string>& clique);

struct CliqueSubgroupSummary {
    std::vector<std::string> clique; // vertex names in vertex order
    int order = 0;
    std::vector<int> element_orders; // sorted multiset
};

struct CheckedPair {
    std::vector<std::string> source_clique;
    std::vector<std::string> target_clique;
    // "order mismatch" | "order-multiset mismatch" | "exhausted search"
    std::string reason;
};

// Auditable evidence that two graph products of finite groups are not
// isomorphic: every pair of maximal-clique subgroups across the two
// presentations, each with the non-isomorphism reason that settled it.
// Cheap reasons (order, element-order multiset) are recorded before the
// backtracking search is ever invoked.
struct NonIsoCertificate {
    std::string source_id;
    std::string target_id;
    std::vector<CliqueSubgroupSummary> clique_subgroups_source;
    std::vector<CliqueSubgroupSummary> clique_subgroups_target;
    std::vector<CheckedPair> checked_pairs;

    nlohmann::json to_json() const;
};

// Compares all maximal-clique subgroup pairs. Returns the certificate when
// every pair is non-isomorphic; returns nothing as soon as some pair is
// isomorphic (which is NOT an isomorphism claim about the graph products).
// The two presentations may live on different graphs.
std::optional<NonIsoCertificate> noniso_certificate(const GraphProductPresentation& source,
                                                    const GraphProductPresentation& target,
                                                    IsoDiagnostics* diag = nullptr);

} // namespace gpcayley
