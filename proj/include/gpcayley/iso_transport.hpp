#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpcayley/cayley_ball.hpp"
#include "gpcayley/word_engine.hpp"

namespace gpcayley {

// A graph isomorphism Cay(G_v, S_v) -> Cay(H_v, T_v) for one vertex, stored
// as the element-index bijection. Produced by normalize_iso, so it maps
// identity to identity and S_v onto T_v.
struct VertexIso {
    std::string vertex;
    std::uint64_t domain_group_id = 0;
    std::uint64_t codomain_group_id = 0;
    std::vector<int> map;
};

// Validates that h is a graph isomorphism Cay(G,S) -> Cay(H,T) (throws
// NotAGraphIso with a witness edge otherwise) and shifts it to fix the
// identity: f(g) = h(e_G)^-1 * h(g). The result satisfies f(e_G) = e_H and
// f(S) = T.
VertexIso normalize_iso(const std::vector<int>& h, const FiniteGroup& g,
                        const std::vector<int>& s, const FiniteGroup& h_group,
                        const std::vector<int>& t, std::string vertex_name = {});

// Backtracking search for a graph isomorphism of the two finite Cayley
// graphs; identity-preserving without loss of generality. Returns the
// normalized iso, or nothing when the graphs are not isomorphic.
std::optional<VertexIso> find_vertex_iso(const FiniteGroup& g, const std::vector<int>& s,
                                         const FiniteGroup& h_group, const std::vector<int>& t,
                                         IsoDiagnostics* diag = nullptr,
                                         int size_warning_bound = 512);

// The transported map f: G_Gamma -> H_Gamma, realized as one VertexIso per
// vertex of the (shared) commutation graph plus the syllable-wise lifting
// rule.
struct ProductIso {
    GraphProductPresentation source;
    GraphProductPresentation target;
    std::vector<VertexIso> family; // by vertex index
};

// Assembles a ProductIso over presentations sharing one graph. Supplied
// per-vertex bijections (keyed by vertex name) are normalized; vertices
// without one get find_vertex_iso, and NoVertexIso names the vertex when
// that search fails.
ProductIso build_product_iso(const GraphProductPresentation& source,
                             const GraphProductPresentation& target,
                             const std::map<std::string, std::vector<int>>& supplied_family = {},
                             IsoDiagnostics* diag = nullptr);

// The inverse family: swaps source and target, inverts every bijection.
ProductIso inverse(const ProductIso& iso);

// Applies the vertex isos syllable-wise and re-canonicalizes over the
// target. Preserves syllable count, vertex structure, and s_length.
CanonicalWord lift_bijection(const ProductIso& iso, const CanonicalWord& w);

struct VerificationFailure {
    std::string kind;
    int source_index = 0;
    std::string detail;
};

struct VerificationReport {
    int radius = 0;
    std::size_t vertices_checked = 0;
    std::size_t edges_checked = 0;
    bool bijective = false;
    bool forward_adjacency_ok = false;
    bool backward_adjacency_ok = false;
    bool genset_mapped = false;
    std::vector<VerificationFailure> failures;

    bool all_ok() const {
        return bijective && forward_adjacency_ok && backward_adjacency_ok && genset_mapped;
    }
    nlohmann::json to_json() const;
};

// Mechanized adjacency check on finite truncations: builds both radius-r
// balls, maps the source ball through the lift sphere-by-sphere, checks
// every source edge forward, every target edge backward through the inverse
// family, and that f(S) = T. All flags true iff failures is empty.
VerificationReport verify_iso_on_ball(const ProductIso& iso, int radius,
                                      std::size_t max_vertices = kDefaultBallCap);

} // namespace gpcayley
