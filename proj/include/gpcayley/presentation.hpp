#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gpcayley/finite_group.hpp"
#include "gpcayley/simplicial_graph.hpp"

namespace gpcayley {

// One entry of a word: an element of the vertex group attached to `vertex`
// (vertex is an index into the presentation's fixed vertex order). Raw words
// may carry identity elements; reduced words never do.
struct Syllable {
    int vertex = 0;
    int element = 0;

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A raw, unreduced word: any finite syllable sequence.
struct Word {
    std::vector<Syllable> syllables;
};

// All non-identity elements, the "all" generating set.
std::vector<int> full_genset(const FiniteGroup& g);

// Checks that `genset` is in range, identity-free, symmetric, and generates
// g; returns every element's BFS distance from the identity in Cay(g, genset).
// `where` names the vertex in error messages.
std::vector<int> checked_genset_distances(const FiniteGroup& g, const std::vector<int>& genset,
                                          const std::string& where);

// The defining data of a graph product of finite groups: the commutation
// graph, one vertex group per vertex, and one symmetric identity-free
// generating set per vertex. Validates at construction that every vertex is
// covered and that each generating set is symmetric, excludes the identity,
// and generates its group. Also precomputes, per vertex group, the BFS
// distance of every element from the identity in Cay(G_v, S_v).
//
// Immutable after construction; copies share state and keep the id, which is
// what words carry to detect cross-presentation mixups.
class GraphProductPresentation {
public:
    // Vertices missing from `vertex_gensets` default to the full genset.
    GraphProductPresentation(SimplicialGraph graph,
                             const std::map<std::string, FiniteGroup>& vertex_groups,
                             const std::map<std::string, std::vector<int>>& vertex_gensets = {});

    const SimplicialGraph& graph() const noexcept { return impl_->graph; }
    int vertex_count() const noexcept { return impl_->graph.vertex_count(); }
    const std::string& vertex_name(int v) const { return impl_->graph.vertex_name(v); }
    std::uint64_t id() const noexcept { return impl_->id; }

    const FiniteGroup& group(int v) const { return impl_->groups.at(v); }
    const FiniteGroup& group(std::string_view name) const {
        return impl_->groups.at(impl_->graph.index_of(name));
    }
    const std::vector<int>& genset(int v) const { return impl_->gensets.at(v); }

    bool adjacent(int u, int v) const { return impl_->graph.adjacent(u, v); }

    // Distance of `element` from the identity in Cay(G_v, S_v).
    int genset_distance(int v, int element) const;

    // |S| = sum of per-vertex genset sizes (the union is disjoint).
    std::size_t generating_set_size() const;

    // Same vertex names, same edges (the precondition for transporting
    // isomorphisms vertex-by-vertex).
    bool same_graph(const GraphProductPresentation& other) const {
        return impl_->graph.same_as(other.impl_->graph);
    }

    void check_syllable(const Syllable& s) const;

private:
    struct Impl {
        SimplicialGraph graph;
        std::vector<FiniteGroup> groups;
        std::vector<std::vector<int>> gensets;
        std::vector<std::vector<int>> genset_distances;
        std::uint64_t id = 0;
    };

    std::shared_ptr<const Impl> impl_;
};

} // namespace gpcayley
