#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpcayley/errors.hpp"

namespace gpcayley {

// A finite simplicial graph: distinct named vertices, loop-free undirected
// edges. The construction-time vertex sequence fixes the total order used
// everywhere downstream (canonical word order, clique factor order, DOT
// palette). Immutable after construction.
class SimplicialGraph {
public:
    SimplicialGraph(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::string& vertex_name(int v) const { return vertices_.at(v); }

    // Index in the fixed vertex order; throws UnknownVertex for foreign names.
    int index_of(std::string_view name) const;
    bool has_vertex(std::string_view name) const;

    bool adjacent(int u, int v) const { return adjacency_.at(u).at(v); }

    // Normalized (min,max) index pairs, sorted.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    // Same vertex sequence and same edge set.
    bool same_as(const SimplicialGraph& other) const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<bool>> adjacency_;
};

inline SimplicialGraph build_graph(std::vector<std::string> vertices,
                                   const std::vector<std::pair<std::string, std::string>>& edges) {
    return SimplicialGraph(std::move(vertices), edges);
}

// All inclusion-maximal cliques, each as a vector of vertex names in the
// graph's vertex order; the list is sorted by (size, lexicographic names).
// Bron-Kerbosch with pivoting.
std::vector<std::vector<std::string>> maximal_cliques(const SimplicialGraph& g);

} // namespace gpcayley
