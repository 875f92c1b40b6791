#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gpcayley/word_engine.hpp"

namespace gpcayley {

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

// The radius-r ball of Cay(G_Gamma, S) around the identity: vertices are
// canonical words (identity at index 0, BFS layer order, within a layer by
// (parent index, generator order)), edges are exactly the intra-ball pairs
// {g, g*s} for s in S. edge_gen[k] is the generator syllable realizing
// edges[k] oriented from the lower to the higher vertex index; the opposite
// orientation is its inverse, from the same vertex group.
struct CayleyBall {
    GraphProductPresentation presentation;
    int radius = 0;
    std::vector<CanonicalWord> vertices;
    std::vector<int> distance;
    std::vector<std::pair<int, int>> edges;
    std::vector<Syllable> edge_gen;
    std::vector<std::vector<int>> neighbors;
};

// S = disjoint union of the per-vertex generating sets, in vertex order and
// element order within a vertex. Symmetric and identity-free by presentation
// validation.
std::vector<Syllable> generating_set(const GraphProductPresentation& p);

// BFS from the identity by right multiplication with every s in S. Aborts
// with BallTooLarge as soon as the vertex count would exceed max_vertices.
CayleyBall ball(const GraphProductPresentation& p, int radius,
                std::size_t max_vertices = kDefaultBallCap);

// Distance -> sorted multiset of vertex degrees within the ball. Every
// vertex at distance < radius sees all |S| of its Cayley-graph neighbors.
std::map<int, std::vector<int>> degree_profile(const CayleyBall& b);

// DOT text (undirected). With color_by_vertex_group, each edge is colored by
// the vertex group of its generator syllable, from a fixed palette keyed by
// vertex order.
std::string export_dot(const CayleyBall& b, bool color_by_vertex_group);

// {radius, vertex_count, vertex_counts_per_distance, degree_profile, edge_count}
nlohmann::json ball_summary(const CayleyBall& b);

} // namespace gpcayley
