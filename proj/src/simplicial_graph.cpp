#include "gpcayley/simplicial_graph.hpp"

#include <algorithm>
#include <set>

namespace gpcayley {

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
    std::set<std::string_view> seen;
    for (const auto& name : vertices_)
        if (!seen.insert(name).second)
            throw_error(ErrorCode::DuplicateVertex, "\"" + name + "\"");

    const int n = vertex_count();
    adjacency_.assign(n, std::vector<bool>(n, false));

    std::set<std::pair<int, int>> edge_set;
    for (const auto& [a, b] : edges) {
        if (!has_vertex(a))
            throw_error(ErrorCode::UnknownEndpoint, "\"" + a + "\"");
        if (!has_vertex(b))
            throw_error(ErrorCode::UnknownEndpoint, "\"" + b + "\"");
        const int u = index_of(a);
        const int v = index_of(b);
        if (u == v)
            throw_error(ErrorCode::LoopEdge, "edge {" + a + "," + b + "} is a loop");
        edge_set.insert({std::min(u, v), std::max(u, v)});
        adjacency_[u][v] = adjacency_[v][u] = true;
    }
    edges_.assign(edge_set.begin(), edge_set.end());
}

int SimplicialGraph::index_of(std::string_view name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices_[i] == name)
            return i;
    throw_error(ErrorCode::UnknownVertex, "\"" + std::string(name) + "\"");
}

bool SimplicialGraph::has_vertex(std::string_view name) const {
    return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

bool SimplicialGraph::same_as(const SimplicialGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
}

namespace {

void bron_kerbosch(const SimplicialGraph& g, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of p ∪ x with the most neighbors in p
    int pivot = -1;
    std::size_t best = 0;
    for (const auto& pool : {p, x})
        for (int u : pool) {
            std::size_t cnt = 0;
            for (int w : p)
                if (g.adjacent(u, w))
                    ++cnt;
            if (pivot < 0 || cnt > best) {
                pivot = u;
                best = cnt;
            }
        }

    const std::vector<int> candidates = p;
    for (int v : candidates) {
        if (pivot >= 0 && g.adjacent(pivot, v))
            continue;
        r.push_back(v);
        std::vector<int> p2, x2;
        for (int w : p)
            if (g.adjacent(v, w))
                p2.push_back(w);
        for (int w : x)
            if (g.adjacent(v, w))
                x2.push_back(w);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace

std::vector<std::vector<std::string>> maximal_cliques(const SimplicialGraph& g) {
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        all[i] = i;

    std::vector<std::vector<int>> raw;
    std::vector<int> r;
    bron_kerbosch(g, r, all, {}, raw);

    std::vector<std::vector<std::string>> cliques;
    cliques.reserve(raw.size());
    for (auto& clique : raw) {
        std::sort(clique.begin(), clique.end()); // vertex order
        std::vector<std::string> names;
        names.reserve(clique.size());
        for (int v : clique)
            names.push_back(g.vertex_name(v));
        cliques.push_back(std::move(names));
    }
    std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return cliques;
}

} // namespace gpcayley
