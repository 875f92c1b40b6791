#include "gpcayley/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <deque>

namespace gpcayley {

namespace {

std::uint64_t next_presentation_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

} // namespace

std::vector<int> full_genset(const FiniteGroup& g) {
    std::vector<int> out;
    out.reserve(g.order() - 1);
    for (int i = 0; i < g.order(); ++i)
        if (i != g.identity())
            out.push_back(i);
    return out;
}

GraphProductPresentation::GraphProductPresentation(
    SimplicialGraph graph, const std::map<std::string, FiniteGroup>& vertex_groups,
    const std::map<std::string, std::vector<int>>& vertex_gensets) {
    auto impl = std::make_shared<Impl>(Impl{std::move(graph), {}, {}, {}, next_presentation_id()});

    for (const auto& [name, unused] : vertex_groups)
        if (!impl->graph.has_vertex(name))
            throw_error(ErrorCode::UnknownVertex, "vertex group for \"" + name + "\"");
    for (const auto& [name, unused] : vertex_gensets)
        if (!impl->graph.has_vertex(name))
            throw_error(ErrorCode::UnknownVertex, "generating set for \"" + name + "\"");

    const int n = impl->graph.vertex_count();
    impl->groups.reserve(n);
    for (int v = 0; v < n; ++v) {
        const auto& name = impl->graph.vertex_name(v);
        auto it = vertex_groups.find(name);
        if (it == vertex_groups.end())
            throw_error(ErrorCode::MissingVertexGroup, "\"" + name + "\"");
        impl->groups.push_back(it->second);
    }

    impl->gensets.resize(n);
    for (int v = 0; v < n; ++v) {
        const auto& name = impl->graph.vertex_name(v);
        const auto& g = impl->groups[v];
        auto it = vertex_gensets.find(name);
        std::vector<int> s = (it == vertex_gensets.end()) ? full_genset(g) : it->second;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());

        impl->genset_distances.push_back(checked_genset_distances(g, s, name));
        impl->gensets[v] = std::move(s);
    }

    impl_ = std::move(impl);
}

std::vector<int> checked_genset_distances(const FiniteGroup& g, const std::vector<int>& genset,
                                          const std::string& where) {
    for (int elem : genset) {
        if (elem < 0 || elem >= g.order())
            throw_error(ErrorCode::BadElementIndex, "generating set of \"" + where +
                                                        "\" contains index " +
                                                        std::to_string(elem));
        if (elem == g.identity())
            throw_error(ErrorCode::IdentityInGenset,
                        "generating set of \"" + where + "\" contains the identity");
    }
    for (int elem : genset)
        if (std::find(genset.begin(), genset.end(), g.inv(elem)) == genset.end())
            throw_error(ErrorCode::SymmetryViolation,
                        "generating set of \"" + where + "\" contains " + g.label(elem) +
                            " but not its inverse " + g.label(g.inv(elem)));

    // BFS in Cay(g, genset); doubles as the generation check.
    std::vector<int> dist(g.order(), -1);
    dist[g.identity()] = 0;
    std::deque<int> queue{g.identity()};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int gen : genset) {
            const int y = g.mul(x, gen);
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    for (int elem = 0; elem < g.order(); ++elem)
        if (dist[elem] < 0)
            throw_error(ErrorCode::DoesNotGenerate,
                        "generating set of \"" + where + "\" does not reach " + g.label(elem));
    return dist;
}

int GraphProductPresentation::genset_distance(int v, int element) const {
    if (v < 0 || v >= vertex_count())
        throw_error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v));
    const auto& dist = impl_->genset_distances[v];
    if (element < 0 || element >= static_cast<int>(dist.size()))
        throw_error(ErrorCode::BadElementIndex,
                    "element index " + std::to_string(element) + " at vertex " + vertex_name(v));
    return dist[element];
}

std::size_t GraphProductPresentation::generating_set_size() const {
    std::size_t total = 0;
    for (const auto& s : impl_->gensets)
        total += s.size();
    return total;
}

void GraphProductPresentation::check_syllable(const Syllable& s) const {
    if (s.vertex < 0 || s.vertex >= vertex_count())
        throw_error(ErrorCode::UnknownVertex, "syllable vertex index " + std::to_string(s.vertex));
    if (s.element < 0 || s.element >= group(s.vertex).order())
        throw_error(ErrorCode::BadElementIndex, "syllable element index " +
                                                    std::to_string(s.element) + " at vertex " +
                                                    vertex_name(s.vertex));
}

} // namespace gpcayley
