#include "doctest.h"

#include <algorithm>

#include "gpcayley/simplicial_graph.hpp"

using namespace gpcayley;

namespace {

bool is_clique(const SimplicialGraph& g, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (!g.adjacent(g.index_of(names[i]), g.index_of(names[j])))
                return false;
    return true;
}

bool is_maximal(const SimplicialGraph& g, const std::vector<std::string>& names) {
    for (const auto& candidate : g.vertices()) {
        if (std::find(names.begin(), names.end(), candidate) != names.end())
            continue;
        bool extends = true;
        for (const auto& member : names)
            extends = extends && g.adjacent(g.index_of(candidate), g.index_of(member));
        if (extends)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("build_graph validates its input") {
    const auto g = build_graph({"u", "v"}, {{"u", "v"}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});

    CHECK_THROWS_AS(build_graph({"u", "u"}, {}), Error);
    CHECK_THROWS_AS(build_graph({"u"}, {{"u", "w"}}), Error);
    CHECK_THROWS_AS(build_graph({"u"}, {{"u", "u"}}), Error);
    try {
        build_graph({"u"}, {{"u", "u"}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LoopEdge);
    }
}

TEST_CASE("vertex order is the construction order") {
    const auto g = build_graph({"z", "a", "m"}, {});
    CHECK(g.vertex_name(0) == "z");
    CHECK(g.index_of("m") == 2);
    CHECK_THROWS_AS(g.index_of("q"), Error);
    CHECK(g.same_as(build_graph({"z", "a", "m"}, {})));
    CHECK_FALSE(g.same_as(build_graph({"a", "z", "m"}, {})));
}

TEST_CASE("maximal cliques of the basic shapes") {
    CHECK(maximal_cliques(build_graph({"u", "v"}, {})) ==
          std::vector<std::vector<std::string>>{{"u"}, {"v"}});
    CHECK(maximal_cliques(build_graph({"u", "v"}, {{"u", "v"}})) ==
          std::vector<std::vector<std::string>>{{"u", "v"}});
    CHECK(maximal_cliques(build_graph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}})) ==
          std::vector<std::vector<std::string>>{{"u", "v"}, {"v", "w"}});
}

TEST_CASE("complete and edgeless graphs degenerate as expected") {
    const auto complete =
        build_graph({"a", "b", "c", "d"},
                    {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
    CHECK(maximal_cliques(complete) ==
          std::vector<std::vector<std::string>>{{"a", "b", "c", "d"}});

    const auto edgeless = build_graph({"a", "b", "c"}, {});
    CHECK(maximal_cliques(edgeless) ==
          std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c"}});
}

TEST_CASE("every clique is complete and maximal, every vertex covered") {
    // a mixed shape: square with one diagonal plus a pendant vertex
    const auto g = build_graph({"a", "b", "c", "d", "p"},
                               {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"},
                                {"d", "p"}});
    const auto cliques = maximal_cliques(g);
    CHECK(cliques.size() == 3); // {a,b,c}, {a,c,d}, {d,p}
    std::vector<char> covered(g.vertex_count(), 0);
    for (const auto& clique : cliques) {
        CHECK(is_clique(g, clique));
        CHECK(is_maximal(g, clique));
        for (const auto& name : clique)
            covered[g.index_of(name)] = 1;
    }
    CHECK(std::count(covered.begin(), covered.end(), 1) == g.vertex_count());

    // deterministically ordered by (size, lexicographic names)
    auto sorted = cliques;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    CHECK(cliques == sorted);
}
