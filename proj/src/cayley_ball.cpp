#include "gpcayley/cayley_ball.hpp"

#include <algorithm>
#include <unordered_map>

namespace gpcayley {

std::vector<Syllable> generating_set(const GraphProductPresentation& p) {
    std::vector<Syllable> out;
    out.reserve(p.generating_set_size());
    for (int v = 0; v < p.vertex_count(); ++v)
        for (int elem : p.genset(v))
            out.push_back({v, elem});
    return out;
}

CayleyBall ball(const GraphProductPresentation& p, int radius, std::size_t max_vertices) {
    const auto gens = generating_set(p);

    CayleyBall b{p, radius, {}, {}, {}, {}, {}};
    std::unordered_map<CanonicalWord, int, CanonicalWordHash> index;

    b.vertices.push_back(CanonicalWord(p, Word{}));
    b.distance.push_back(0);
    index.emplace(b.vertices[0], 0);

    for (std::size_t head = 0; head < b.vertices.size(); ++head) {
        if (b.distance[head] >= radius)
            continue;
        for (const auto& gen : gens) {
            Word next;
            next.syllables = b.vertices[head].syllables();
            next.syllables.push_back(gen);
            CanonicalWord w(p, next);
            if (index.find(w) == index.end()) {
                if (b.vertices.size() >= max_vertices)
                    throw_error(ErrorCode::BallTooLarge,
                                "ball of radius " + std::to_string(radius) + " exceeds cap of " +
                                    std::to_string(max_vertices) + " vertices");
                const int id = static_cast<int>(b.vertices.size());
                b.vertices.push_back(w);
                b.distance.push_back(b.distance[head] + 1);
                index.emplace(std::move(w), id);
            }
        }
    }

    // Second pass: all intra-ball edges {g, g*s}, including same-layer ones.
    std::map<std::pair<int, int>, Syllable> edge_map;
    for (std::size_t a = 0; a < b.vertices.size(); ++a) {
        for (const auto& gen : gens) {
            Word next;
            next.syllables = b.vertices[a].syllables();
            next.syllables.push_back(gen);
            const auto it = index.find(CanonicalWord(p, next));
            if (it == index.end())
                continue;
            const int other = it->second;
            const int lo = std::min(static_cast<int>(a), other);
            const int hi = std::max(static_cast<int>(a), other);
            if (static_cast<int>(a) == lo)
                edge_map.emplace(std::make_pair(lo, hi), gen);
            else
                edge_map.emplace(std::make_pair(lo, hi),
                                 Syllable{gen.vertex, p.group(gen.vertex).inv(gen.element)});
        }
    }

    b.neighbors.resize(b.vertices.size());
    for (const auto& [pair, gen] : edge_map) {
        b.edges.push_back(pair);
        b.edge_gen.push_back(gen);
        b.neighbors[pair.first].push_back(pair.second);
        b.neighbors[pair.second].push_back(pair.first);
    }
    return b;
}

std::map<int, std::vector<int>> degree_profile(const CayleyBall& b) {
    std::map<int, std::vector<int>> profile;
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
        profile[b.distance[i]].push_back(static_cast<int>(b.neighbors[i].size()));
    for (auto& [dist, degrees] : profile)
        std::sort(degrees.begin(), degrees.end());
    return profile;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

const char* kPalette[] = {"red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta"};

} // namespace

std::string export_dot(const CayleyBall& b, bool color_by_vertex_group) {
    std::string out = "graph cayley_ball {\n";
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        const std::string label =
            b.vertices[i].empty() ? "e" : format_word(b.presentation, b.vertices[i]);
        out += "  v" + std::to_string(i) + " [label=\"" + dot_escape(label) + "\"];\n";
    }
    for (std::size_t k = 0; k < b.edges.size(); ++k) {
        out += "  v" + std::to_string(b.edges[k].first) + " -- v" +
               std::to_string(b.edges[k].second);
        if (color_by_vertex_group)
            out += " [color=\"" + std::string(kPalette[b.edge_gen[k].vertex % 8]) + "\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

nlohmann::json ball_summary(const CayleyBall& b) {
    std::vector<std::size_t> per_distance(static_cast<std::size_t>(b.radius) + 1, 0);
    for (int d : b.distance)
        ++per_distance[d];
    while (per_distance.size() > 1 && per_distance.back() == 0)
        per_distance.pop_back(); // radius beyond saturation

    nlohmann::json profile = nlohmann::json::object();
    for (const auto& [dist, degrees] : degree_profile(b)) {
        nlohmann::json counts = nlohmann::json::object();
        for (int deg : degrees)
            counts[std::to_string(deg)] = counts.value(std::to_string(deg), 0) + 1;
        profile[std::to_string(dist)] = counts;
    }

    return nlohmann::json{{"radius", b.radius},
                          {"vertex_count", b.vertices.size()},
                          {"vertex_counts_per_distance", per_distance},
                          {"degree_profile", profile},
                          {"edge_count", b.edges.size()}};
}

} // namespace gpcayley
