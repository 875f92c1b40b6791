#include "gpcayley/iso_transport.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace gpcayley {

namespace {

std::vector<std::vector<bool>> cayley_adjacency(const FiniteGroup& g, const std::vector<int>& s) {
    const int n = g.order();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int gen : s) {
            const int b = g.mul(a, gen);
            adj[a][b] = adj[b][a] = true;
        }
    return adj;
}

void check_genset(const FiniteGroup& g, const std::vector<int>& s, const char* which) {
    for (int gen : s) {
        if (gen < 0 || gen >= g.order())
            throw_error(ErrorCode::BadElementIndex,
                        std::string(which) + " generating set index " + std::to_string(gen));
        if (gen == g.identity())
            throw_error(ErrorCode::IdentityInGenset, std::string(which) + " generating set");
        bool has_inverse = std::find(s.begin(), s.end(), g.inv(gen)) != s.end();
        if (!has_inverse)
            throw_error(ErrorCode::SymmetryViolation,
                        std::string(which) + " generating set misses the inverse of " +
                            g.label(gen));
    }
}

} // namespace

VertexIso normalize_iso(const std::vector<int>& h, const FiniteGroup& g, const std::vector<int>& s,
                        const FiniteGroup& h_group, const std::vector<int>& t,
                        std::string vertex_name) {
    check_genset(g, s, "domain");
    check_genset(h_group, t, "codomain");

    const int n = g.order();
    if (h_group.order() != n || static_cast<int>(h.size()) != n)
        throw_error(ErrorCode::NotAGraphIso, "not a bijection: domain order " + std::to_string(n) +
                                                 ", codomain order " +
                                                 std::to_string(h_group.order()) + ", map size " +
                                                 std::to_string(h.size()));
    std::vector<char> hit(n, 0);
    for (int img : h) {
        if (img < 0 || img >= n)
            throw_error(ErrorCode::NotAGraphIso, "image index " + std::to_string(img) +
                                                     " out of range");
        if (hit[img]++)
            throw_error(ErrorCode::NotAGraphIso,
                        "not injective: image " + h_group.label(img) + " repeats");
    }

    const auto dom_adj = cayley_adjacency(g, s);
    const auto cod_adj = cayley_adjacency(h_group, t);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (dom_adj[a][b] && !cod_adj[h[a]][h[b]])
                throw_error(ErrorCode::NotAGraphIso,
                            "edge {" + g.label(a) + "," + g.label(b) + "} maps to non-edge {" +
                                h_group.label(h[a]) + "," + h_group.label(h[b]) + "}");
            if (!dom_adj[a][b] && cod_adj[h[a]][h[b]])
                throw_error(ErrorCode::NotAGraphIso,
                            "non-edge {" + g.label(a) + "," + g.label(b) + "} maps to edge {" +
                                h_group.label(h[a]) + "," + h_group.label(h[b]) + "}");
        }

    // f(g) = a * h(g) with a = h(e_G)^-1; left translation is a graph
    // automorphism, so f is still an isomorphism and now fixes the identity.
    const int shift = h_group.inv(h[g.identity()]);
    VertexIso out;
    out.vertex = std::move(vertex_name);
    out.domain_group_id = g.id();
    out.codomain_group_id = h_group.id();
    out.map.resize(n);
    for (int x = 0; x < n; ++x)
        out.map[x] = h_group.mul(shift, h[x]);
    return out;
}

std::optional<VertexIso> find_vertex_iso(const FiniteGroup& g, const std::vector<int>& s,
                                         const FiniteGroup& h_group, const std::vector<int>& t,
                                         IsoDiagnostics* diag, int size_warning_bound) {
    check_genset(g, s, "domain");
    check_genset(h_group, t, "codomain");
    if (g.order() != h_group.order() || s.size() != t.size())
        return std::nullopt;
    if (diag && g.order() > size_warning_bound)
        diag->warnings.push_back("SizeWarning: Cayley-graph isomorphism search on order " +
                                 std::to_string(g.order()) + " (bound " +
                                 std::to_string(size_warning_bound) + ")");

    const int n = g.order();
    const auto dom_adj = cayley_adjacency(g, s);
    const auto cod_adj = cayley_adjacency(h_group, t);

    // Domain vertices in BFS order from the identity: every vertex after the
    // first has an already-assigned neighbor, which keeps pruning tight.
    std::vector<int> order;
    {
        std::vector<char> seen(n, 0);
        std::deque<int> queue{g.identity()};
        seen[g.identity()] = 1;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            order.push_back(x);
            for (int y = 0; y < n; ++y)
                if (dom_adj[x][y] && !seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
        }
        if (static_cast<int>(order.size()) != n)
            return std::nullopt; // domain Cayley graph not connected: genset invalid
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    map[g.identity()] = h_group.identity();
    used[h_group.identity()] = 1;

    auto backtrack = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size())
            return true;
        const int u = order[pos];
        if (map[u] >= 0)
            return self(self, pos + 1);
        for (int w = 0; w < n; ++w) {
            if (used[w])
                continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                const int x = order[q];
                ok = dom_adj[u][x] == static_cast<bool>(cod_adj[w][map[x]]);
            }
            if (!ok)
                continue;
            map[u] = w;
            used[w] = 1;
            if (self(self, pos + 1))
                return true;
            map[u] = -1;
            used[w] = 0;
        }
        return false;
    };

    if (!backtrack(backtrack, 0))
        return std::nullopt;
    return normalize_iso(map, g, s, h_group, t);
}

ProductIso build_product_iso(const GraphProductPresentation& source,
                             const GraphProductPresentation& target,
                             const std::map<std::string, std::vector<int>>& supplied_family,
                             IsoDiagnostics* diag) {
    if (!source.same_graph(target))
        throw_error(ErrorCode::GraphMismatch,
                    "source and target presentations have different commutation graphs");
    for (const auto& [name, unused] : supplied_family)
        if (!source.graph().has_vertex(name))
            throw_error(ErrorCode::UnknownVertex, "iso family entry for \"" + name + "\"");

    ProductIso iso{source, target, {}};
    for (int v = 0; v < source.vertex_count(); ++v) {
        const auto& name = source.vertex_name(v);
        const auto supplied = supplied_family.find(name);
        if (supplied != supplied_family.end()) {
            iso.family.push_back(normalize_iso(supplied->second, source.group(v),
                                               source.genset(v), target.group(v),
                                               target.genset(v), name));
        } else {
            auto found = find_vertex_iso(source.group(v), source.genset(v), target.group(v),
                                         target.genset(v), diag);
            if (!found)
                throw_error(ErrorCode::NoVertexIso,
                            "no Cayley-graph isomorphism at vertex \"" + name + "\"");
            found->vertex = name;
            iso.family.push_back(std::move(*found));
        }
    }
    return iso;
}

ProductIso inverse(const ProductIso& iso) {
    ProductIso out{iso.target, iso.source, {}};
    out.family.reserve(iso.family.size());
    for (const auto& vi : iso.family) {
        VertexIso inv;
        inv.vertex = vi.vertex;
        inv.domain_group_id = vi.codomain_group_id;
        inv.codomain_group_id = vi.domain_group_id;
        inv.map.assign(vi.map.size(), -1);
        for (std::size_t x = 0; x < vi.map.size(); ++x)
            inv.map[vi.map[x]] = static_cast<int>(x);
        out.family.push_back(std::move(inv));
    }
    return out;
}

CanonicalWord lift_bijection(const ProductIso& iso, const CanonicalWord& w) {
    if (w.presentation_id() != iso.source.id())
        throw_error(ErrorCode::PresentationMismatch,
                    "word was built over a different presentation than the iso source");
    Word image;
    image.syllables.reserve(w.size());
    for (const auto& syl : w.syllables())
        image.syllables.push_back({syl.vertex, iso.family.at(syl.vertex).map.at(syl.element)});
    return CanonicalWord(iso.target, image);
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json fail = nlohmann::json::array();
    for (const auto& f : failures)
        fail.push_back({{"kind", f.kind}, {"source_index", f.source_index}, {"detail", f.detail}});
    return nlohmann::json{{"radius", radius},
                          {"vertices_checked", vertices_checked},
                          {"edges_checked", edges_checked},
                          {"bijective", bijective},
                          {"forward_adjacency_ok", forward_adjacency_ok},
                          {"backward_adjacency_ok", backward_adjacency_ok},
                          {"genset_mapped", genset_mapped},
                          {"all_ok", all_ok()},
                          {"failures", fail}};
}

VerificationReport verify_iso_on_ball(const ProductIso& iso, int radius,
                                      std::size_t max_vertices) {
    const CayleyBall source_ball = ball(iso.source, radius, max_vertices);
    const CayleyBall target_ball = ball(iso.target, radius, max_vertices);
    const ProductIso inv = inverse(iso);

    VerificationReport report;
    report.radius = radius;
    report.vertices_checked = source_ball.vertices.size();
    report.edges_checked = source_ball.edges.size() + target_ball.edges.size();

    std::unordered_map<CanonicalWord, int, CanonicalWordHash> target_index;
    for (std::size_t i = 0; i < target_ball.vertices.size(); ++i)
        target_index.emplace(target_ball.vertices[i], static_cast<int>(i));

    // Sphere-by-sphere bijection check.
    report.bijective = source_ball.vertices.size() == target_ball.vertices.size();
    std::vector<int> image(source_ball.vertices.size(), -1);
    std::vector<char> covered(target_ball.vertices.size(), 0);
    for (std::size_t i = 0; i < source_ball.vertices.size(); ++i) {
        const CanonicalWord img = lift_bijection(iso, source_ball.vertices[i]);
        const auto it = target_index.find(img);
        if (it == target_index.end()) {
            report.bijective = false;
            report.failures.push_back({"image_outside_ball", static_cast<int>(i),
                                       format_word(iso.source, source_ball.vertices[i]) + " -> " +
                                           format_word(iso.target, img)});
            continue;
        }
        image[i] = it->second;
        if (target_ball.distance[it->second] != source_ball.distance[i]) {
            report.bijective = false;
            report.failures.push_back({"sphere_mismatch", static_cast<int>(i),
                                       "distance " + std::to_string(source_ball.distance[i]) +
                                           " maps to distance " +
                                           std::to_string(target_ball.distance[it->second])});
        }
        if (covered[it->second]++) {
            report.bijective = false;
            report.failures.push_back({"not_injective", static_cast<int>(i),
                                       "image " + format_word(iso.target, img) + " repeats"});
        }
    }
    for (std::size_t j = 0; j < covered.size(); ++j)
        if (!covered[j]) {
            report.bijective = false;
            report.failures.push_back({"not_onto", static_cast<int>(j),
                                       format_word(iso.target, target_ball.vertices[j]) +
                                           " has no preimage"});
        }

    auto edge_key = [](int a, int b) {
        return (static_cast<std::uint64_t>(std::min(a, b)) << 32) |
               static_cast<std::uint32_t>(std::max(a, b));
    };

    std::unordered_set<std::uint64_t> target_edges;
    for (const auto& [a, b] : target_ball.edges)
        target_edges.insert(edge_key(a, b));

    report.forward_adjacency_ok = true;
    for (const auto& [a, b] : source_ball.edges) {
        if (image[a] < 0 || image[b] < 0)
            continue; // already reported as a bijectivity failure
        if (!target_edges.count(edge_key(image[a], image[b]))) {
            report.forward_adjacency_ok = false;
            report.failures.push_back(
                {"forward_edge", a,
                 "edge {" + format_word(iso.source, source_ball.vertices[a]) + ", " +
                     format_word(iso.source, source_ball.vertices[b]) +
                     "} maps to non-edge {" +
                     format_word(iso.target, target_ball.vertices[image[a]]) + ", " +
                     format_word(iso.target, target_ball.vertices[image[b]]) + "}"});
        }
    }

    std::unordered_map<CanonicalWord, int, CanonicalWordHash> source_index;
    for (std::size_t i = 0; i < source_ball.vertices.size(); ++i)
        source_index.emplace(source_ball.vertices[i], static_cast<int>(i));
    std::unordered_set<std::uint64_t> source_edges;
    for (const auto& [a, b] : source_ball.edges)
        source_edges.insert(edge_key(a, b));

    report.backward_adjacency_ok = true;
    for (const auto& [x, y] : target_ball.edges) {
        const CanonicalWord px = lift_bijection(inv, target_ball.vertices[x]);
        const CanonicalWord py = lift_bijection(inv, target_ball.vertices[y]);
        const auto ix = source_index.find(px);
        const auto iy = source_index.find(py);
        if (ix == source_index.end() || iy == source_index.end() ||
            !source_edges.count(edge_key(ix->second, iy->second))) {
            report.backward_adjacency_ok = false;
            report.failures.push_back(
                {"backward_edge", x,
                 "target edge {" + format_word(iso.target, target_ball.vertices[x]) + ", " +
                     format_word(iso.target, target_ball.vertices[y]) +
                     "} pulls back to non-edge"});
        }
    }

    // f(S) = T, checked on the single-syllable words themselves.
    report.genset_mapped = true;
    std::vector<Syllable> mapped;
    for (const auto& s : generating_set(iso.source)) {
        const CanonicalWord img =
            lift_bijection(iso, CanonicalWord(iso.source, Word{{s}}));
        if (img.size() != 1) {
            report.genset_mapped = false;
            report.failures.push_back({"genset_image", s.vertex,
                                       "generator image is not a single syllable"});
            continue;
        }
        mapped.push_back(img.syllables()[0]);
    }
    auto target_gens = generating_set(iso.target);
    std::sort(mapped.begin(), mapped.end());
    std::sort(target_gens.begin(), target_gens.end());
    if (mapped != target_gens) {
        report.genset_mapped = false;
        report.failures.push_back({"genset_image", 0, "f(S) differs from T as a set"});
    }

    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const VerificationFailure& a, const VerificationFailure& b) {
                         return a.source_index < b.source_index;
                     });
    return report;
}

} // namespace gpcayley
