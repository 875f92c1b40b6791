#pragma once

// Test-only machinery. The closure oracle re-derives canonical forms by
// brute force, independently of the engine's reduce/canonical_form path: it
// BFS-explores every word reachable by single applications of the three
// word transformations and takes the lexicographically smallest among the
// shortest. Also home to the deterministic generators and the shared test
// presentations.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gpcayley/word_engine.hpp"

namespace testutil {

using gpcayley::FiniteGroup;
using gpcayley::GraphProductPresentation;
using gpcayley::SimplicialGraph;
using gpcayley::Syllable;
using gpcayley::Word;

using Syllables = std::vector<Syllable>;

// One application of: (i) delete an identity syllable, (ii) combine two
// consecutive same-vertex syllables, (iii) swap two consecutive syllables at
// adjacent vertices.
inline std::vector<Syllables> rewrite_neighbors(const GraphProductPresentation& p,
                                                const Syllables& w) {
    std::vector<Syllables> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].element == p.group(w[i].vertex).identity()) {
            Syllables next = w;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
            out.push_back(std::move(next));
        }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].vertex == w[i + 1].vertex) {
            Syllables next = w;
            next[i].element = p.group(w[i].vertex).mul(w[i].element, w[i + 1].element);
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            out.push_back(std::move(next));
        }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (p.adjacent(w[i].vertex, w[i + 1].vertex)) {
            Syllables next = w;
            std::swap(next[i], next[i + 1]);
            out.push_back(std::move(next));
        }
    }
    return out;
}

struct ClosureOracle {
    Syllables canonical;          // lexicographically smallest among the shortest
    std::set<Syllables> shortest; // every shortest reachable word
    bool one_shuffle_class = false;
};

inline ClosureOracle closure_canonical(const GraphProductPresentation& p, const Syllables& w) {
    std::set<Syllables> visited{w};
    std::vector<Syllables> queue{w};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (auto& next : rewrite_neighbors(p, queue[head]))
            if (visited.insert(next).second)
                queue.push_back(std::move(next));

    std::size_t min_len = w.size();
    for (const auto& v : visited)
        min_len = std::min(min_len, v.size());

    ClosureOracle result;
    for (const auto& v : visited)
        if (v.size() == min_len)
            result.shortest.insert(v);
    result.canonical = *result.shortest.begin(); // set order is lexicographic

    // The shortest words should be exactly one shuffle class: the
    // (iii)-only closure of any one of them.
    std::set<Syllables> shuffle_class{*result.shortest.begin()};
    std::vector<Syllables> sq{*result.shortest.begin()};
    for (std::size_t head = 0; head < sq.size(); ++head) {
        const Syllables cur = sq[head]; // copy: push_back below reallocates
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (p.adjacent(cur[i].vertex, cur[i + 1].vertex)) {
                Syllables next = cur;
                std::swap(next[i], next[i + 1]);
                if (shuffle_class.insert(next).second)
                    sq.push_back(std::move(next));
            }
        }
    }
    result.one_shuffle_class = shuffle_class == result.shortest;
    return result;
}

// The syllable alphabet: every (vertex, element) pair, identity elements
// included only when with_identity.
inline std::vector<Syllable> alphabet(const GraphProductPresentation& p, bool with_identity) {
    std::vector<Syllable> out;
    for (int v = 0; v < p.vertex_count(); ++v)
        for (int e = 0; e < p.group(v).order(); ++e)
            if (with_identity || e != p.group(v).identity())
                out.push_back({v, e});
    return out;
}

inline Syllables random_word(const GraphProductPresentation& p, std::mt19937& rng, int length,
                             bool with_identity) {
    const auto letters = alphabet(p, with_identity);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Syllables out;
    out.reserve(length);
    for (int i = 0; i < length; ++i)
        out.push_back(letters[pick(rng)]);
    return out;
}

// Applies `steps` random legal (iii)-swaps (skipping steps with no legal swap).
inline Syllables random_shuffle(const GraphProductPresentation& p, std::mt19937& rng, Syllables w,
                                int steps) {
    for (int s = 0; s < steps; ++s) {
        std::vector<std::size_t> swappable;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (p.adjacent(w[i].vertex, w[i + 1].vertex))
                swappable.push_back(i);
        if (swappable.empty())
            return w;
        std::uniform_int_distribution<std::size_t> pick(0, swappable.size() - 1);
        const std::size_t i = swappable[pick(rng)];
        std::swap(w[i], w[i + 1]);
    }
    return w;
}

// Inserts identity syllables and (g, g^-1) pairs at random positions.
inline Syllables random_trivial_insertions(const GraphProductPresentation& p, std::mt19937& rng,
                                           Syllables w, int insertions) {
    const auto letters = alphabet(p, false);
    std::uniform_int_distribution<std::size_t> pick_letter(0, letters.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> pick_vertex(0, p.vertex_count() - 1);
    for (int i = 0; i < insertions; ++i) {
        std::uniform_int_distribution<std::size_t> pick_pos(0, w.size());
        const std::size_t pos = pick_pos(rng);
        if (coin(rng) == 0) {
            const int v = pick_vertex(rng);
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos),
                     Syllable{v, p.group(v).identity()});
        } else {
            const Syllable g = letters[pick_letter(rng)];
            const Syllable g_inv{g.vertex, p.group(g.vertex).inv(g.element)};
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), {g, g_inv});
        }
    }
    return w;
}

// Calls fn on every word of length exactly `length` over the alphabet.
inline void for_each_word(const GraphProductPresentation& p, int length, bool with_identity,
                          const std::function<void(const Syllables&)>& fn) {
    const auto letters = alphabet(p, with_identity);
    Syllables word(length);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == length) {
            fn(word);
            return;
        }
        for (const auto& letter : letters) {
            word[pos] = letter;
            rec(pos + 1);
        }
    };
    rec(0);
}

// Sphere sizes of a free product with full gensets: alternating syllable
// sequences weighted by (|G_v| - 1) per slot.
inline std::vector<long long> free_product_sphere_sizes(const std::vector<int>& orders,
                                                        int max_k) {
    const int m = static_cast<int>(orders.size());
    std::vector<long long> sizes{1};
    std::vector<long long> ending(m, 0); // A(k, v)
    for (int v = 0; v < m; ++v)
        ending[v] = orders[v] - 1;
    sizes.push_back(0);
    for (int v = 0; v < m; ++v)
        sizes[1] += ending[v];
    for (int k = 2; k <= max_k; ++k) {
        std::vector<long long> next(m, 0);
        long long total_prev = 0;
        for (int v = 0; v < m; ++v)
            total_prev += ending[v];
        long long total = 0;
        for (int v = 0; v < m; ++v) {
            next[v] = (orders[v] - 1) * (total_prev - ending[v]);
            total += next[v];
        }
        ending = std::move(next);
        sizes.push_back(total);
    }
    return sizes;
}

// --- shared test presentations ---

inline GraphProductPresentation z4_s3() {
    SimplicialGraph graph({"u", "v"}, {});
    return GraphProductPresentation(
        graph, {{"u", FiniteGroup::cyclic(4)}, {"v", FiniteGroup::symmetric(3)}});
}

inline GraphProductPresentation klein_z6() {
    SimplicialGraph graph({"u", "v"}, {});
    return GraphProductPresentation(
        graph,
        {{"u", FiniteGroup::direct_product({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)})},
         {"v", FiniteGroup::cyclic(6)}});
}

inline GraphProductPresentation square_racg() {
    SimplicialGraph graph({"a", "b", "c", "d"},
                          {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    std::map<std::string, FiniteGroup> groups;
    for (const auto* name : {"a", "b", "c", "d"})
        groups.emplace(name, FiniteGroup::cyclic(2));
    return GraphProductPresentation(graph, groups);
}

inline GraphProductPresentation triangle_z2() {
    SimplicialGraph graph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}, {"u", "w"}});
    std::map<std::string, FiniteGroup> groups;
    for (const auto* name : {"u", "v", "w"})
        groups.emplace(name, FiniteGroup::cyclic(2));
    return GraphProductPresentation(graph, groups);
}

} // namespace testutil
