#include "gpcayley/word_engine.hpp"

#include <algorithm>

namespace gpcayley {

Word reduce(const GraphProductPresentation& p, const Word& w) {
    for (const auto& s : w.syllables)
        p.check_syllable(s);

    std::vector<Syllable> syl = w.syllables;
    bool changed = true;
    while (changed) {
        changed = false;

        for (std::size_t i = 0; i < syl.size();) {
            if (syl[i].element == p.group(syl[i].vertex).identity()) {
                syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                ++i;
            }
        }

        // Merge syl[j] into an earlier same-vertex syllable: walk left while
        // the intervening vertices commute with it.
        for (std::size_t j = 1; j < syl.size() && !changed; ++j) {
            for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(j) - 1; i >= 0; --i) {
                if (syl[i].vertex == syl[j].vertex) {
                    syl[i].element = p.group(syl[i].vertex).mul(syl[i].element, syl[j].element);
                    syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                    break;
                }
                if (!p.adjacent(syl[i].vertex, syl[j].vertex))
                    break;
            }
        }
    }
    return Word{std::move(syl)};
}

CanonicalWord::CanonicalWord(const GraphProductPresentation& p, const Word& raw)
    : presentation_id_(p.id()) {
    std::vector<Syllable> pending = reduce(p, raw).syllables;
    syllables_.reserve(pending.size());

    // Left-greedy order: among the syllables movable to the front (vertex
    // adjacent to every earlier pending syllable's vertex), emit the one
    // with the smallest vertex. Movable syllables have pairwise distinct
    // vertices, so the choice is unique.
    while (!pending.empty()) {
        std::size_t best = pending.size();
        for (std::size_t idx = 0; idx < pending.size(); ++idx) {
            bool movable = true;
            for (std::size_t k = 0; k < idx && movable; ++k)
                movable = p.adjacent(pending[k].vertex, pending[idx].vertex);
            if (movable && (best == pending.size() || pending[idx].vertex < pending[best].vertex))
                best = idx;
        }
        syllables_.push_back(pending[best]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    }
}

namespace {

void check_same_presentation(const GraphProductPresentation& p, const CanonicalWord& w) {
    if (w.presentation_id() != p.id())
        throw_error(ErrorCode::PresentationMismatch,
                    "word was built over a different presentation");
}

} // namespace

CanonicalWord multiply(const GraphProductPresentation& p, const CanonicalWord& w1,
                       const CanonicalWord& w2) {
    check_same_presentation(p, w1);
    check_same_presentation(p, w2);
    Word concat;
    concat.syllables.reserve(w1.size() + w2.size());
    concat.syllables.insert(concat.syllables.end(), w1.syllables().begin(), w1.syllables().end());
    concat.syllables.insert(concat.syllables.end(), w2.syllables().begin(), w2.syllables().end());
    return CanonicalWord(p, concat);
}

CanonicalWord invert(const GraphProductPresentation& p, const CanonicalWord& w) {
    check_same_presentation(p, w);
    Word reversed;
    reversed.syllables.reserve(w.size());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
        reversed.syllables.push_back({it->vertex, p.group(it->vertex).inv(it->element)});
    return CanonicalWord(p, reversed);
}

int s_length(const GraphProductPresentation& p, const CanonicalWord& w) {
    check_same_presentation(p, w);
    int total = 0;
    for (const auto& s : w.syllables())
        total += p.genset_distance(s.vertex, s.element);
    return total;
}

Word parse_word(const GraphProductPresentation& p, std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };

    Word out;
    text = trim(text);
    if (text.empty())
        return out;

    while (true) {
        const auto semi = text.find(';');
        const std::string_view token = trim(text.substr(0, semi));
        const auto colon = token.find(':');
        if (token.empty() || colon == std::string_view::npos)
            throw_error(ErrorCode::MalformedWord,
                        "expected vertex:label, got \"" + std::string(token) + "\"");
        const std::string vertex(trim(token.substr(0, colon)));
        const std::string label(trim(token.substr(colon + 1)));

        const int v = p.graph().index_of(vertex); // throws UnknownVertex
        const auto elem = p.group(v).index_of_label(label);
        if (!elem)
            throw_error(ErrorCode::BadElementIndex,
                        "vertex \"" + vertex + "\" has no element labelled \"" + label + "\"");
        out.syllables.push_back({v, *elem});

        if (semi == std::string_view::npos)
            break;
        text = text.substr(semi + 1);
    }
    return out;
}

namespace {

std::string format_syllables(const GraphProductPresentation& p,
                             const std::vector<Syllable>& syllables) {
    std::string out;
    for (const auto& s : syllables) {
        if (!out.empty())
            out += ';';
        out += p.vertex_name(s.vertex);
        out += ':';
        out += p.group(s.vertex).label(s.element);
    }
    return out;
}

} // namespace

std::string format_word(const GraphProductPresentation& p, const Word& w) {
    for (const auto& s : w.syllables)
        p.check_syllable(s);
    return format_syllables(p, w.syllables);
}

std::string format_word(const GraphProductPresentation& p, const CanonicalWord& w) {
    check_same_presentation(p, w);
    return format_syllables(p, w.syllables());
}

} // namespace gpcayley
