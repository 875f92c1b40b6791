#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "gpcayley/presentation.hpp"

namespace gpcayley {

// The chosen representative of a shuffle-equivalence class of reduced words:
// reduced (no identity syllables, no merge possible even after legal
// shuffles) and in left-greedy order (repeatedly emit, among the syllables
// that can be shuffled to the front, the one with the smallest vertex).
// Two words represent the same group element iff their canonical forms are
// identical sequences, so equality and hashing decide the word problem.
//
// Constructing one from a raw word performs the full reduction and
// reordering; construction is the only way to obtain the type.
class CanonicalWord {
public:
    CanonicalWord(const GraphProductPresentation& p, const Word& raw);

    const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
    std::uint64_t presentation_id() const noexcept { return presentation_id_; }
    bool empty() const noexcept { return syllables_.empty(); }
    std::size_t size() const noexcept { return syllables_.size(); }

    friend bool operator==(const CanonicalWord& a, const CanonicalWord& b) {
        return a.presentation_id_ == b.presentation_id_ && a.syllables_ == b.syllables_;
    }

private:
    std::uint64_t presentation_id_ = 0;
    std::vector<Syllable> syllables_;
};

struct CanonicalWordHash {
    std::size_t operator()(const CanonicalWord& w) const noexcept {
        std::uint64_t h = 1469598103934665603ull ^ w.presentation_id();
        for (const auto& s : w.syllables()) {
            h ^= (static_cast<std::uint64_t>(s.vertex) << 32) ^ static_cast<std::uint32_t>(s.element);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Exhaustively applies the shortening transformations: delete identity
// syllables, and merge a syllable into an earlier same-vertex syllable
// whenever every intervening syllable's vertex is adjacent to it (a merge
// enabled by shuffling). Returns a reduced word for the same element.
Word reduce(const GraphProductPresentation& p, const Word& w);

inline CanonicalWord canonical_form(const GraphProductPresentation& p, const Word& w) {
    return CanonicalWord(p, w);
}

CanonicalWord multiply(const GraphProductPresentation& p, const CanonicalWord& w1,
                       const CanonicalWord& w2);

CanonicalWord invert(const GraphProductPresentation& p, const CanonicalWord& w);

inline std::size_t syllable_count(const CanonicalWord& w) noexcept { return w.size(); }

// Sum over syllables of the element's distance from the identity in its
// vertex Cayley graph Cay(G_v, S_v); 0 for the empty word. Equals the BFS
// distance from the identity in Cay(G_Gamma, S).
int s_length(const GraphProductPresentation& p, const CanonicalWord& w);

// Textual word syntax: semicolon-separated vertex:label tokens, e.g.
// "u:a;v:b1;u:a2". The empty string denotes the identity.
Word parse_word(const GraphProductPresentation& p, std::string_view text);
std::string format_word(const GraphProductPresentation& p, const Word& w);
std::string format_word(const GraphProductPresentation& p, const CanonicalWord& w);

} // namespace gpcayley
