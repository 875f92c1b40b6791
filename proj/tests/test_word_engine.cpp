#include "doctest.h"

#include <random>

#include "gpcayley/word_engine.hpp"
#include "oracle.hpp"

using namespace gpcayley;
using testutil::Syllables;

namespace {

GraphProductPresentation edge_z2_z2() {
    return GraphProductPresentation(build_graph({"u", "v"}, {{"u", "v"}}),
                                    {{"u", FiniteGroup::cyclic(2)},
                                     {"v", FiniteGroup::cyclic(2)}});
}

CanonicalWord make(const GraphProductPresentation& p, const Syllables& syl) {
    return canonical_form(p, Word{syl});
}

} // namespace

TEST_CASE("reduce deletes identities and merges across commuting syllables") {
    const auto free_product = testutil::z4_s3();
    CHECK(reduce(free_product, Word{}).syllables.empty());

    // a * a^3 = e over Z4 * S3
    const auto cancelled = reduce(free_product, Word{{{0, 1}, {0, 3}}});
    CHECK(cancelled.syllables.empty());

    // x y x = y when the two vertex groups commute
    const auto edge = edge_z2_z2();
    const auto shuffled_out = reduce(edge, Word{{{0, 1}, {1, 1}, {0, 1}}});
    CHECK(shuffled_out.syllables == Syllables{{1, 1}});

    // identity syllables vanish
    CHECK(reduce(edge, Word{{{0, 0}, {1, 0}}}).syllables.empty());
}

TEST_CASE("reduce validates syllables") {
    const auto p = edge_z2_z2();
    CHECK_THROWS_AS(reduce(p, Word{{{5, 0}}}), Error);
    CHECK_THROWS_AS(reduce(p, Word{{{0, 7}}}), Error);
    try {
        reduce(p, Word{{{5, 0}}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownVertex);
    }
    try {
        reduce(p, Word{{{0, 7}}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadElementIndex);
    }
}

TEST_CASE("canonical order puts the smallest movable vertex first") {
    const auto edge = edge_z2_z2();
    // (y, x) with x at u < v: both orders are legal, the canonical one is (x, y)
    CHECK(make(edge, {{1, 1}, {0, 1}}).syllables() == Syllables{{0, 1}, {1, 1}});
    CHECK(make(edge, {{0, 1}, {1, 1}}).syllables() == Syllables{{0, 1}, {1, 1}});
}

TEST_CASE("over a free product the canonical form is just the reduced word") {
    const auto p = testutil::z4_s3();
    const Syllables w{{1, 2}, {0, 1}, {1, 3}, {0, 2}};
    CHECK(make(p, w).syllables() == reduce(p, Word{w}).syllables);
}

TEST_CASE("multiply and invert satisfy the group laws on examples") {
    const auto p = testutil::z4_s3();
    const auto empty = make(p, {});
    const auto w = make(p, {{0, 1}, {1, 1}});

    CHECK(multiply(p, w, empty) == w);
    CHECK(multiply(p, empty, w) == w);
    CHECK(multiply(p, w, invert(p, w)) == empty);
    CHECK(multiply(p, invert(p, w), w) == empty);

    // (a)(a) combines to (a2)
    const auto a = make(p, {{0, 1}});
    CHECK(multiply(p, a, a).syllables() == Syllables{{0, 2}});

    CHECK(invert(p, empty) == empty);
    CHECK(invert(p, a).syllables() == Syllables{{0, 3}});
    // (a, b1)^-1 = (b1^-1, a3); b1 is an involution in S3
    CHECK(invert(p, make(p, {{0, 1}, {1, 1}})).syllables() == Syllables{{1, 1}, {0, 3}});
}

TEST_CASE("words from different presentations do not mix") {
    const auto p = testutil::z4_s3();
    const auto q = testutil::z4_s3(); // equal data, different presentation
    const auto w = make(p, {{0, 1}});
    const auto x = make(q, {{0, 1}});
    CHECK_THROWS_AS(multiply(p, w, x), Error);
    try {
        multiply(p, w, x);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PresentationMismatch);
    }
}

TEST_CASE("syllable_count and s_length") {
    // Z4 with the 4-cycle genset {a, a3}: a2 sits at distance 2
    const auto cycle4 = GraphProductPresentation(build_graph({"u"}, {}),
                                                 {{"u", FiniteGroup::cyclic(4)}},
                                                 {{"u", {1, 3}}});
    const auto empty = make(cycle4, {});
    CHECK(syllable_count(empty) == 0);
    CHECK(s_length(cycle4, empty) == 0);

    const auto a2 = make(cycle4, {{0, 2}});
    CHECK(syllable_count(a2) == 1);
    CHECK(s_length(cycle4, a2) == 2);

    // full genset: the complete graph puts everything at distance 1
    const auto complete4 = GraphProductPresentation(build_graph({"u"}, {}),
                                                    {{"u", FiniteGroup::cyclic(4)}});
    CHECK(s_length(complete4, make(complete4, {{0, 2}})) == 1);
}

TEST_CASE("word text round-trips, empty string is the identity") {
    const auto p = testutil::z4_s3();
    CHECK(parse_word(p, "").syllables.empty());
    CHECK(parse_word(p, "  ").syllables.empty());

    const auto w = parse_word(p, "u:a;v:b1;u:a2");
    CHECK(w.syllables == Syllables{{0, 1}, {1, 1}, {0, 2}});
    CHECK(format_word(p, w) == "u:a;v:b1;u:a2");
    CHECK(format_word(p, make(p, w.syllables)) == "u:a;v:b1;u:a2");
    CHECK(format_word(p, make(p, {})) == "");

    CHECK_THROWS_AS(parse_word(p, "nope"), Error);
    CHECK_THROWS_AS(parse_word(p, "w:a"), Error);
    CHECK_THROWS_AS(parse_word(p, "u:zz"), Error);
    try {
        parse_word(p, "u:zz");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadElementIndex);
    }
}

TEST_CASE("canonical form agrees with the rewriting-closure oracle (small exhaustive)") {
    for (const auto& p :
         {testutil::z4_s3(), testutil::square_racg(), testutil::triangle_z2()}) {
        for (int len = 0; len <= 3; ++len) {
            testutil::for_each_word(p, len, /*with_identity=*/true, [&](const Syllables& w) {
                const auto oracle = testutil::closure_canonical(p, w);
                CHECK(oracle.one_shuffle_class);
                CHECK(make(p, w).syllables() == oracle.canonical);
                CHECK(reduce(p, Word{w}).syllables.size() == oracle.canonical.size());
            });
        }
    }
}

TEST_CASE("canonical form agrees with the oracle on random words") {
    std::mt19937 rng(42);
    for (const auto& p :
         {testutil::z4_s3(), testutil::square_racg(), testutil::triangle_z2()}) {
        std::uniform_int_distribution<int> len(0, 6);
        for (int trial = 0; trial < 300; ++trial) {
            const auto w = testutil::random_word(p, rng, len(rng), /*with_identity=*/true);
            const auto oracle = testutil::closure_canonical(p, w);
            CHECK(oracle.one_shuffle_class);
            CHECK(make(p, w).syllables() == oracle.canonical);
        }
    }
}

TEST_CASE("shuffle and trivial-insertion invariance") {
    std::mt19937 rng(43);
    for (const auto& p :
         {testutil::z4_s3(), testutil::square_racg(), testutil::triangle_z2()}) {
        std::uniform_int_distribution<int> len(0, 6);
        for (int trial = 0; trial < 300; ++trial) {
            const auto raw = testutil::random_word(p, rng, len(rng), false);
            const auto reduced = reduce(p, Word{raw}).syllables;
            const auto expected = make(p, raw);

            const auto shuffled = testutil::random_shuffle(p, rng, reduced, 8);
            CHECK(make(p, shuffled) == expected);
            // rule (iii) alone preserves length
            CHECK(shuffled.size() == reduced.size());

            const auto padded = testutil::random_trivial_insertions(p, rng, raw, 3);
            CHECK(make(p, padded) == expected);
        }
    }
}

TEST_CASE("reduce never increases the syllable count") {
    std::mt19937 rng(44);
    const auto p = testutil::square_racg();
    std::uniform_int_distribution<int> len(0, 8);
    for (int trial = 0; trial < 500; ++trial) {
        const auto w = testutil::random_word(p, rng, len(rng), true);
        CHECK(reduce(p, Word{w}).syllables.size() <= w.size());
    }
}

TEST_CASE("group axioms hold on random canonical-word triples") {
    std::mt19937 rng(45);
    for (const auto& p :
         {testutil::z4_s3(), testutil::square_racg(), testutil::triangle_z2()}) {
        const auto empty = make(p, {});
        std::uniform_int_distribution<int> len(0, 6);
        for (int trial = 0; trial < 500; ++trial) {
            const auto w1 = make(p, testutil::random_word(p, rng, len(rng), false));
            const auto w2 = make(p, testutil::random_word(p, rng, len(rng), false));
            const auto w3 = make(p, testutil::random_word(p, rng, len(rng), false));
            CHECK(multiply(p, multiply(p, w1, w2), w3) ==
                  multiply(p, w1, multiply(p, w2, w3)));
            CHECK(multiply(p, w1, invert(p, w1)) == empty);
            CHECK(multiply(p, invert(p, w1), w1) == empty);
        }
    }
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937 rng(46);
    for (const auto& p : {testutil::z4_s3(), testutil::square_racg()}) {
        std::uniform_int_distribution<int> len(0, 6);
        for (int trial = 0; trial < 200; ++trial) {
            const auto w = make(p, testutil::random_word(p, rng, len(rng), true));
            CHECK(make(p, w.syllables()) == w);
        }
    }
}

TEST_CASE("canonical words never hold identity or consecutive same-vertex syllables") {
    std::mt19937 rng(47);
    const auto p = testutil::square_racg();
    std::uniform_int_distribution<int> len(0, 8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = make(p, testutil::random_word(p, rng, len(rng), true));
        for (std::size_t i = 0; i < w.size(); ++i) {
            CHECK(w.syllables()[i].element != p.group(w.syllables()[i].vertex).identity());
            if (i + 1 < w.size())
                CHECK(w.syllables()[i].vertex != w.syllables()[i + 1].vertex);
        }
    }
}
