#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sadic/directive.hpp"
#include "sadic/errors.hpp"

#include <random>

using namespace sadic;
using namespace sadic::testing;

TEST_CASE("construction enforces chaining and non-erasing") {
    Morphism fib = fib_morphism();
    CHECK_NOTHROW(DirectiveSequence::periodic({fib}, 10));
    CHECK_NOTHROW(DirectiveSequence::explicit_list({fib, fib, fib}));

    Alphabet ab = Alphabet::from_chars("ab");
    Morphism erasing(ab, ab, {Word::parse(ab, "ab"), Word::empty(ab)});
    CHECK_THROWS_AS(DirectiveSequence::periodic({erasing}, 10), std::invalid_argument);

    // Broken chain: codomain of level 1 differs from domain of level 0.
    Morphism other = Morphism::identity(Alphabet::from_chars("xy"));
    CHECK_THROWS_AS(DirectiveSequence::explicit_list({fib, other}), std::invalid_argument);

    CHECK_THROWS_AS(DirectiveSequence::periodic({fib}, 0), std::invalid_argument);
}

TEST_CASE("level alphabets can vary in size") {
    // 3-letter level alphabet feeding a 2-letter one.
    Morphism merge = parse_morphism("a -> a\nb -> b\nc -> ab", Alphabet::from_chars("ab"));
    Morphism widen = parse_morphism("a -> abc\nb -> c\nc -> ab", Alphabet::from_chars("abc"));
    // merge: {a,b,c} -> {a,b}*, widen: {a,b,c} -> {a,b,c}*
    DirectiveSequence seq = DirectiveSequence::with_head({merge}, {widen}, 6);
    CHECK(seq.alphabet(0).size() == 2);
    CHECK(seq.alphabet(1).size() == 3);
    CHECK(seq.alphabet(5).size() == 3);
    CHECK_NOTHROW(seq.telescoped_incidence(0, 6));
}

TEST_CASE("telescope composes the right range") {
    DirectiveSequence fib = fib_seq(10);
    Morphism t2 = fib.telescope(0, 2);
    CHECK(t2.image("a").to_string() == "aba");
    CHECK(t2.image("b").to_string() == "ab");

    Morphism t0 = fib.telescope(4, 4);
    CHECK(t0.is_identity());

    CHECK_THROWS_AS(fib.telescope(3, 2), std::invalid_argument);

    IntMatrix cube = fib.telescoped_incidence(0, 3);
    CHECK(cube.at(0, 0) == 3);
    CHECK(cube.at(0, 1) == 2);
    CHECK(cube.at(1, 0) == 2);
    CHECK(cube.at(1, 1) == 1);
    CHECK(cube == fib.telescope(0, 3).incidence_matrix());
}

TEST_CASE("telescoping is associative over split points") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        // Random explicit chain of depth 4 with varying alphabets.
        Alphabet a0 = random_alphabet(rng, 4);
        std::vector<Morphism> levels;
        Alphabet prev = a0;
        for (int n = 0; n < 4; ++n) {
            Alphabet next = random_alphabet(rng, 4);
            levels.push_back(random_morphism(rng, next, prev, 3));
            prev = next;
        }
        DirectiveSequence seq = DirectiveSequence::explicit_list(levels);
        for (int m = 0; m <= 4; ++m)
            for (int n = m; n <= 4; ++n)
                for (int k = n; k <= 4; ++k)
                    CHECK(seq.telescope(m, k) ==
                          compose(seq.telescope(m, n), seq.telescope(n, k)));
    }
}

TEST_CASE("minimal image lengths from column sums") {
    DirectiveSequence fib = fib_seq(20);
    CHECK(min_image_length(fib, 0) == 1);
    // Direct expansion gives |sigma^5(a)| = 13, |sigma^5(b)| = 8.
    CHECK(min_image_length(fib, 5) == 8);
    CHECK(min_image_length(fib, 6) == 13);

    DirectiveSequence tm = tm_seq(20);
    CHECK(min_image_length(tm, 4) == 16);
}

TEST_CASE("minimal image length agrees with explicit expansion at small depth") {
    DirectiveSequence seqs[] = {fib_seq(12), tm_seq(12), preset_sequence("chacon", 12)};
    for (const auto& seq : seqs) {
        for (int n = 0; n <= 10; ++n) {
            Int by_matrix = min_image_length(seq, n);
            Morphism tele = seq.telescope(0, n);
            Int by_words = tele.image(0).length();
            for (int j = 1; j < tele.domain().size(); ++j) {
                Int len(static_cast<long>(tele.image(j).length()));
                if (len < by_words) by_words = len;
            }
            CHECK(by_matrix == by_words);
        }
    }
}

TEST_CASE("beta is nondecreasing for non-erasing sequences") {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        Alphabet alpha = random_alphabet(rng, 4);
        std::vector<Morphism> cycle{random_morphism(rng, alpha, alpha, 3)};
        DirectiveSequence seq = DirectiveSequence::periodic(cycle, 12);
        Int prev = min_image_length(seq, 0);
        for (int n = 1; n <= 12; ++n) {
            Int cur = min_image_length(seq, n);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("growth verdict: certified for primitive periodic sequences") {
    GrowthVerdict fib = check_everywhere_growing(fib_seq(20), 20, 100);
    CHECK(fib.status == GrowthStatus::CertifiedGrowing);
    CHECK(fib.beta_values.size() == 21);
    CHECK(fib.beta_values[0] == 1);
    CHECK(fib.beta_values[5] == 8);

    GrowthVerdict tm = check_everywhere_growing(tm_seq(20), 20, 100);
    CHECK(tm.status == GrowthStatus::CertifiedGrowing);
}

TEST_CASE("growth verdict: identity is witnessed as not growing") {
    DirectiveSequence id = preset_sequence("identity", 20);
    GrowthVerdict v = check_everywhere_growing(id, 20, 100);
    CHECK(v.status == GrowthStatus::NotGrowingWitness);
    for (const auto& b : v.beta_values) CHECK(b == 1);
}

TEST_CASE("growth verdict: a pinned letter in a periodic mix is witnessed") {
    // a grows, b never does.
    Morphism pin = parse_morphism("a -> ab\nb -> b");
    DirectiveSequence seq = DirectiveSequence::periodic({pin}, 20);
    GrowthVerdict v = check_everywhere_growing(seq, 20, 100);
    CHECK(v.status == GrowthStatus::NotGrowingWitness);
    CHECK(v.witness.find("'b'") != std::string::npos);
}

TEST_CASE("growth verdict: explicit lists max out at heuristic") {
    std::vector<Morphism> levels(15, fib_morphism());
    DirectiveSequence seq = DirectiveSequence::explicit_list(levels);
    GrowthVerdict strong = check_everywhere_growing(seq, 15, 100);
    CHECK(strong.status == GrowthStatus::HeuristicallyGrowing);

    // Same sequence, unreachable threshold: no verdict.
    GrowthVerdict weak = check_everywhere_growing(seq, 15, Int("100000000"));
    CHECK(weak.status == GrowthStatus::Unknown);

    // The pinned-letter mix as an explicit list stays at beta == 1:
    // heuristic or unknown depending on the threshold, never a witness.
    std::vector<Morphism> mix(10, parse_morphism("a -> ab\nb -> b"));
    DirectiveSequence mix_seq = DirectiveSequence::explicit_list(mix);
    CHECK(check_everywhere_growing(mix_seq, 10, 2).status == GrowthStatus::Unknown);
    CHECK(check_everywhere_growing(mix_seq, 10, 1).status ==
          GrowthStatus::HeuristicallyGrowing);
}

TEST_CASE("invertibility reports exact determinants per level") {
    auto fib = check_invertible_levels(fib_seq(10), 10);
    REQUIRE(fib.size() == 10);
    for (const auto& row : fib) {
        CHECK(row.square);
        CHECK(row.determinant == -1);
        CHECK(row.invertible);
    }

    auto tm = check_invertible_levels(tm_seq(10), 10);
    for (const auto& row : tm) {
        CHECK(row.determinant == 0);
        CHECK_FALSE(row.invertible);
    }

    auto id = check_invertible_levels(preset_sequence("identity", 5), 5);
    for (const auto& row : id) {
        CHECK(row.determinant == 1);
        CHECK(row.invertible);
    }

    // Non-square levels are reported, not errors.
    auto merged = check_invertible_levels(preset_sequence("merge-two-copies", 5), 5);
    CHECK_FALSE(merged[0].square);
    CHECK_FALSE(merged[0].invertible);
    CHECK(merged[0].reason == "non-square");
    CHECK(merged[1].square);
}

TEST_CASE("prepend prolongates and preserves chaining") {
    DirectiveSequence fib = fib_seq(5);
    Morphism swap = parse_morphism("a -> b\nb -> a", Alphabet::from_chars("ab"));
    DirectiveSequence longer = fib.prepend(swap);
    CHECK(longer.truncation_depth() == 6);
    CHECK(longer.morphism(0) == swap);
    CHECK(longer.morphism(1) == fib.morphism(0));

    Alphabet ab = Alphabet::from_chars("ab");
    Morphism erasing(ab, ab, {Word::parse(ab, "a"), Word::empty(ab)});
    CHECK_THROWS_AS(fib.prepend(erasing), std::invalid_argument);
}

TEST_CASE("periodic sequences extend past their truncation depth") {
    DirectiveSequence fib = fib_seq(5);
    CHECK_NOTHROW(fib.telescoped_incidence(0, 40));
    DirectiveSequence expl = DirectiveSequence::explicit_list({fib_morphism(), fib_morphism()});
    CHECK_THROWS_AS(expl.telescoped_incidence(0, 3), std::invalid_argument);
}
