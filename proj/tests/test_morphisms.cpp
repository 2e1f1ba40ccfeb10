#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sadic/errors.hpp"
#include "sadic/morphism.hpp"
#include "sadic/word.hpp"

#include <random>

using namespace sadic;
using namespace sadic::testing;

TEST_CASE("alphabet construction and lookup") {
    Alphabet ab = Alphabet::from_chars("ab");
    CHECK(ab.size() == 2);
    CHECK(ab.letter(0) == "a");
    CHECK(ab.index_of("b") == 1);
    CHECK(ab.index_of("z") == -1);
    CHECK(ab.single_char());

    Alphabet named({"a1", "a2", "a3"});
    CHECK_FALSE(named.single_char());
    CHECK(named.index_of("a3") == 2);

    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({""}), std::invalid_argument);
}

TEST_CASE("word parsing and rendering round trip") {
    Alphabet ab = Alphabet::from_chars("ab");
    Word w = Word::parse(ab, "aba");
    CHECK(w.length() == 3);
    CHECK(w.to_string() == "aba");
    CHECK_THROWS_AS(Word::parse(ab, "abc"), std::invalid_argument);

    Alphabet named({"a1", "a2"});
    Word v = Word::parse(named, "a1 a2 a1");
    CHECK(v.length() == 3);
    CHECK(v.to_string() == "a1 a2 a1");

    CHECK(Word::empty(ab).length() == 0);
}

TEST_CASE("count_letter on direct examples") {
    Alphabet ab = Alphabet::from_chars("ab");
    Word aba = word(ab, "aba");
    CHECK(count_letter(aba, "a") == 2);
    CHECK(count_letter(aba, "b") == 1);
    CHECK(count_letter(Word::empty(ab), "a") == 0);
    CHECK_THROWS_AS(count_letter(aba, "z"), std::invalid_argument);
}

TEST_CASE("letter counts add up to the length") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        Alphabet alpha = random_alphabet(rng, 5);
        Word w = random_word(rng, alpha, 30);
        int64_t total = 0;
        for (int i = 0; i < alpha.size(); ++i) total += count_letter(w, i);
        CHECK(total == w.length());
    }
}

TEST_CASE("count_occurrences counts overlaps") {
    Alphabet ab = Alphabet::from_chars("ab");
    CHECK(count_occurrences(word(ab, "aaaa"), word(ab, "aa")) == 3);
    CHECK(count_occurrences(word(ab, "abab"), word(ab, "ab")) == 2);
    CHECK(count_occurrences(word(ab, "ab"), word(ab, "aba")) == 0);
    CHECK_THROWS_AS(count_occurrences(word(ab, "ab"), Word::empty(ab)), std::invalid_argument);
}

TEST_CASE("occurrence count is bounded by the window count") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        Alphabet alpha = random_alphabet(rng, 3);
        Word w = random_word(rng, alpha, 40);
        Word u = random_word(rng, alpha, 5);
        if (u.is_empty()) continue;
        int64_t occ = count_occurrences(w, u);
        if (w.length() >= u.length())
            CHECK(occ <= w.length() - u.length() + 1);
        else
            CHECK(occ == 0);
    }
}

TEST_CASE("apply concatenates letter images") {
    Morphism fib = fib_morphism();
    Word w = word(fib.domain(), "ab");
    CHECK(apply(fib, w).to_string() == "aba");

    Morphism id = Morphism::identity(Alphabet::from_chars("ab"));
    Word any = word(id.domain(), "abba");
    CHECK(apply(id, any) == any);

    CHECK(apply(fib, Word::empty(fib.domain())).is_empty());
}

TEST_CASE("composition expands images through the outer morphism") {
    Morphism fib = fib_morphism();
    Morphism fib2 = compose(fib, fib);
    CHECK(fib2.image("a").to_string() == "aba");
    CHECK(fib2.image("b").to_string() == "ab");

    Morphism id = Morphism::identity(fib.domain());
    CHECK(compose(fib, id) == fib);
    CHECK(compose(id, fib) == fib);

    Morphism tm = tm_morphism();
    Alphabet other = Alphabet::from_chars("xyz");
    CHECK_THROWS_AS(compose(fib, Morphism::identity(other)), std::invalid_argument);
    CHECK_NOTHROW(compose(fib, tm));
}

TEST_CASE("incidence matrices of the standard substitutions") {
    Morphism fib = fib_morphism();
    const IntMatrix& mf = fib.incidence_matrix();
    CHECK(mf.rows() == 2);
    CHECK(mf.cols() == 2);
    CHECK(mf.at(0, 0) == 1);
    CHECK(mf.at(0, 1) == 1);
    CHECK(mf.at(1, 0) == 1);
    CHECK(mf.at(1, 1) == 0);

    Morphism tm = tm_morphism();
    const IntMatrix& mt = tm.incidence_matrix();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(mt.at(i, j) == 1);

    Morphism id = Morphism::identity(Alphabet::from_chars("ab"));
    CHECK(id.incidence_matrix() == IntMatrix::identity(2));
}

TEST_CASE("incidence of a composite equals the matrix product") {
    // The incidence matrix is counted from images, the product is matrix
    // algebra; the two routes must agree exactly.
    std::mt19937 rng(43);
    for (int trial = 0; trial < 1000; ++trial) {
        Alphabet a = random_alphabet(rng, 5);
        Alphabet b = random_alphabet(rng, 5);
        Alphabet c = random_alphabet(rng, 5);
        Morphism outer = random_morphism(rng, b, a, 6);
        Morphism inner = random_morphism(rng, c, b, 6);
        Morphism comp = compose(outer, inner);
        CHECK(comp.incidence_matrix() ==
              outer.incidence_matrix().multiply(inner.incidence_matrix()));
    }
}

TEST_CASE("apply of a composite equals applying twice") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        Alphabet a = random_alphabet(rng, 4);
        Alphabet b = random_alphabet(rng, 4);
        Alphabet c = random_alphabet(rng, 4);
        Morphism outer = random_morphism(rng, b, a, 4);
        Morphism inner = random_morphism(rng, c, b, 4);
        Word w = random_word(rng, c, 12);
        CHECK(apply(compose(outer, inner), w) == apply(outer, apply(inner, w)));
    }
}

TEST_CASE("column sums equal image lengths") {
    std::mt19937 rng(45);
    for (int trial = 0; trial < 200; ++trial) {
        Alphabet a = random_alphabet(rng, 5);
        Alphabet b = random_alphabet(rng, 5);
        Morphism sigma = random_morphism(rng, a, b, 6);
        const IntMatrix& m = sigma.incidence_matrix();
        for (int j = 0; j < a.size(); ++j)
            CHECK(m.column_sum(j) == sigma.image(j).length());
    }
}

TEST_CASE("image length identity under apply") {
    std::mt19937 rng(46);
    for (int trial = 0; trial < 100; ++trial) {
        Alphabet a = random_alphabet(rng, 4);
        Alphabet b = random_alphabet(rng, 4);
        Morphism sigma = random_morphism(rng, a, b, 5);
        Word w = random_word(rng, a, 20);
        int64_t expected = 0;
        for (int x = 0; x < a.size(); ++x)
            expected += count_letter(w, x) * sigma.image(x).length();
        CHECK(apply(sigma, w).length() == expected);
    }
}

TEST_CASE("erasing morphisms are representable and flagged") {
    Alphabet ab = Alphabet::from_chars("ab");
    Morphism erasing(ab, ab, {word(ab, "ab"), Word::empty(ab)});
    CHECK_FALSE(erasing.non_erasing());
    CHECK(erasing.incidence_matrix().column_sum(1) == 0);

    Morphism fib = fib_morphism();
    CHECK(fib.non_erasing());
}

TEST_CASE("morphism text format parses and rejects junk") {
    Morphism fib = parse_morphism("a -> ab\nb -> a");
    CHECK(fib.image("a").to_string() == "ab");
    CHECK(fib.domain().letters() == std::vector<std::string>{"a", "b"});

    // Comments and blank lines are fine; an empty image means erasing.
    Morphism with_comment = parse_morphism("# rules\na -> ab\n\nb -> ");
    CHECK_FALSE(with_comment.non_erasing());

    CHECK_THROWS_AS(parse_morphism("a = ab"), ConfigError);
    CHECK_THROWS_AS(parse_morphism(""), ConfigError);
    CHECK_THROWS_AS(parse_morphism("a -> ab\na -> b"), ConfigError);

    // Explicit codomain restricts the image letters.
    CHECK_THROWS_AS(parse_morphism("a -> ax", Alphabet::from_chars("ab")), ConfigError);

    // Round trip through to_rules.
    Morphism again = parse_morphism(fib.to_rules());
    CHECK(again == fib);
}

TEST_CASE("determinants of small integer matrices are exact") {
    IntMatrix fib = fib_morphism().incidence_matrix();
    CHECK(fib.determinant() == -1);
    IntMatrix tm = tm_morphism().incidence_matrix();
    CHECK(tm.determinant() == 0);
    CHECK(IntMatrix::identity(4).determinant() == 1);

    // Determinant is multiplicative; check against products of random
    // matrices with entries 0..3.
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> entry(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a(3, 3), b(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a.at(i, j) = entry(rng);
                b.at(i, j) = entry(rng);
            }
        CHECK(a.multiply(b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("telescoped incidence entries exceed 64-bit range without overflow") {
    IntMatrix fib = fib_morphism().incidence_matrix();
    IntMatrix deep = fib.pow(120);
    // top-left entry of M^120, larger than 2^63; exactness is the point.
    CHECK(deep.at(0, 0) == Int("8670007398507948658051921"));
}
