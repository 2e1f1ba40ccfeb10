#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sadic/cones.hpp"
#include "sadic/detail/smalllinalg.hpp"
#include "sadic/errors.hpp"
#include "sadic/oracle.hpp"

#include <cmath>

using namespace sadic;
using namespace sadic::testing;

TEST_CASE("expansion matches hand-expanded prefixes") {
    Expander fib(fib_seq(30));
    CHECK(fib.expand(0, "a").to_string() == "a");
    CHECK(fib.expand(1, "a").to_string() == "ab");
    CHECK(fib.expand(4, "a").to_string() == "abaababa");

    Expander tm(tm_seq(30));
    CHECK(tm.expand(3, "a").to_string() == "abbabaab");
    CHECK(tm.expand(3, "b").to_string() == "baababba");
}

TEST_CASE("expansion length equals the telescoped column sum") {
    for (const char* name : {"fibonacci", "thue-morse", "tribonacci", "chacon"}) {
        DirectiveSequence seq = preset_sequence(name, 20);
        Expander ex(seq);
        for (int n = 0; n <= 12; ++n) {
            const Alphabet& alpha = seq.alphabet(n);
            for (int a = 0; a < alpha.size(); ++a) {
                Word w = ex.expand(n, a);
                CHECK(Int(static_cast<long>(w.length())) == ex.predicted_length(n, a));
            }
        }
    }
}

TEST_CASE("expansion satisfies the block recursion") {
    for (const char* name : {"fibonacci", "tribonacci", "merge-two-copies"}) {
        DirectiveSequence seq = preset_sequence(name, 16);
        Expander ex(seq);
        for (int n = 0; n <= 8; ++n) {
            const Alphabet& top = seq.alphabet(n + 1);
            for (int a = 0; a < top.size(); ++a) {
                Word direct = ex.expand(n + 1, a);
                Word glued = Word::empty(seq.alphabet(0));
                for (int32_t b : seq.morphism(n).image(a).symbols())
                    glued = glued.concat(ex.expand(n, b));
                CHECK(direct == glued);
            }
        }
    }
}

TEST_CASE("memoized and streaming expansion agree") {
    DirectiveSequence tm = tm_seq(20);
    Word memoized = Expander(tm, {1 << 20, true}).expand(12, "a");
    Word streamed = Expander(tm, {1 << 20, false}).expand(12, "a");
    CHECK(memoized == streamed);
}

TEST_CASE("budget refusal reports the predicted length") {
    DirectiveSequence tm = tm_seq(40);
    Expander small(tm, {1000, true});
    CHECK_NOTHROW(small.expand(9, "a"));  // 512 symbols
    try {
        small.expand(11, "a"); // 2048 symbols
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError& e) {
        CHECK(e.predicted_symbols() == "2048");
    }
}

TEST_CASE("empirical frequency on tiny samples") {
    Alphabet ab = Alphabet::from_chars("ab");
    CHECK(empirical_frequency(word(ab, "abab"), word(ab, "ab")) == Rat(2, 3));
    CHECK(empirical_frequency(word(ab, "aaaa"), word(ab, "a")) == 1);
    CHECK_THROWS_AS(empirical_frequency(word(ab, "a"), word(ab, "ab")), std::invalid_argument);
    CHECK_THROWS_AS(empirical_frequency(word(ab, "ab"), Word::empty(ab)), std::invalid_argument);
}

TEST_CASE("letter frequencies approach the dominant eigenvector") {
    DirectiveSequence fib = fib_seq(30);
    Word sample = Expander(fib, {1 << 21, false}).expand(25, "a");
    Rat freq_a = empirical_frequency(sample, word(fib.alphabet(0), "a"));
    const double phi_inv = (std::sqrt(5.0) - 1) / 2;
    CHECK(std::fabs(freq_a.get_d() - phi_inv) < 1e-5);

    // The same convergence for every letter, against the power-iteration
    // vector, on a sequence with beta >= 1e5.
    auto perron = perron_frequencies(fib.morphism(0).incidence_matrix());
    const Alphabet& alpha = fib.alphabet(0);
    double dist = 0;
    for (int i = 0; i < alpha.size(); ++i) {
        Rat f = empirical_frequency(sample, Word(alpha, {i}));
        dist += std::fabs(f.get_d() - perron[static_cast<size_t>(i)]);
    }
    CHECK(min_image_length(fib, 25) >= 100000);
    CHECK(dist < 1e-4);
}

TEST_CASE("letter frequencies land inside the level-0 cone approximation") {
    for (const char* name : {"fibonacci", "thue-morse", "chacon"}) {
        DirectiveSequence seq = preset_sequence(name, 30);
        Word sample = Expander(seq, {8'000'000, false}).expand(12, "a");
        const Alphabet& alpha = seq.alphabet(0);
        RatVec freq;
        for (int i = 0; i < alpha.size(); ++i)
            freq.push_back(empirical_frequency(sample, Word(alpha, {i})));
        ConeApprox approx = cone_generators(seq, 0, 12);
        std::vector<std::vector<double>> cols;
        for (const auto& g : approx.generators) cols.push_back(to_double_vec(g));
        Rat mass = vec_sum(freq);
        for (auto& f : freq) f /= mass;
        auto fit = detail::nnls(detail::DMat::from_columns(cols), to_double_vec(freq));
        CHECK(fit.residual < 1e-6);
    }
}

TEST_CASE("power iteration on the classic matrices") {
    auto fib = perron_frequencies(fib_morphism().incidence_matrix(), 20000, 1e-13);
    const double phi_inv = (std::sqrt(5.0) - 1) / 2;
    CHECK(std::fabs(fib[0] - phi_inv) < 1e-9);
    CHECK(std::fabs(fib[1] - (1 - phi_inv)) < 1e-9);

    auto tm = perron_frequencies(tm_morphism().incidence_matrix());
    CHECK(tm[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tm[1] == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(perron_frequencies(IntMatrix::identity(3)), NotPrimitiveError);
    CHECK_THROWS_AS(perron_frequencies(fib_morphism().incidence_matrix(), 2, 1e-15),
                    ConvergenceError);
}
