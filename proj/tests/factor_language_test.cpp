#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <string>

#include "rfs/errors.hpp"
#include "rfs/factor_language.hpp"
#include "rfs/fib.hpp"
#include "rfs/generations.hpp"
#include "rfs/substitution.hpp"

using namespace rfs;

// counts of F(A, m) for m = 1..16, frozen from an independent brute-force
// enumeration (direct windows over fully expanded generations)
constexpr std::array<std::size_t, 16> kDirectCounts = {2,   4,   7,   12,  20,  29,  41,  58,
                                                       81,  115, 156, 204, 266, 334, 424, 540};

TEST_CASE("factors of small sets") {
    CHECK(factors(WordSet::of({"baa"}), 2) == WordSet::of({"aa", "ba"}));
    CHECK(factors(WordSet::of({"abbaabaa", "babaabaa"}), 2) ==
          WordSet::of({"aa", "ab", "ba", "bb"}));
    WordSet w = WordSet::of({"abba"});
    CHECK(factors(w, 4) == w);
    CHECK_THROWS_AS(factors(WordSet::of({"ab"}), 3), range_error);
    CHECK_THROWS_AS(factors(WordSet::of({"ab"}), 0), range_error);
}

TEST_CASE("direct window capacity") {
    CHECK(direct_window_capacity() == 16);  // f_8 - f_5 with the default cap
    CHECK_THROWS_AS(exact_factor_set(17), capacity_error);
    try {
        exact_factor_set(17);
    } catch (const capacity_error& e) {
        CHECK(std::string(e.what()).find("pipeline") != std::string::npos);
    }
}

TEST_CASE("exact factor sets at small lengths") {
    FactorSet f2 = exact_factor_set(2);
    CHECK(f2.members == WordSet::of({"aa", "ab", "ba", "bb"}));
    CHECK(f2.method == FactorMethod::direct_window);

    FactorSet f3 = exact_factor_set(3);
    CHECK(f3.members ==
          WordSet::of({"aaa", "aab", "aba", "abb", "baa", "bab", "bba"}));
    CHECK(f3.members.size() == 7);
    CHECK(!f3.members.contains(Word::parse("bbb")));
}

TEST_CASE("direct counts match the frozen oracle") {
    for (std::size_t m = 1; m <= kDirectCounts.size(); ++m)
        CHECK(exact_factor_set(m).members.size() == kDirectCounts[m - 1]);
}

TEST_CASE("window stabilization: generation choice does not matter") {
    // length 6 windows agree between A_4 and A_5
    WordSet via_a4 = factors(build(4).A, 6);
    WordSet via_a5 = factors(build(5).A, 6);
    CHECK(via_a4 == via_a5);
    CHECK(exact_factor_set(6).members == via_a4);
    auto rep = verify_window_stabilization(3);
    CHECK(rep.pass);
}

TEST_CASE("pipeline equals direct everywhere both run") {
    FactorPipeline pipeline;
    for (std::size_t m = 1; m <= 16; ++m) {
        FactorSet via_pipe = pipeline.compute(m);
        CHECK(via_pipe.method == FactorMethod::inflation_pipeline);
        CHECK(via_pipe.members == exact_factor_set(m).members);
    }
}

TEST_CASE("pipeline stage facts at length 8") {
    FactorPipeline pipeline;
    FactorSet f8 = pipeline.compute(8);
    CHECK(f8.members.size() == kDirectCounts[7]);
    CHECK(f8.members == exact_factor_set(8).members);
    // stage carriers stay inside [f_2n+1, f_2n+4]
    for (const auto& [n, summary] : pipeline.carriers()) {
        CHECK(summary.min_length >= fib(2 * n) + 1);
        CHECK(summary.max_length <= fib(2 * n) + 4);
    }
    // C_2 has exactly 9 carriers
    REQUIRE(pipeline.carriers().count(2) == 1);
    CHECK(pipeline.carriers().at(2).count == 9);
}

TEST_CASE("pipeline reaches length 55 with the frozen counts") {
    FactorPipeline pipeline;
    CHECK(pipeline.compute(21).members.size() == 1848);
    CHECK(pipeline.compute(22).members.size() == 2348);
    FactorSet f55 = pipeline.compute(55);
    CHECK(f55.members.size() == 1'752'064);
    REQUIRE(pipeline.carriers().count(5) == 1);
    CHECK(pipeline.carriers().at(5).count == 1'004'032);
    CHECK(pipeline.carriers().at(5).min_length == 56);
    CHECK(pipeline.carriers().at(5).max_length == 59);

    // downward closure: short factors fall out of longer stage sets
    CHECK(pipeline.compute(54).members == factors(f55.members, 54));
    CHECK(factors(pipeline.compute(23).members, 21) == pipeline.compute(21).members);
    for (std::size_t k = 1; k <= 16; ++k)
        CHECK(factors(pipeline.compute(21).members, k) == exact_factor_set(k).members);

    // bbb never occurs
    Word bbb = Word::parse("bbb");
    for (const Word& w : pipeline.compute(22).members) CHECK(!w.contains(bbb));

    // submultiplicative counts (one wide extraction for length 34)
    auto count = [&](std::size_t m) {
        return static_cast<unsigned __int128>(pipeline.compute(m).members.size());
    };
    for (std::size_t m1 = 1; m1 <= 22; ++m1) {
        for (std::size_t m2 = m1; m1 + m2 <= 23; ++m2)
            CHECK(count(m1 + m2) <= count(m1) * count(m2));
    }
    CHECK(count(34) <= count(13) * count(21));
    CHECK(count(55) <= count(21) * count(34));
}

TEST_CASE("pipeline capacity abort names the reached stage") {
    Limits tight;
    tight.max_set_size = 1000;
    FactorPipeline pipeline(tight);
    CHECK(pipeline.compute(8).members.size() == 58);  // stages 2..3 fit
    try {
        pipeline.compute(21);
        FAIL("expected capacity_error");
    } catch (const capacity_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("stage n=3") != std::string::npos);
        CHECK(msg.find("length 8") != std::string::npos);
    }
}

TEST_CASE("A and B factor sets coincide") {
    auto rep = verify_AB_factor_equality(3);
    CHECK(rep.pass);
    CHECK(factors(build(3).A, 2) == factors(build(3).B, 2));
    CHECK(factors(build(4).A, 7) == factors(build(4).B, 7));
    CHECK(exact_factor_set(5).members == factors(build(5).B, 5));
}

TEST_CASE("letter-count laws") {
    auto rep = verify_bcount_bounds(5);
    CHECK(rep.pass);
    // A_3 prefix of length 4 has 2 b's, and {floor,ceil}(4/tau^2) = {1,2}
    CHECK(Word::parse("abba").count(Letter::b) == 2);
    // all level-3 factors of length f_4 = 3 carry 0..2 b's
    WordSet f3 = factors(build(4).A, 3);
    for (const Word& w : f3) CHECK(w.count(Letter::b) <= 2);
    // every member of B_3 has 2 = ceil(5/tau^2) b's
    for (const Word& w : build(3).B) CHECK(w.count(Letter::b) == 2);
}

TEST_CASE("factor count bounds") {
    FactorPipeline pipeline;
    auto rep = verify_upper_bound(5, pipeline);
    CHECK(rep.pass);
    CHECK(rep.checked == 4);
    // n=2 by hand: 7 <= 160
    CHECK(pipeline.compute(3).members.size() == 7);
}
