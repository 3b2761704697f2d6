#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexsum/state_sum.hpp"
#include "alexsum/verify.hpp"

#include <algorithm>
#include <set>

using namespace alexsum;

TEST_CASE("random words are valid and deterministic") {
    std::mt19937 rng(42);
    std::set<std::string> seen;
    for (int i = 0; i < 50; ++i) {
        BraidWord w = random_word(rng, 5, 8);
        CHECK(w.strands >= 2);
        CHECK(w.strands <= 5);
        CHECK(w.letters.size() >= 1);
        CHECK(w.letters.size() <= 8);
        validate(w);
        seen.insert(std::to_string(w.strands) + "|" + to_text(w));
    }
    CHECK(seen.size() > 30);  // not stuck on a handful of words

    std::mt19937 replay(42);
    BraidWord again = random_word(replay, 5, 8);
    std::mt19937 fresh(42);
    CHECK(random_word(fresh, 5, 8) == again);

    CHECK_THROWS_AS(random_word(rng, 1, 8), std::invalid_argument);
    CHECK_THROWS_AS(random_word(rng, 3, 0), std::invalid_argument);
}

TEST_CASE("relation rewrites") {
    auto words_of = [](const std::vector<BraidWord>& ws) {
        std::set<std::string> out;
        for (const BraidWord& w : ws) out.insert(to_text(w));
        return out;
    };

    // braid triple, both directions
    auto moves = words_of(relation_rewrites(parse_braid_word("1 2 1")));
    CHECK(moves.count("2 1 2") == 1);
    moves = words_of(relation_rewrites(parse_braid_word("-2 -1 -2")));
    CHECK(moves.count("-1 -2 -1") == 1);
    // mixed signs do not match the triple rule
    CHECK(relation_rewrites(parse_braid_word("1 -2 1")).empty());

    // commutation needs distance >= 2
    moves = words_of(relation_rewrites(parse_braid_word("1 3")));
    CHECK(moves == std::set<std::string>{"3 1"});
    CHECK(relation_rewrites(parse_braid_word("1 2")).empty());

    // free cancellation
    moves = words_of(relation_rewrites(parse_braid_word("1 -1")));
    CHECK(moves == std::set<std::string>{""});
    moves = words_of(relation_rewrites(parse_braid_word("2 1 -1 3", 4)));
    CHECK(moves.count("2 3") == 1);

    CHECK(relation_rewrites(parse_braid_word("1 1")).empty());
    CHECK(relation_rewrites(BraidWord{3, {}}).empty());
}

TEST_CASE("random rewrites preserve the braid") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        BraidWord w = random_word(rng, 5, 8);
        BraidWord moved = random_rewrite(w, rng);
        CHECK(moved.strands == w.strands);
        CHECK(moved != w);  // every move changes the word
        CHECK(exponent_sum(moved) == exponent_sum(w));
        CHECK(underlying_permutation(moved) == underlying_permutation(w));
        CHECK(evaluate_dp(moved) == evaluate_dp(w));
    }

    // no relation move applies here, so a cancelling pair is inserted
    BraidWord stuck = parse_braid_word("1 1");
    BraidWord padded = random_rewrite(stuck, rng);
    CHECK(padded.letters.size() == 4);
    CHECK(evaluate_dp(padded) == evaluate_dp(stuck));
}

TEST_CASE("full verify run is green and deterministic") {
    VerifyOptions opts;
    opts.samples = 25;
    opts.markov_samples = 10;
    opts.hecke_n = 4;
    VerifyReport report = run_verify(opts);

    CHECK(report.ok());
    CHECK(report.suites.size() == 7);
    std::vector<std::string> names;
    for (const SuiteResult& suite : report.suites) names.push_back(suite.name);
    CHECK(names == std::vector<std::string>{"method-agreement", "oracle-agreement",
                                            "conway-parity", "mirror-symmetry",
                                            "split-vanishing", "markov-invariance",
                                            "hecke-relations"});
    CHECK(report.suites[0].checked == 50);  // two comparisons per word
    CHECK(report.suites[1].checked == 25);
    CHECK(report.suites[5].checked == 40);  // four moves per word
    CHECK(report.total_checked() > 150);

    VerifyReport replay = run_verify(opts);
    CHECK(replay.ok());
    CHECK(replay.total_checked() == report.total_checked());

    opts.samples = -1;
    CHECK_THROWS_AS(run_verify(opts), std::invalid_argument);
}
