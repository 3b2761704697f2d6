#pragma once

#include "alexsum/braid.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace alexsum {

// Knobs for the randomized property suites.  The defaults match the sizes
// the test suite pins down; all sampling is driven by a single mt19937 so a
// fixed seed reproduces the run bit for bit.
struct VerifyOptions {
    std::uint32_t seed = 42;
    int samples = 200;         // words for agreement / oracle / parity suites
    int markov_samples = 100;  // words for the Markov-invariance suite
    int max_strands = 5;
    int max_length = 8;
    int hecke_n = 6;  // generator relations checked for 2 <= n <= hecke_n
};

// One property suite's tally.  A failure entry names the offending word and
// what went wrong.
struct SuiteResult {
    std::string name;
    long checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool ok() const;
    long total_checked() const;
};

// Uniformly random word: 2..max_strands strands, 1..max_length letters,
// each letter a uniform generator with a uniform sign.
BraidWord random_word(std::mt19937& rng, int max_strands, int max_length);

// Every word reachable from w by one commutation (swap adjacent letters on
// generators at distance >= 2), one braid-triple move (r s r -> s r s with
// |r - s| = 1 and equal signs), or one free cancellation of an adjacent
// inverse pair.  Each move fixes the braid group element.
std::vector<BraidWord> relation_rewrites(const BraidWord& w);

// A random single rewrite from relation_rewrites; when none applies, inserts
// a cancelling generator pair at a random position instead, so the result
// always represents the same braid but differs as a word.
BraidWord random_rewrite(const BraidWord& w, std::mt19937& rng);

// Runs all property suites and returns the per-suite tallies:
// method agreement across the three evaluators, Markov invariance under
// rewrites / conjugation / both stabilizations, Burau cross-validation,
// Conway polynomiality with the component-parity law, mirror symmetry,
// vanishing on split closures, and the Hecke generator relations.
VerifyReport run_verify(const VerifyOptions& opts = VerifyOptions());

}  // namespace alexsum
