#include "alexsum/verify.hpp"

#include "alexsum/burau.hpp"
#include "alexsum/hecke.hpp"
#include "alexsum/state_sum.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace alexsum {

namespace {

// mt19937's output sequence is pinned by the standard, so reducing it
// directly (rather than through a distribution object) keeps runs identical
// across platforms.
int pick(std::mt19937& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint32_t>(bound));
}

BraidWord with_letters(const BraidWord& w, std::vector<BraidLetter> letters) {
    BraidWord out;
    out.strands = w.strands;
    out.letters = std::move(letters);
    return out;
}

BraidWord mirror(const BraidWord& w) {
    BraidWord out = w;
    for (BraidLetter& letter : out.letters) letter.sign = -letter.sign;
    return out;
}

}  // namespace

bool VerifyReport::ok() const {
    for (const SuiteResult& suite : suites)
        if (!suite.ok()) return false;
    return true;
}

long VerifyReport::total_checked() const {
    long total = 0;
    for (const SuiteResult& suite : suites) total += suite.checked;
    return total;
}

BraidWord random_word(std::mt19937& rng, int max_strands, int max_length) {
    if (max_strands < 2) throw std::invalid_argument("random_word: need at least 2 strands");
    if (max_length < 1) throw std::invalid_argument("random_word: need positive length");
    BraidWord w;
    w.strands = 2 + pick(rng, max_strands - 1);
    int length = 1 + pick(rng, max_length);
    w.letters.reserve(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) {
        int index = 1 + pick(rng, w.strands - 1);
        int sign = pick(rng, 2) == 0 ? 1 : -1;
        w.letters.push_back({index, sign});
    }
    return w;
}

std::vector<BraidWord> relation_rewrites(const BraidWord& w) {
    std::vector<BraidWord> out;
    const auto& ls = w.letters;
    const size_t len = ls.size();

    for (size_t i = 0; i + 1 < len; ++i) {
        int gap = ls[i].index - ls[i + 1].index;
        if (gap >= 2 || gap <= -2) {
            auto swapped = ls;
            std::swap(swapped[i], swapped[i + 1]);
            out.push_back(with_letters(w, std::move(swapped)));
        }
        if (ls[i].index == ls[i + 1].index && ls[i].sign == -ls[i + 1].sign) {
            auto reduced = ls;
            reduced.erase(reduced.begin() + static_cast<long>(i),
                          reduced.begin() + static_cast<long>(i) + 2);
            out.push_back(with_letters(w, std::move(reduced)));
        }
    }

    for (size_t i = 0; i + 2 < len; ++i) {
        int r = ls[i].index, s = ls[i + 1].index;
        bool adjacent = (r - s == 1) || (s - r == 1);
        bool same_sign = ls[i].sign == ls[i + 1].sign && ls[i].sign == ls[i + 2].sign;
        if (adjacent && same_sign && ls[i + 2].index == r) {
            auto braided = ls;
            braided[i].index = s;
            braided[i + 1].index = r;
            braided[i + 2].index = s;
            out.push_back(with_letters(w, std::move(braided)));
        }
    }
    return out;
}

BraidWord random_rewrite(const BraidWord& w, std::mt19937& rng) {
    std::vector<BraidWord> moves = relation_rewrites(w);
    if (!moves.empty()) return moves[static_cast<size_t>(pick(rng, static_cast<int>(moves.size())))];
    if (w.strands < 2) throw std::invalid_argument("random_rewrite: need at least 2 strands");
    auto padded = w.letters;
    size_t at = static_cast<size_t>(pick(rng, static_cast<int>(padded.size()) + 1));
    BraidLetter g{1 + pick(rng, w.strands - 1), pick(rng, 2) == 0 ? 1 : -1};
    padded.insert(padded.begin() + static_cast<long>(at), {g, g.inverse()});
    return with_letters(w, std::move(padded));
}

namespace {

void check_equal(SuiteResult& suite, const BraidWord& w, const LaurentPoly& got,
                 const LaurentPoly& want, const char* what) {
    ++suite.checked;
    if (got != want)
        suite.failures.push_back("word \"" + to_text(w) + "\" (" +
                                 std::to_string(w.strands) + " strands): " + what);
}

void run_word_suites(VerifyReport& report, const VerifyOptions& opts, std::mt19937& rng) {
    SuiteResult agreement{.name = "method-agreement"};
    SuiteResult oracle{.name = "oracle-agreement"};
    SuiteResult parity{.name = "conway-parity"};
    SuiteResult mirror_suite{.name = "mirror-symmetry"};
    SuiteResult split{.name = "split-vanishing"};

    EnumBounds bounds;
    bounds.max_len = std::max(bounds.max_len, opts.max_length);
    bounds.max_strands = std::max(bounds.max_strands, opts.max_strands);

    for (int i = 0; i < opts.samples; ++i) {
        BraidWord w = random_word(rng, opts.max_strands, opts.max_length);
        LaurentPoly value = evaluate_dp(w);
        check_equal(agreement, w, state_sum(w, bounds), value, "state_sum != evaluate_dp");
        check_equal(agreement, w, alexander_via_trace(w), value,
                    "alexander_via_trace != evaluate_dp");

        ++oracle.checked;
        if (!cross_validate(w))
            oracle.failures.push_back("word \"" + to_text(w) + "\" (" +
                                      std::to_string(w.strands) +
                                      " strands): Burau oracle disagrees");

        ++parity.checked;
        try {
            ConwayPoly conway = to_conway(value);
            int want_parity = (component_count(w) - 1) % 2;
            for (const auto& [exp, coeff] : conway.terms())
                if (exp % 2 != want_parity) {
                    parity.failures.push_back("word \"" + to_text(w) +
                                              "\": z-parity violates component count");
                    break;
                }
        } catch (const NotAConwayPolynomial&) {
            parity.failures.push_back("word \"" + to_text(w) + "\": not a Conway polynomial");
        }

        check_equal(mirror_suite, w, evaluate_dp(mirror(w)), value.bar(),
                    "mirror value is not the bar image");

        BraidWord widened = w;
        widened.strands += 1;  // the extra strand closes to a split unknot
        check_equal(split, widened, evaluate_dp(widened), LaurentPoly(),
                    "split closure has nonzero value");
    }

    report.suites.push_back(std::move(agreement));
    report.suites.push_back(std::move(oracle));
    report.suites.push_back(std::move(parity));
    report.suites.push_back(std::move(mirror_suite));
    report.suites.push_back(std::move(split));
}

void run_markov_suite(VerifyReport& report, const VerifyOptions& opts, std::mt19937& rng) {
    SuiteResult suite{.name = "markov-invariance"};
    for (int i = 0; i < opts.markov_samples; ++i) {
        BraidWord w = random_word(rng, opts.max_strands, opts.max_length);
        LaurentPoly value = evaluate_dp(w);

        check_equal(suite, w, evaluate_dp(random_rewrite(w, rng)), value,
                    "changed by a relation rewrite");

        BraidLetter g{1 + pick(rng, w.strands - 1), pick(rng, 2) == 0 ? 1 : -1};
        check_equal(suite, w, evaluate_dp(conjugate(w, g)), value, "changed by conjugation");

        check_equal(suite, w, evaluate_dp(markov_stabilize(w, +1)), value,
                    "changed by positive stabilization");
        check_equal(suite, w, evaluate_dp(markov_stabilize(w, -1)), value,
                    "changed by negative stabilization");
    }
    report.suites.push_back(std::move(suite));
}

void run_hecke_suite(VerifyReport& report, const VerifyOptions& opts) {
    SuiteResult suite{.name = "hecke-relations"};
    for (int n = 2; n <= opts.hecke_n; ++n) {
        HeckeRelationReport rel = check_hecke_relations(n, opts.hecke_n);
        suite.checked += rel.relations_checked;
        for (const std::string& failure : rel.failures)
            suite.failures.push_back("n=" + std::to_string(n) + ": " + failure);
    }
    report.suites.push_back(std::move(suite));
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    if (opts.samples < 0 || opts.markov_samples < 0)
        throw std::invalid_argument("run_verify: sample counts must be nonnegative");
    if (opts.max_strands < 2) throw std::invalid_argument("run_verify: max_strands must be >= 2");
    if (opts.max_length < 1) throw std::invalid_argument("run_verify: max_length must be >= 1");
    if (opts.hecke_n < 2) throw std::invalid_argument("run_verify: hecke_n must be >= 2");

    std::mt19937 rng(opts.seed);
    VerifyReport report;
    run_word_suites(report, opts, rng);
    run_markov_suite(report, opts, rng);
    run_hecke_suite(report, opts);
    return report;
}

}  // namespace alexsum
