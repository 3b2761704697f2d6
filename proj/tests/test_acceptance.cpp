// End-to-end acceptance gate.  Each criterion prints exactly one PASS/FAIL
// line; the binary exits nonzero when any of them fails or blows its time
// budget.  All comparisons are exact — there are no tolerances anywhere.
#include "alexsum/burau.hpp"
#include "alexsum/format.hpp"
#include "alexsum/hecke.hpp"
#include "alexsum/state_sum.hpp"
#include "alexsum/tableaux.hpp"
#include "alexsum/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace alexsum;

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

LaurentPoly v_pow(int e) { return LaurentPoly::monomial(1, e); }

ConwayPoly conway_of(std::initializer_list<std::pair<int, long>> terms) {
    ConwayPoly p;
    for (const auto& [exp, coeff] : terms) p.set(exp, Int(coeff));
    return p;
}

// ---- corpus and random word pools shared by several criteria -------------

struct Pools {
    std::vector<BraidWord> agreement;  // 200 words, n <= 5, length <= 8
    std::vector<BraidWord> markov;     // 100 more from the same stream
};

Pools make_pools() {
    Pools pools;
    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) pools.agreement.push_back(random_word(rng, 5, 8));
    for (int i = 0; i < 100; ++i) pools.markov.push_back(random_word(rng, 5, 8));
    return pools;
}

// ---- the criteria ---------------------------------------------------------

void figure_eight_exactness() {
    BraidWord w = parse_braid_word("-2 1 -2 1");
    require(w.strands == 3, "figure-eight parses to three strands");
    LaurentPoly want = -v_pow(2) + LaurentPoly(3L) - v_pow(-2);
    require(state_sum(w) == want, "state sum value");
    require(evaluate_dp(w) == want, "propagation value");
    require(alexander_via_trace(w) == want, "trace value");
    require(to_conway(want) == conway_of({{0, 1}, {2, -1}}), "conway form 1 - z^2");
}

void figure_eight_state_table() {
    BraidWord w = parse_braid_word("-2 1 -2 1");
    std::vector<State> states = enumerate_states(w);
    require(states.size() == 6, "six admissible states");

    LaurentPoly two_sq = quantum_integer(2) * quantum_integer(2);
    std::vector<RationalFn> want_weights = {
        RationalFn(LaurentPoly(1L)),        RationalFn(v_pow(6), two_sq),
        RationalFn(v_pow(-6), two_sq),      RationalFn(LaurentPoly(1L)),
        RationalFn(-quantum_integer(3), two_sq), RationalFn(-quantum_integer(3), two_sq)};
    std::vector<int> want_signs = {+1, -1, -1, +1, -1, -1};
    for (size_t i = 0; i < 6; ++i) {
        require(state_weight(w, states[i]) == want_weights[i],
                "weight of state " + std::to_string(i));
        int sign = states[i].signs.leg() % 2 == 0 ? +1 : -1;
        require(sign == want_signs[i], "sign product of state " + std::to_string(i));
    }
}

void named_corpus() {
    struct Entry {
        BraidWord word;
        ConwayPoly conway;
    };
    std::vector<Entry> corpus = {
        {parse_braid_word("1"), conway_of({{0, 1}})},
        {parse_braid_word("-1"), conway_of({{0, 1}})},
        {markov_stabilize(parse_braid_word("1"), -1), conway_of({{0, 1}})},
        {parse_braid_word("1 1 1"), conway_of({{0, 1}, {2, 1}})},
        {parse_braid_word("1 1"), conway_of({{1, 1}})},
        {parse_braid_word("1 1 1 1 1"), conway_of({{0, 1}, {2, 3}, {4, 1}})},
        {parse_braid_word("", 2), ConwayPoly()},
    };
    for (const Entry& entry : corpus) {
        std::string name = "\"" + to_text(entry.word) + "\"";
        require(to_conway(evaluate_dp(entry.word)) == entry.conway, "conway value of " + name);
        require(cross_validate(entry.word), "oracle agreement for " + name);
    }
}

void three_method_agreement(const std::vector<BraidWord>& pool) {
    for (const BraidWord& w : pool) {
        LaurentPoly value = evaluate_dp(w);
        require(state_sum(w) == value, "state sum differs on \"" + to_text(w) + "\"");
        require(alexander_via_trace(w) == value, "trace differs on \"" + to_text(w) + "\"");
    }
}

void markov_invariance(const std::vector<BraidWord>& pool) {
    std::mt19937 rng(42);
    for (const BraidWord& w : pool) {
        LaurentPoly value = evaluate_dp(w);
        std::string name = "\"" + to_text(w) + "\"";
        require(evaluate_dp(random_rewrite(w, rng)) == value, "rewrite changed " + name);
        BraidLetter g{1 + static_cast<int>(rng() % static_cast<unsigned>(w.strands - 1)),
                      rng() % 2 == 0 ? 1 : -1};
        require(evaluate_dp(conjugate(w, g)) == value, "conjugation changed " + name);
        require(evaluate_dp(markov_stabilize(w, +1)) == value,
                "positive stabilization changed " + name);
        require(evaluate_dp(markov_stabilize(w, -1)) == value,
                "negative stabilization changed " + name);
    }
}

void hecke_relations() {
    for (int n = 2; n <= 6; ++n) {
        HeckeRelationReport report = check_hecke_relations(n, 6);
        require(report.relations_checked > 0, "relations enumerated for n=" + std::to_string(n));
        require(report.ok(), "relation failure at n=" + std::to_string(n));
    }
}

void tableau_bijection() {
    SignSequence figure_one = SignSequence::from_string("++-+");
    require(residue_sequence(figure_one) == std::vector<int>{0, 1, -1, 2},
            "residues of (+,+,-,+)");
    for (int n = 1; n <= 8; ++n)
        for (int leg = 0; leg < n; ++leg)
            for (const SignSequence& eps : enumerate_sign_sequences(n, leg)) {
                StandardTableau t = tableau_from_signs(eps);
                require(t.is_hook() && t.size() == n && eps.leg() == leg,
                        "shape of " + eps.to_string());
                require(signs_from_tableau(t) == eps, "round trip of " + eps.to_string());
                require(residue_sequence(eps) == t.residues(),
                        "residues of " + eps.to_string());
            }
}

void conway_polynomiality(const Pools& pools) {
    std::vector<BraidWord> all = pools.agreement;
    all.insert(all.end(), pools.markov.begin(), pools.markov.end());
    all.push_back(parse_braid_word("-2 1 -2 1"));
    all.push_back(parse_braid_word("1 1 1"));
    all.push_back(parse_braid_word("1 1"));
    for (const BraidWord& w : all) {
        ConwayPoly conway = to_conway(evaluate_dp(w));  // throws if not polynomial in z
        int want_parity = (component_count(w) - 1) % 2;
        for (const auto& [exp, coeff] : conway.terms())
            require(exp % 2 == want_parity, "z-parity broken on \"" + to_text(w) + "\"");
    }
}

}  // namespace

int main() {
    Pools pools = make_pools();

    struct Criterion {
        const char* name;
        long budget_ms;  // 0 = untimed
        std::function<void()> body;
    };
    std::vector<Criterion> criteria = {
        {"figure-eight exactness (three methods, conway form)", 50, figure_eight_exactness},
        {"figure-eight state table (weights and signs)", 0, figure_eight_state_table},
        {"named corpus with burau oracle agreement", 1000, named_corpus},
        {"three-method agreement on 200 random words", 30000,
         [&] { three_method_agreement(pools.agreement); }},
        {"markov invariance on 100 random words", 60000,
         [&] { markov_invariance(pools.markov); }},
        {"hecke generator relations through n=6", 0, hecke_relations},
        {"tableau bijection and residues through n=8", 0, tableau_bijection},
        {"conway polynomiality and component parity", 0,
         [&] { conway_polynomiality(pools); }},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criterion.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (error.empty() && criterion.budget_ms > 0 && ms > criterion.budget_ms)
            error = "took " + std::to_string(ms) + " ms, budget " +
                    std::to_string(criterion.budget_ms) + " ms";
        if (error.empty()) {
            std::printf("PASS  %-52s (%ld ms)\n", criterion.name, static_cast<long>(ms));
        } else {
            std::printf("FAIL  %-52s %s\n", criterion.name, error.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
