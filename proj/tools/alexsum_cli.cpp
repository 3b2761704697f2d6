#include "alexsum/burau.hpp"
#include "alexsum/format.hpp"
#include "alexsum/hecke.hpp"
#include "alexsum/state_sum.hpp"
#include "alexsum/verify.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace alexsum;

// Exit codes: 0 success, 1 user error (bad word/flags), 2 internal
// inconsistency (method disagreement, failed validation, failed property),
// 3 exhaustive bounds exceeded.
constexpr int kExitUser = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitBounds = 3;

struct ComputeRequest {
    std::string word_text;
    std::optional<int> strands;
    std::string method = "dp";
    std::string var = "z";
    bool list_states = false;
    bool json = false;
    bool validate = false;
};

BraidWord parse_request_word(const std::string& text, const std::optional<int>& strands) {
    if (strands && *strands < 1) throw std::invalid_argument("strand count must be at least 1");
    return parse_braid_word(text, strands);
}

// Renders the braid's value in the requested output variable.  The z and t
// forms go through the Conway expression; t warns when the closure has an
// even component count, since the exponents are then half-integers.
std::pair<std::string, nlohmann::json> render_value(const LaurentPoly& value,
                                                    const std::string& var, int components) {
    if (var == "v") return {render(value, 'v'), poly_to_json(value, "v")};
    ConwayPoly conway = to_conway(value);
    if (var == "z") return {render(conway), poly_to_json(conway)};
    HalfTPoly t = to_alexander_t(conway, components);
    if (t.has_half_integer())
        std::cerr << "warning: closure has an even number of components; "
                     "the t-form uses half-integer exponents t^{k/2}\n";
    return {render(t), poly_to_json(t)};
}

nlohmann::json states_to_json(const std::vector<StateRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const StateRow& row : rows)
        out.push_back({{"resolution", row.resolution},
                       {"signs", row.signs},
                       {"weight_factors", row.weight_factors},
                       {"weight", rational_to_json(row.weight, "v")},
                       {"sign_product", row.sign_product}});
    return out;
}

void print_state_table(const std::vector<StateRow>& rows, std::ostream& os) {
    size_t res_w = 10, signs_w = 5, weight_w = 6;
    std::vector<std::string> weights;
    weights.reserve(rows.size());
    for (const StateRow& row : rows) {
        weights.push_back(render(row.weight));
        res_w = std::max(res_w, row.resolution.size());
        signs_w = std::max(signs_w, row.signs.size());
        weight_w = std::max(weight_w, weights.back().size());
    }
    os << std::left << std::setw(static_cast<int>(res_w) + 2) << "resolution"
       << std::setw(static_cast<int>(signs_w) + 2) << "signs" << std::setw(6) << "sign"
       << std::setw(static_cast<int>(weight_w) + 2) << "weight" << "factors\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const StateRow& row = rows[i];
        std::string factors;
        for (const std::string& f : row.weight_factors)
            factors += (factors.empty() ? "" : " * ") + f;
        if (factors.empty()) factors = "1";
        os << std::left << std::setw(static_cast<int>(res_w) + 2) << row.resolution
           << std::setw(static_cast<int>(signs_w) + 2) << row.signs << std::setw(6)
           << (row.sign_product > 0 ? "+" : "-")
           << std::setw(static_cast<int>(weight_w) + 2) << weights[i] << factors << "\n";
    }
}

int run_compute(const ComputeRequest& req) {
    BraidWord w = parse_request_word(req.word_text, req.strands);
    EnumBounds bounds = EnumBounds::from_env();

    // Evaluation order is fixed so output is reproducible.
    std::vector<std::pair<std::string, LaurentPoly>> values;
    if (req.method == "statesum" || req.method == "all")
        values.emplace_back("statesum", state_sum(w, bounds));
    if (req.method == "trace" || req.method == "all")
        values.emplace_back("trace", alexander_via_trace(w));
    if (req.method == "dp" || req.method == "all")
        values.emplace_back("dp", evaluate_dp(w));

    const LaurentPoly& value = values.front().second;
    for (const auto& [name, candidate] : values)
        if (candidate != value) {
            std::cerr << "error: methods disagree\n";
            for (const auto& [n, c] : values)
                std::cerr << "  " << n << ": " << render(c, 'v') << "\n";
            return kExitInconsistent;
        }

    if (req.validate) {
        // The Burau oracle needs two strands; a single stabilization fixes
        // the closure while making one-strand words checkable.
        BraidWord probe = w.strands >= 2 ? w : markov_stabilize(w, 1);
        if (!cross_validate(probe)) {
            std::cerr << "error: Burau cross-validation failed for word \"" << to_text(w)
                      << "\"\n";
            return kExitInconsistent;
        }
    }

    auto [text, poly_json] = render_value(value, req.var, component_count(w));

    if (req.json) {
        nlohmann::json out{{"word", to_text(w)},
                           {"strands", w.strands},
                           {"exponent_sum", exponent_sum(w)},
                           {"components", component_count(w)},
                           {"method", req.method},
                           {"polynomial", poly_json}};
        if (req.list_states) out["states"] = states_to_json(list_states(w, bounds));
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (values.size() > 1) {
        for (const auto& [name, candidate] : values) {
            auto [t, j] = render_value(candidate, req.var, component_count(w));
            std::cout << name << ": " << t << "\n";
        }
    } else {
        std::cout << text << "\n";
    }
    if (req.list_states) {
        std::cout << "\n";
        print_state_table(list_states(w, bounds), std::cout);
    }
    return 0;
}

int run_states(const ComputeRequest& req) {
    BraidWord w = parse_request_word(req.word_text, req.strands);
    std::vector<StateRow> rows = list_states(w, EnumBounds::from_env());
    if (req.json) {
        nlohmann::json out{
            {"word", to_text(w)}, {"strands", w.strands}, {"states", states_to_json(rows)}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_state_table(rows, std::cout);
    }
    return 0;
}

int run_verify_cmd(const VerifyOptions& opts) {
    VerifyReport report = run_verify(opts);
    for (const SuiteResult& suite : report.suites) {
        std::cout << suite.name << ": " << suite.checked << " checks, "
                  << (suite.ok() ? "ok" : std::to_string(suite.failures.size()) + " failures")
                  << "\n";
        for (const std::string& failure : suite.failures) std::cout << "  " << failure << "\n";
    }
    if (!report.ok()) {
        std::cout << "FAILED\n";
        return kExitInconsistent;
    }
    std::cout << "all " << report.suites.size() << " suites passed (" << report.total_checked()
              << " checks, seed " << opts.seed << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conway-normalized Alexander polynomial of a braid closure"};
    app.require_subcommand(1);

    ComputeRequest req;
    VerifyOptions vopts;
    int strands_flag = 0;

    auto add_word_flags = [&](CLI::App* cmd) {
        cmd->add_option("--word", req.word_text,
                        "braid word as signed generator indices, e.g. \"-2 1 -2 1\"")
            ->required();
        cmd->add_option("--strands", strands_flag,
                        "strand count (default: 1 + largest generator index)");
    };

    CLI::App* compute = app.add_subcommand("compute", "compute the polynomial of a closure");
    add_word_flags(compute);
    compute->add_option("--method", req.method, "statesum | trace | dp | all (default dp)")
        ->check(CLI::IsMember({"statesum", "trace", "dp", "all"}));
    compute->add_option("--var", req.var, "output variable: z (Conway), v, or t (default z)")
        ->check(CLI::IsMember({"z", "v", "t"}));
    compute->add_flag("--list-states", req.list_states, "also print the state table");
    compute->add_flag("--json", req.json, "emit JSON instead of text");
    compute->add_flag("--validate", req.validate, "also cross-check against the Burau oracle");

    CLI::App* states = app.add_subcommand("states", "list the admissible states of a word");
    add_word_flags(states);
    states->add_flag("--json", req.json, "emit JSON instead of text");

    CLI::App* verify = app.add_subcommand("verify", "run the randomized property suites");
    verify->add_option("--seed", vopts.seed, "RNG seed (default 42)");
    verify->add_option("--samples", vopts.samples,
                       "random words per suite; the Markov suite uses half (default 200)");
    verify->add_option("--hecke-n", vopts.hecke_n,
                       "check generator relations for 2 <= n <= this (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUser;
    }

    if (compute->count("--strands") || states->count("--strands")) req.strands = strands_flag;

    try {
        if (compute->parsed()) return run_compute(req);
        if (states->parsed()) return run_states(req);
        vopts.markov_samples = vopts.samples / 2;
        return run_verify_cmd(vopts);
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBounds;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInconsistent;
    }
}
