#pragma once

#include "alexsum/braid.hpp"
#include "alexsum/laurent.hpp"
#include "alexsum/tableaux.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace alexsum {

// Thrown when an exhaustive-enumeration entry point is asked for a word
// beyond the configured bounds; evaluate_dp has no such limit.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Size limits for the 2^L resolution enumeration.
struct EnumBounds {
    int max_len = 16;
    int max_strands = 6;

    // Bounds from the ALEXSUM_MAX_ENUM environment variable ("L" or "L,n");
    // defaults when unset or malformed.
    static EnumBounds from_env();

    void check(const BraidWord& w) const;
};

// Per-letter resolution choice, in reading order: false = the strands pass
// straight through (identity), true = they swap.
class Resolution {
public:
    explicit Resolution(std::vector<bool> swaps) : swaps_(std::move(swaps)) {}

    int size() const { return static_cast<int>(swaps_.size()); }
    bool is_swap(int letter) const { return swaps_[static_cast<size_t>(letter)]; }

    // "0" = identity, "1" = swap, one character per letter in reading order.
    std::string to_string() const;

    friend bool operator==(const Resolution& a, const Resolution& b) {
        return a.swaps_ == b.swaps_;
    }
    friend bool operator!=(const Resolution& a, const Resolution& b) { return !(a == b); }

private:
    std::vector<bool> swaps_;
};

// An admissible resolution together with the bottom signs of the n strands.
// Admissibility: the strand starting at position 1 never swaps (P1), the
// resolution's permutation is the identity (P2), the first sign is + (S1),
// and every swap joins strands of opposite sign (S2).
struct State {
    Resolution resolution;
    SignSequence signs;

    friend bool operator==(const State& a, const State& b) {
        return a.resolution == b.resolution && a.signs == b.signs;
    }
    friend bool operator!=(const State& a, const State& b) { return !(a == b); }
};

struct WeightedState {
    State state;
    RationalFn weight;
    int sign_product;  // product of all n strand signs
};

// Human/JSON-facing row of the state table.
struct StateRow {
    std::string resolution;
    std::string signs;
    std::vector<std::string> weight_factors;  // one factor per letter, reading order
    RationalFn weight;
    int sign_product;
};

// All states of w, resolutions ordered by their choice vector read as a
// binary number (first letter most significant, identity = 0 < swap = 1),
// sign sequences in lexicographic order within each resolution.
std::vector<State> enumerate_states(const BraidWord& w,
                                    const EnumBounds& bounds = EnumBounds::from_env());

// Product over the letters of the local scalar keyed by crossing sign,
// resolution choice, and the two strand signs just below the crossing;
// negative crossings use the bar (v -> v^-1) of each scalar.
RationalFn state_weight(const BraidWord& w, const State& s);

// The state sum A(w) = (1/[n]) * sum over states of <eps> * weight, as an
// exact Laurent polynomial.  Exhaustive; respects bounds.
LaurentPoly state_sum(const BraidWord& w, const EnumBounds& bounds = EnumBounds::from_env());

// Same value as state_sum, computed by propagating amplitudes per sign
// sequence through the word (no resolution enumeration); no size bounds.
LaurentPoly evaluate_dp(const BraidWord& w);

// The state table with factored weights, for inspection and JSON output.
std::vector<StateRow> list_states(const BraidWord& w,
                                  const EnumBounds& bounds = EnumBounds::from_env());

}  // namespace alexsum
