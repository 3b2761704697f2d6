#include "alexsum/state_sum.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace alexsum {

namespace {

// Bottom-to-top walk over the letters of a state, yielding for each letter
// (in reading order) the index, crossing sign, resolution choice, and the
// two strand signs just below the crossing.
struct LetterContext {
    int r;
    int crossing;  // +1 for sigma_r, -1 for its inverse
    bool swap;
    int lo;  // sign at position r below the crossing
    int hi;  // sign at position r+1 below the crossing
};

std::vector<LetterContext> walk_letters(const BraidWord& w, const State& s) {
    const size_t count = w.letters.size();
    std::vector<LetterContext> out(count);
    std::vector<int> cur(static_cast<size_t>(w.strands));
    for (int p = 1; p <= w.strands; ++p) cur[static_cast<size_t>(p) - 1] = s.signs.sign(p);

    for (size_t i = count; i-- > 0;) {
        const BraidLetter& l = w.letters[i];
        const size_t r = static_cast<size_t>(l.index);
        out[i] = {l.index, l.sign, s.resolution.is_swap(static_cast<int>(i)), cur[r - 1],
                  cur[r]};
        if (out[i].swap) std::swap(cur[r - 1], cur[r]);
    }
    return out;
}

// The local scalar of one crossing; negative crossings take the bar of the
// positive table, which fixes the swap coefficients.
RationalFn letter_scalar(const LetterContext& c) {
    // Signs along a strand are constant, so a SignSequence that is + at
    // position c.r exactly when the local sign is + reproduces the
    // coefficient lookups.  Build the minimal such sequence.
    std::vector<std::int8_t> signs(static_cast<size_t>(c.r) + 1, 1);
    signs[static_cast<size_t>(c.r) - 1] = static_cast<std::int8_t>(c.lo);
    signs[static_cast<size_t>(c.r)] = static_cast<std::int8_t>(c.hi);
    if (c.r == 1 && c.lo == -1) throw std::logic_error("minus sign on the leading strand");
    SignSequence eps{std::move(signs)};

    if (c.swap) return coeff_b(c.r, eps);
    return c.crossing == 1 ? coeff_a(c.r, eps) : coeff_a_bar(c.r, eps);
}

std::string bracket(long k) { return "[" + std::to_string(k) + "]"; }

std::string power_of_v(int e, bool negated) {
    std::string out = negated ? "-v" : "v";
    if (e != 1) out += "^" + std::to_string(e);
    return out;
}

std::string letter_factor_string(const LetterContext& c) {
    if (c.swap) return bracket(c.lo == -1 ? c.r + 1 : c.r - 1) + "/" + bracket(c.r);

    const bool barred = c.crossing == -1;
    if (c.lo == 1 && c.hi == 1) return power_of_v(barred ? -1 : 1, false);
    if (c.lo == -1 && c.hi == -1) return power_of_v(barred ? 1 : -1, true);

    const bool negated = c.lo == 1;  // (+,-) carries the minus sign
    int e = c.lo == -1 ? c.r : -c.r;
    if (barred) e = -e;
    if (c.r == 1) return power_of_v(e, negated);
    return power_of_v(e, negated) + "/" + bracket(c.r);
}

}  // namespace

EnumBounds EnumBounds::from_env() {
    EnumBounds bounds;
    const char* raw = std::getenv("ALEXSUM_MAX_ENUM");
    if (raw == nullptr) return bounds;

    std::string_view text(raw);
    int len = 0, strands = 0;
    const char* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, len);
    if (ec != std::errc{} || len < 0) return bounds;
    if (p == end) {
        bounds.max_len = len;
        return bounds;
    }
    if (*p != ',') return bounds;
    auto [q, ec2] = std::from_chars(p + 1, end, strands);
    if (ec2 != std::errc{} || q != end || strands < 1) return bounds;
    bounds.max_len = len;
    bounds.max_strands = strands;
    return bounds;
}

void EnumBounds::check(const BraidWord& w) const {
    if (static_cast<int>(w.letters.size()) > max_len)
        throw BoundExceeded("word length " + std::to_string(w.letters.size()) +
                            " exceeds exhaustive bound " + std::to_string(max_len));
    if (w.strands > max_strands)
        throw BoundExceeded("strand count " + std::to_string(w.strands) +
                            " exceeds exhaustive bound " + std::to_string(max_strands));
}

std::string Resolution::to_string() const {
    std::string out;
    out.reserve(swaps_.size());
    for (bool s : swaps_) out += s ? '1' : '0';
    return out;
}

std::vector<State> enumerate_states(const BraidWord& w, const EnumBounds& bounds) {
    validate(w);
    bounds.check(w);

    const int L = static_cast<int>(w.letters.size());
    const int n = w.strands;
    if (L > 62 || n > 31)
        throw BoundExceeded("word too large for exhaustive resolution enumeration");
    std::vector<State> states;

    for (std::uint64_t choice = 0; choice < (1ull << L); ++choice) {
        std::vector<bool> swaps(static_cast<size_t>(L));
        for (int i = 0; i < L; ++i) swaps[static_cast<size_t>(i)] = choice >> (L - 1 - i) & 1;

        // P1/P2: follow the strands bottom-to-top through the chosen swaps.
        std::vector<int> strand_at(static_cast<size_t>(n));
        std::iota(strand_at.begin(), strand_at.end(), 1);
        bool admissible = true;
        for (int i = L; admissible && i-- > 0;) {
            if (!swaps[static_cast<size_t>(i)]) continue;
            const size_t r = static_cast<size_t>(w.letters[static_cast<size_t>(i)].index);
            if (strand_at[r - 1] == 1 || strand_at[r] == 1) admissible = false;  // P1
            std::swap(strand_at[r - 1], strand_at[r]);
        }
        for (int p = 1; admissible && p <= n; ++p)
            if (strand_at[static_cast<size_t>(p) - 1] != p) admissible = false;  // P2
        if (!admissible) continue;

        Resolution res(swaps);
        const std::uint32_t sign_limit = n == 1 ? 1 : 1u << (n - 1);
        for (std::uint32_t idx = 0; idx < sign_limit; ++idx) {
            // S1 holds by construction; check S2 along the strands.
            std::vector<int> cur(static_cast<size_t>(n), 1);
            for (int p = 2; p <= n; ++p)
                if (idx >> (n - p) & 1u) cur[static_cast<size_t>(p) - 1] = -1;

            bool ok = true;
            for (int i = L; ok && i-- > 0;) {
                if (!swaps[static_cast<size_t>(i)]) continue;
                const size_t r = static_cast<size_t>(w.letters[static_cast<size_t>(i)].index);
                if (cur[r - 1] == cur[r]) ok = false;  // S2
                std::swap(cur[r - 1], cur[r]);
            }
            if (ok) states.push_back({res, SignSequence::from_index(n, idx)});
        }
    }
    return states;
}

RationalFn state_weight(const BraidWord& w, const State& s) {
    if (s.signs.size() != w.strands ||
        s.resolution.size() != static_cast<int>(w.letters.size()))
        throw std::invalid_argument("state does not belong to the word");

    RationalFn weight(1L);
    for (const LetterContext& c : walk_letters(w, s)) weight *= letter_scalar(c);
    return weight;
}

LaurentPoly state_sum(const BraidWord& w, const EnumBounds& bounds) {
    RationalFn total;
    for (const State& s : enumerate_states(w, bounds)) {
        RationalFn term = state_weight(w, s);
        if (s.signs.leg() % 2 != 0) term = -term;
        total += term;
    }
    return (total / RationalFn(quantum_integer(w.strands))).as_laurent();
}

LaurentPoly evaluate_dp(const BraidWord& w) {
    validate(w);
    const int n = w.strands;
    if (n > 31) throw std::invalid_argument("strand count too large for sign-sequence masks");

    // Each letter's scalars are rescaled by [r] so amplitudes stay Laurent
    // polynomials; one exact division by the product of the [r] (and the
    // final [n]) happens at the end.
    struct LetterTable {
        int r;
        LaurentPoly diag[2][2];  // [lo][hi], 0 = +, 1 = -
        LaurentPoly swap[2][2];
    };
    std::vector<LetterTable> tables;
    tables.reserve(w.letters.size());
    LaurentPoly scale(1L);
    for (const BraidLetter& l : w.letters) {
        const LaurentPoly qr = quantum_integer(l.index);
        LetterTable t;
        t.r = l.index;
        if (l.sign == 1) {
            t.diag[0][0] = qr.shifted(1);                       // v [r]
            t.diag[1][1] = -qr.shifted(-1);                     // -v^-1 [r]
            t.diag[1][0] = LaurentPoly::monomial(1, l.index);   // v^r
            t.diag[0][1] = LaurentPoly::monomial(-1, -l.index); // -v^-r
        } else {
            t.diag[0][0] = qr.shifted(-1);
            t.diag[1][1] = -qr.shifted(1);
            t.diag[1][0] = LaurentPoly::monomial(1, -l.index);
            t.diag[0][1] = LaurentPoly::monomial(-1, l.index);
        }
        t.swap[1][0] = quantum_integer(l.index + 1);
        t.swap[0][1] = quantum_integer(l.index - 1);  // zero at r = 1
        tables.push_back(std::move(t));
        scale *= qr;
    }

    const std::uint32_t count = n == 1 ? 1 : 1u << (n - 1);
    auto sign_bit = [n](std::uint32_t mask, int pos) -> int {
        return pos == 1 ? 0 : static_cast<int>(mask >> (n - pos) & 1u);
    };

    LaurentPoly total;
    std::map<std::uint32_t, LaurentPoly> amp, next;
    for (std::uint32_t start = 0; start < count; ++start) {
        amp.clear();
        amp.emplace(start, LaurentPoly(1L));
        for (size_t i = w.letters.size(); i-- > 0;) {
            const LetterTable& t = tables[i];
            next.clear();
            for (const auto& [mask, poly] : amp) {
                const int lo = sign_bit(mask, t.r);
                const int hi = sign_bit(mask, t.r + 1);
                if (!t.diag[lo][hi].is_zero()) next[mask] += poly * t.diag[lo][hi];
                if (lo != hi && t.r >= 2) {
                    const std::uint32_t flipped =
                        mask ^ (1u << (n - t.r) | 1u << (n - t.r - 1));
                    next[flipped] += poly * t.swap[lo][hi];
                }
            }
            amp.swap(next);
        }
        auto it = amp.find(start);
        if (it == amp.end()) continue;
        if (std::popcount(start) % 2 == 0)
            total += it->second;
        else
            total -= it->second;
    }

    return exact_div(total, scale * quantum_integer(n));
}

std::vector<StateRow> list_states(const BraidWord& w, const EnumBounds& bounds) {
    std::vector<StateRow> rows;
    for (const State& s : enumerate_states(w, bounds)) {
        StateRow row;
        row.resolution = s.resolution.to_string();
        row.signs = s.signs.to_string();
        RationalFn weight(1L);
        for (const LetterContext& c : walk_letters(w, s)) {
            row.weight_factors.push_back(letter_factor_string(c));
            weight *= letter_scalar(c);
        }
        row.weight = std::move(weight);
        row.sign_product = s.signs.leg() % 2 == 0 ? 1 : -1;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace alexsum
