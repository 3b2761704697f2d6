#pragma once

#include "alexsum/laurent.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace alexsum {

// Hook partition (n - leg, 1^leg) of n.
struct HookShape {
    int n;
    int leg;

    HookShape(int n_, int leg_);

    // Number of standard tableaux = C(n-1, leg).
    long dimension() const;

    friend bool operator==(const HookShape& a, const HookShape& b) {
        return a.n == b.n && a.leg == b.leg;
    }
    friend bool operator!=(const HookShape& a, const HookShape& b) { return !(a == b); }
};

// Sign sequence (eps_1, ..., eps_n) over {+, -} with eps_1 = +.  These label
// the basis vectors of the hook-shape modules and the strand signs of a
// state; the leg length of the matching hook is the number of minus signs.
class SignSequence {
public:
    // signs[i] is eps_{i+1}, entries +1 or -1; throws std::invalid_argument
    // unless signs is nonempty and starts with +1.
    explicit SignSequence(std::vector<std::int8_t> signs);

    // Parses strings like "++-+".
    static SignSequence from_string(const std::string& text);
    std::string to_string() const;

    // Positions 2..n encoded as a bitmask with position 2 the most
    // significant bit and - = 1, so ascending index order is lexicographic
    // order with + < -.
    static SignSequence from_index(int n, std::uint32_t index);
    std::uint32_t index() const;

    int size() const { return static_cast<int>(signs_.size()); }
    // 1-based access; sign(1) is always +1.
    int sign(int pos) const { return signs_[static_cast<size_t>(pos) - 1]; }
    // Number of minus entries.
    int leg() const;

    // The sequence with positions r and r+1 exchanged.  Throws
    // std::invalid_argument when the swap would move the leading + out of
    // position 1 (no such basis label exists).
    SignSequence swap_adjacent(int r) const;

    friend bool operator==(const SignSequence& a, const SignSequence& b) {
        return a.signs_ == b.signs_;
    }
    friend bool operator!=(const SignSequence& a, const SignSequence& b) { return !(a == b); }
    // Lexicographic with + < -.
    friend bool operator<(const SignSequence& a, const SignSequence& b);

private:
    std::vector<std::int8_t> signs_;
};

// Standard Young tableau: entries 1..n strictly increasing along rows and
// down columns, row lengths weakly decreasing.
class StandardTableau {
public:
    // rows[a][b] is the entry in row a+1, column b+1; validates standardness.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<int> shape() const;
    int size() const;
    bool is_hook() const;

    // 1-based (row, column) of the box containing r.
    std::pair<int, int> box_of(int r) const;
    // Residue of box (a, b) is b - a; residues()[r-1] is the residue of the
    // box containing r.
    std::vector<int> residues() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const StandardTableau& a, const StandardTableau& b) {
        return !(a == b);
    }

private:
    std::vector<std::vector<int>> rows_;
};

// All C(n-1, leg) sign sequences of length n with `leg` minus entries, in
// lexicographic order (+ before -).
std::vector<SignSequence> enumerate_sign_sequences(int n, int leg);

// The standard hook tableau matching a sign sequence: r goes to the end of
// row 1 when eps_r = +, to the end of column 1 when eps_r = -.
StandardTableau tableau_from_signs(const SignSequence& eps);

// Inverse of tableau_from_signs; throws std::invalid_argument on non-hook
// shapes.
SignSequence signs_from_tableau(const StandardTableau& t);

// Residues read off the sign sequence directly: i_1 = 0 and
//   (+,+) -> i_r + 1,  (-,-) -> i_r - 1,  (-,+) -> i_r + r,  (+,-) -> i_r - r,
// keyed on (eps_r, eps_{r+1}).  Equals tableau_from_signs(eps).residues().
std::vector<int> residue_sequence(const SignSequence& eps);

// Diagonal coefficient of the H_r action on x_eps, keyed on
// (eps_r, eps_{r+1}):
//   (+,+) -> v,  (-,-) -> -v^-1,  (-,+) -> v^r/[r],  (+,-) -> -v^-r/[r].
RationalFn coeff_a(int r, const SignSequence& eps);

// Swap coefficient: (-,+) -> [r+1]/[r], (+,-) -> [r-1]/[r], 0 on equal
// signs.  Note [0] = 0 kills the swap at r = 1.
RationalFn coeff_b(int r, const SignSequence& eps);

// Diagonal coefficient of the inverse action H_r^-1: the bar of coeff_a
// (the swap coefficient is bar-invariant).
RationalFn coeff_a_bar(int r, const SignSequence& eps);

// Semi-normal coefficients for an arbitrary standard tableau from the
// residue gap d = i_r - i_{r+1}:
//   a = (v - v^-1)/(1 - v^{2d}),  b = v^-1 + a.
// Specializes to (coeff_a, coeff_b) on hook tableaux.
std::pair<RationalFn, RationalFn> general_coeffs(const StandardTableau& t, int r);

}  // namespace alexsum
