#include "alexsum/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace alexsum {

namespace {

void check_index(int r, int n) {
    if (r < 1 || r >= n)
        throw std::invalid_argument("generator index " + std::to_string(r) +
                                    " out of range for n = " + std::to_string(n));
}

}  // namespace

HookShape::HookShape(int n_, int leg_) : n(n_), leg(leg_) {
    if (n < 1) throw std::invalid_argument("hook shape needs n >= 1");
    if (leg < 0 || leg > n - 1) throw std::invalid_argument("leg length out of range");
}

long HookShape::dimension() const {
    long d = 1;
    for (int i = 1; i <= leg; ++i) d = d * (n - i) / i;
    return d;
}

SignSequence::SignSequence(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw std::invalid_argument("empty sign sequence");
    for (std::int8_t s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    if (signs_[0] != 1) throw std::invalid_argument("first sign must be +");
}

SignSequence SignSequence::from_string(const std::string& text) {
    std::vector<std::int8_t> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+')
            signs.push_back(1);
        else if (c == '-')
            signs.push_back(-1);
        else
            throw std::invalid_argument(std::string("bad sign character '") + c + "'");
    }
    return SignSequence(std::move(signs));
}

std::string SignSequence::to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (std::int8_t s : signs_) out += s == 1 ? '+' : '-';
    return out;
}

SignSequence SignSequence::from_index(int n, std::uint32_t index) {
    if (n < 1 || n > 31) throw std::invalid_argument("sign sequence length out of range");
    if (index >> (n - 1) != 0)
        throw std::invalid_argument("sign index out of range");
    std::vector<std::int8_t> signs(static_cast<size_t>(n), 1);
    for (int pos = 2; pos <= n; ++pos)
        if (index >> (n - pos) & 1u) signs[static_cast<size_t>(pos) - 1] = -1;
    return SignSequence(std::move(signs));
}

std::uint32_t SignSequence::index() const {
    std::uint32_t idx = 0;
    const int n = size();
    for (int pos = 2; pos <= n; ++pos)
        if (sign(pos) == -1) idx |= 1u << (n - pos);
    return idx;
}

int SignSequence::leg() const {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

SignSequence SignSequence::swap_adjacent(int r) const {
    check_index(r, size());
    std::vector<std::int8_t> signs = signs_;
    std::swap(signs[static_cast<size_t>(r) - 1], signs[static_cast<size_t>(r)]);
    return SignSequence(std::move(signs));
}

bool operator<(const SignSequence& a, const SignSequence& b) {
    // + sorts before -, i.e. +1 before -1: compare negated entries.
    return std::lexicographical_compare(
        a.signs_.begin(), a.signs_.end(), b.signs_.begin(), b.signs_.end(),
        [](std::int8_t x, std::int8_t y) { return x > y; });
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    int n = 0;
    for (const auto& row : rows_) {
        if (row.empty()) throw std::invalid_argument("empty tableau row");
        n += static_cast<int>(row.size());
    }
    if (n == 0) throw std::invalid_argument("empty tableau");

    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (size_t a = 0; a < rows_.size(); ++a) {
        if (a > 0 && rows_[a].size() > rows_[a - 1].size())
            throw std::invalid_argument("row lengths must weakly decrease");
        for (size_t b = 0; b < rows_[a].size(); ++b) {
            int e = rows_[a][b];
            if (e < 1 || e > n || seen[static_cast<size_t>(e) - 1])
                throw std::invalid_argument("entries must be a permutation of 1..n");
            seen[static_cast<size_t>(e) - 1] = 1;
            if (b > 0 && rows_[a][b - 1] >= e)
                throw std::invalid_argument("rows must strictly increase");
            if (a > 0 && rows_[a - 1][b] >= e)
                throw std::invalid_argument("columns must strictly increase");
        }
    }
}

std::vector<int> StandardTableau::shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
    return s;
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

bool StandardTableau::is_hook() const {
    for (size_t a = 1; a < rows_.size(); ++a)
        if (rows_[a].size() != 1) return false;
    return true;
}

std::pair<int, int> StandardTableau::box_of(int r) const {
    for (size_t a = 0; a < rows_.size(); ++a)
        for (size_t b = 0; b < rows_[a].size(); ++b)
            if (rows_[a][b] == r) return {static_cast<int>(a) + 1, static_cast<int>(b) + 1};
    throw std::invalid_argument("entry not in tableau");
}

std::vector<int> StandardTableau::residues() const {
    std::vector<int> res(static_cast<size_t>(size()));
    for (size_t a = 0; a < rows_.size(); ++a)
        for (size_t b = 0; b < rows_[a].size(); ++b)
            res[static_cast<size_t>(rows_[a][b]) - 1] = static_cast<int>(b) - static_cast<int>(a);
    return res;
}

std::vector<SignSequence> enumerate_sign_sequences(int n, int leg) {
    HookShape shape(n, leg);  // validates the ranges
    std::vector<SignSequence> out;
    out.reserve(static_cast<size_t>(shape.dimension()));
    const std::uint32_t limit = n == 1 ? 1 : 1u << (n - 1);
    for (std::uint32_t idx = 0; idx < limit; ++idx)
        if (std::popcount(idx) == leg) out.push_back(SignSequence::from_index(n, idx));
    return out;
}

StandardTableau tableau_from_signs(const SignSequence& eps) {
    std::vector<std::vector<int>> rows{{1}};
    for (int r = 2; r <= eps.size(); ++r) {
        if (eps.sign(r) == 1)
            rows[0].push_back(r);
        else
            rows.push_back({r});
    }
    return StandardTableau(std::move(rows));
}

SignSequence signs_from_tableau(const StandardTableau& t) {
    if (!t.is_hook()) throw std::invalid_argument("tableau is not hook-shaped");
    std::vector<std::int8_t> signs(static_cast<size_t>(t.size()), 1);
    for (size_t a = 1; a < t.rows().size(); ++a)
        signs[static_cast<size_t>(t.rows()[a][0]) - 1] = -1;
    return SignSequence(std::move(signs));
}

std::vector<int> residue_sequence(const SignSequence& eps) {
    std::vector<int> res(static_cast<size_t>(eps.size()));
    res[0] = 0;
    for (int r = 1; r < eps.size(); ++r) {
        int step;
        if (eps.sign(r) == 1 && eps.sign(r + 1) == 1)
            step = 1;
        else if (eps.sign(r) == -1 && eps.sign(r + 1) == -1)
            step = -1;
        else if (eps.sign(r) == -1)
            step = r;
        else
            step = -r;
        res[static_cast<size_t>(r)] = res[static_cast<size_t>(r) - 1] + step;
    }
    return res;
}

RationalFn coeff_a(int r, const SignSequence& eps) {
    check_index(r, eps.size());
    const int lo = eps.sign(r), hi = eps.sign(r + 1);
    if (lo == 1 && hi == 1) return RationalFn(LaurentPoly::monomial(1, 1));
    if (lo == -1 && hi == -1) return RationalFn(LaurentPoly::monomial(-1, -1));
    if (lo == -1) return RationalFn(LaurentPoly::monomial(1, r), quantum_integer(r));
    return RationalFn(LaurentPoly::monomial(-1, -r), quantum_integer(r));
}

RationalFn coeff_b(int r, const SignSequence& eps) {
    check_index(r, eps.size());
    const int lo = eps.sign(r), hi = eps.sign(r + 1);
    if (lo == hi) return RationalFn();
    if (lo == -1) return RationalFn(quantum_integer(r + 1), quantum_integer(r));
    return RationalFn(quantum_integer(r - 1), quantum_integer(r));
}

RationalFn coeff_a_bar(int r, const SignSequence& eps) {
    return coeff_a(r, eps).bar();
}

std::pair<RationalFn, RationalFn> general_coeffs(const StandardTableau& t, int r) {
    check_index(r, t.size());
    const std::vector<int> res = t.residues();
    const int d = res[static_cast<size_t>(r) - 1] - res[static_cast<size_t>(r)];
    if (d == 0) throw std::logic_error("equal adjacent residues in a standard tableau");
    const LaurentPoly z = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
    const LaurentPoly den = LaurentPoly(1L) - LaurentPoly::monomial(1, 2 * d);
    RationalFn a(z, den);
    RationalFn b = RationalFn(LaurentPoly::monomial(1, -1)) + a;
    return {std::move(a), std::move(b)};
}

}  // namespace alexsum
