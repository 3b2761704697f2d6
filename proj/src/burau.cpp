#include "alexsum/burau.hpp"

#include "alexsum/state_sum.hpp"

#include <stdexcept>
#include <utility>

namespace alexsum {

namespace {

// Reduced Burau image of one letter.  A positive generator differs from
// the identity only in column i: entry (i-1, i) = t when present, (i, i) =
// -t, and (i+1, i) = 1 when present (1-based coordinates; the 1x1 case for
// n = 2 is just (-t)).  Inverses replace t by t^-1 with the off-diagonal
// 1 and t trading places, which makes the product with the positive matrix
// the identity.
BurauMatrix letter_matrix(int strands, const BraidLetter& l) {
    BurauMatrix m = BurauMatrix::identity(strands);
    auto& e = m.entries;
    const size_t i = static_cast<size_t>(l.index);
    const int d = m.dim();

    if (l.sign == 1) {
        const LaurentPoly minus_t = LaurentPoly::monomial(-1, 1);
        const LaurentPoly t = LaurentPoly::monomial(1, 1);
        e[i - 1][i - 1] = minus_t;
        if (i >= 2) e[i - 2][i - 1] = t;
        if (static_cast<int>(i) <= d - 1) e[i][i - 1] = LaurentPoly(1L);
    } else {
        const LaurentPoly minus_tinv = LaurentPoly::monomial(-1, -1);
        const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
        e[i - 1][i - 1] = minus_tinv;
        if (i >= 2) e[i - 2][i - 1] = LaurentPoly(1L);
        if (static_cast<int>(i) <= d - 1) e[i][i - 1] = tinv;
    }
    return m;
}

}  // namespace

BurauMatrix BurauMatrix::identity(int strands) {
    if (strands < 2) throw std::invalid_argument("reduced Burau needs at least 2 strands");
    const size_t d = static_cast<size_t>(strands) - 1;
    BurauMatrix m{strands, std::vector<std::vector<LaurentPoly>>(d, std::vector<LaurentPoly>(d))};
    for (size_t i = 0; i < d; ++i) m.entries[i][i] = LaurentPoly(1L);
    return m;
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
    if (a.strands != b.strands) throw std::invalid_argument("Burau size mismatch");
    const size_t d = static_cast<size_t>(a.dim());
    BurauMatrix out{a.strands, std::vector<std::vector<LaurentPoly>>(d, std::vector<LaurentPoly>(d))};
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) {
            if (a.entries[i][k].is_zero()) continue;
            for (size_t j = 0; j < d; ++j) {
                if (b.entries[k][j].is_zero()) continue;
                out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
            }
        }
    return out;
}

LaurentPoly determinant(const BurauMatrix& m) {
    const size_t d = static_cast<size_t>(m.dim());
    std::vector<std::vector<LaurentPoly>> a = m.entries;
    LaurentPoly prev(1L);
    bool negate = false;

    for (size_t k = 0; k + 1 < d; ++k) {
        if (a[k][k].is_zero()) {
            size_t pivot = k + 1;
            while (pivot < d && a[pivot][k].is_zero()) ++pivot;
            if (pivot == d) return {};
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < d; ++i) {
            for (size_t j = k + 1; j < d; ++j)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = LaurentPoly();
        }
        prev = a[k][k];
    }
    return negate ? -a[d - 1][d - 1] : a[d - 1][d - 1];
}

BurauMatrix reduced_burau(const BraidWord& w) {
    validate(w);
    BurauMatrix m = BurauMatrix::identity(w.strands);
    for (const BraidLetter& l : w.letters) m = m * letter_matrix(w.strands, l);
    return m;
}

LaurentPoly alexander_up_to_units(const BraidWord& w) {
    BurauMatrix m = reduced_burau(w);
    for (int i = 0; i < m.dim(); ++i)
        m.entries[static_cast<size_t>(i)][static_cast<size_t>(i)] -= LaurentPoly(1L);

    LaurentPoly cyclic;  // 1 + t + ... + t^{n-1}
    for (int e = 0; e < w.strands; ++e) cyclic.add_term(e, 1);
    return exact_div(determinant(m), cyclic);
}

bool cross_validate(const BraidWord& w) {
    const HalfTPoly main_value =
        to_alexander_t(to_conway(evaluate_dp(w)), component_count(w));
    const HalfTPoly oracle_value = HalfTPoly::from_integer_t(alexander_up_to_units(w));
    return equal_up_to_unit(main_value, oracle_value);
}

}  // namespace alexsum
