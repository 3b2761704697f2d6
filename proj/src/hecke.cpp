#include "alexsum/hecke.hpp"

#include <stdexcept>
#include <utility>

namespace alexsum {

namespace {

using Matrix = std::vector<std::vector<RationalFn>>;

Matrix identity_matrix(size_t dim) {
    Matrix m(dim, std::vector<RationalFn>(dim));
    for (size_t i = 0; i < dim; ++i) m[i][i] = RationalFn(1L);
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const size_t dim = a.size();
    Matrix out(dim, std::vector<RationalFn>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t k = 0; k < dim; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

Matrix subtract(Matrix a, const Matrix& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
    return a;
}

Matrix scale_identity(const RationalFn& c, size_t dim) {
    Matrix m(dim, std::vector<RationalFn>(dim));
    for (size_t i = 0; i < dim; ++i) m[i][i] = c;
    return m;
}

bool is_zero_matrix(const Matrix& m) {
    for (const auto& row : m)
        for (const RationalFn& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool equal_matrix(const Matrix& a, const Matrix& b) {
    return is_zero_matrix(subtract(a, b));
}

}  // namespace

ModuleVector ModuleVector::basis(HookShape s, const SignSequence& eps) {
    if (eps.size() != s.n || eps.leg() != s.leg)
        throw std::invalid_argument("sign sequence does not label the shape");
    ModuleVector v(s);
    v.entries.emplace(eps, RationalFn(1L));
    return v;
}

void ModuleVector::add(const SignSequence& eps, const RationalFn& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = entries.try_emplace(eps, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries.erase(it);
    }
}

RationalFn ModuleVector::coefficient(const SignSequence& eps) const {
    auto it = entries.find(eps);
    return it == entries.end() ? RationalFn() : it->second;
}

ModuleVector apply_generator(const HookShape& shape, int r, int sign,
                             const ModuleVector& vec) {
    if (vec.shape != shape) throw std::invalid_argument("module vector shape mismatch");
    if (r < 1 || r >= shape.n) throw std::invalid_argument("generator index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");

    ModuleVector out(shape);
    for (const auto& [eps, amp] : vec.entries) {
        const RationalFn diag = sign == 1 ? coeff_a(r, eps) : coeff_a_bar(r, eps);
        out.add(eps, diag * amp);
        const RationalFn b = coeff_b(r, eps);
        if (!b.is_zero()) out.add(eps.swap_adjacent(r), b * amp);
    }
    return out;
}

GeneratorMatrix generator_matrix(const HookShape& shape, int r, int sign) {
    const std::vector<SignSequence> basis = enumerate_sign_sequences(shape.n, shape.leg);
    const size_t dim = basis.size();

    std::map<SignSequence, size_t> row_of;
    for (size_t i = 0; i < dim; ++i) row_of.emplace(basis[i], i);

    GeneratorMatrix g{shape, r, sign, Matrix(dim, std::vector<RationalFn>(dim))};
    for (size_t j = 0; j < dim; ++j) {
        ModuleVector col = apply_generator(shape, r, sign, ModuleVector::basis(shape, basis[j]));
        for (const auto& [eps, value] : col.entries) g.m[row_of.at(eps)][j] = value;
    }
    return g;
}

RationalFn character(const HookShape& shape, const BraidWord& w) {
    if (w.strands != shape.n) throw std::invalid_argument("strand count does not match shape");

    RationalFn trace;
    for (const SignSequence& eps : enumerate_sign_sequences(shape.n, shape.leg)) {
        ModuleVector vec = ModuleVector::basis(shape, eps);
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            vec = apply_generator(shape, it->index, it->sign, vec);
        trace += vec.coefficient(eps);
    }
    return trace;
}

LaurentPoly alexander_via_trace(const BraidWord& w) {
    RationalFn sum;
    for (int leg = 0; leg < w.strands; ++leg) {
        RationalFn chi = character(HookShape(w.strands, leg), w);
        sum += leg % 2 == 0 ? chi : -chi;
    }
    return (sum / RationalFn(quantum_integer(w.strands))).as_laurent();
}

HeckeRelationReport check_hecke_relations(int n, int bound) {
    if (n < 2) throw std::invalid_argument("need at least 2 strands");
    if (n > bound) throw std::invalid_argument("strand count exceeds relation-check bound");

    HeckeRelationReport report;
    auto fail = [&](int leg, const std::string& what) {
        report.failures.push_back("leg " + std::to_string(leg) + ": " + what);
    };

    const RationalFn v(LaurentPoly::monomial(1, 1));
    const RationalFn vinv(LaurentPoly::monomial(1, -1));

    for (int leg = 0; leg < n; ++leg) {
        const HookShape shape(n, leg);
        const size_t dim = static_cast<size_t>(shape.dimension());

        std::vector<Matrix> h, hinv;
        for (int r = 1; r < n; ++r) {
            h.push_back(generator_matrix(shape, r, 1).m);
            hinv.push_back(generator_matrix(shape, r, -1).m);
        }

        for (int r = 1; r < n; ++r) {
            const Matrix& hr = h[static_cast<size_t>(r) - 1];
            const Matrix& hr_inv = hinv[static_cast<size_t>(r) - 1];

            // (H_r - v)(H_r + v^-1) = 0
            Matrix quad = multiply(subtract(hr, scale_identity(v, dim)),
                                   subtract(hr, scale_identity(-vinv, dim)));
            ++report.relations_checked;
            if (!is_zero_matrix(quad))
                fail(leg, "quadratic relation fails at r = " + std::to_string(r));

            // H_r H_r^-1 = I
            ++report.relations_checked;
            if (!equal_matrix(multiply(hr, hr_inv), identity_matrix(dim)))
                fail(leg, "inverse fails at r = " + std::to_string(r));

            // H_r^-1 = H_r - (v - v^-1)
            ++report.relations_checked;
            if (!equal_matrix(hr_inv, subtract(hr, scale_identity(v - vinv, dim))))
                fail(leg, "inverse shift identity fails at r = " + std::to_string(r));

            // Braid relation with the next generator.
            if (r + 1 < n) {
                const Matrix& hs = h[static_cast<size_t>(r)];
                ++report.relations_checked;
                if (!equal_matrix(multiply(multiply(hr, hs), hr),
                                  multiply(multiply(hs, hr), hs)))
                    fail(leg, "braid relation fails at r = " + std::to_string(r));
            }

            // Distant generators commute.
            for (int s = r + 2; s < n; ++s) {
                const Matrix& hs = h[static_cast<size_t>(s) - 1];
                ++report.relations_checked;
                if (!equal_matrix(multiply(hr, hs), multiply(hs, hr)))
                    fail(leg, "commutation fails at r = " + std::to_string(r) +
                                  ", s = " + std::to_string(s));
            }
        }
    }
    return report;
}

}  // namespace alexsum
