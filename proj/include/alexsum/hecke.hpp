#pragma once

#include "alexsum/braid.hpp"
#include "alexsum/laurent.hpp"
#include "alexsum/tableaux.hpp"

#include <map>
#include <string>
#include <vector>

namespace alexsum {

// Element of the hook-shape module S(lambda): a finite linear combination of
// basis vectors x_eps with rational-function coefficients.  Zero entries are
// never stored.
struct ModuleVector {
    HookShape shape;
    std::map<SignSequence, RationalFn> entries;

    explicit ModuleVector(HookShape s) : shape(s) {}

    static ModuleVector basis(HookShape s, const SignSequence& eps);

    void add(const SignSequence& eps, const RationalFn& value);
    RationalFn coefficient(const SignSequence& eps) const;

    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.shape == b.shape && a.entries == b.entries;
    }
    friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !(a == b); }
};

// Matrix of the H_r^{sign} action on S(lambda), rows and columns indexed by
// enumerate_sign_sequences(shape.n, shape.leg) order.  Columns are 2-sparse
// (diagonal plus at most one swap entry); stored densely because relation
// checks multiply matrices anyway.
struct GeneratorMatrix {
    HookShape shape;
    int index;
    int sign;
    std::vector<std::vector<RationalFn>> m;  // m[row][col]
};

// H_r (sign = +1) or H_r^-1 (sign = -1) applied to a module vector:
//   H_r    x_eps = a_r(eps) x_eps + b_r(eps) x_{s_r eps}
//   H_r^-1 x_eps = a-bar_r(eps) x_eps + b_r(eps) x_{s_r eps}
// Swap terms whose target would need a leading minus vanish on their own
// because b carries the factor [0] = 0 there.
ModuleVector apply_generator(const HookShape& shape, int r, int sign, const ModuleVector& vec);

GeneratorMatrix generator_matrix(const HookShape& shape, int r, int sign);

// Trace of the braid word's image on S(lambda): apply the word to each
// basis vector (last letter first, matching the diagram) and sum the
// coefficients that return to the same label.
RationalFn character(const HookShape& shape, const BraidWord& w);

// The alternating trace formula: (1/[n]) * sum over leg lengths of
// (-1)^leg * character(hook, w).  Always a Laurent polynomial; an inexact
// division here means a bug, not bad input.
LaurentPoly alexander_via_trace(const BraidWord& w);

// Outcome of the generator-relation sweep on every hook module of B_n.
struct HeckeRelationReport {
    int relations_checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Verifies, as matrices on every S(lambda) with 0 <= leg <= n-1:
// the quadratic relation (H_r - v)(H_r + v^-1) = 0, the braid relation
// H_r H_{r+1} H_r = H_{r+1} H_r H_{r+1}, commutation for |r - s| >= 2, and
// H_r^-1 = H_r - (v - v^-1).  Throws std::invalid_argument past the bound.
HeckeRelationReport check_hecke_relations(int n, int bound = 6);

}  // namespace alexsum
