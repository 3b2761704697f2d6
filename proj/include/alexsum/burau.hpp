#pragma once

#include "alexsum/braid.hpp"
#include "alexsum/laurent.hpp"

#include <vector>

namespace alexsum {

// (n-1) x (n-1) matrix over Z[t, t^-1] (LaurentPoly with the variable read
// as t): the image of a braid word under the reduced Burau representation.
struct BurauMatrix {
    int strands;
    std::vector<std::vector<LaurentPoly>> entries;

    static BurauMatrix identity(int strands);

    int dim() const { return strands - 1; }

    friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
    friend bool operator==(const BurauMatrix& a, const BurauMatrix& b) {
        return a.strands == b.strands && a.entries == b.entries;
    }
    friend bool operator!=(const BurauMatrix& a, const BurauMatrix& b) { return !(a == b); }
};

// Exact determinant via fraction-free (Bareiss) elimination.
LaurentPoly determinant(const BurauMatrix& m);

// Product of the standard reduced Burau images of the letters, in reading
// order.  Satisfies det = (-t)^{exponent_sum(w)}.  Requires n >= 2.
BurauMatrix reduced_burau(const BraidWord& w);

// det(reduced_burau(w) - I) / (1 + t + ... + t^{n-1}): the Alexander
// polynomial of the closure up to a unit +-t^k.  Requires n >= 2; an
// inexact division signals a bug.
LaurentPoly alexander_up_to_units(const BraidWord& w);

// True iff the state-sum value, rewritten in t via z = t^{1/2} - t^{-1/2},
// agrees with alexander_up_to_units(w) up to a unit +-t^{k/2} (two zeros
// count as agreeing).  Requires n >= 2.
bool cross_validate(const BraidWord& w);

}  // namespace alexsum
