#pragma once

#include <optional>
#include <string>
#include <vector>

namespace alexsum {

// One letter of a braid word: sigma_index (sign = +1) or its inverse
// (sign = -1).  Valid indices run from 1 to strands-1 of the owning word.
struct BraidLetter {
    int index;
    int sign;

    BraidLetter inverse() const { return {index, -sign}; }

    friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
    friend bool operator!=(const BraidLetter& a, const BraidLetter& b) { return !(a == b); }
};

// A braid word on `strands` strands.  Letters are stored in reading order
// (as written left to right); the diagram applies them right to left, so
// letters.back() acts first at the bottom.  The empty word is the identity
// braid.
struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
    friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }
};

// Permutation of {1..n}; images[i-1] is the image of i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    // Number of cycles, fixed points included.
    int cycle_count() const;

    // Function composition: (a * b)(i) = a(b(i)), so b acts first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

private:
    std::vector<int> images_;
};

// Throws std::invalid_argument when a letter index is out of range for the
// strand count; used at every construction boundary.
void validate(const BraidWord& w);

// Parses a whitespace- or comma-separated list of nonzero signed integers;
// k stands for sigma_|k| with the sign of k.  When `strands` is omitted the
// count is inferred as 1 + max|k| (1 for the empty word).  Throws
// std::invalid_argument on bad tokens or out-of-range letters.
BraidWord parse_braid_word(const std::string& text, std::optional<int> strands = std::nullopt);

// Canonical text form: signed integers joined by single spaces ("" for the
// identity).  parse_braid_word(to_text(w), w.strands) == w.
std::string to_text(const BraidWord& w);

// Sum of letter signs (the exponent sum e(w)).
int exponent_sum(const BraidWord& w);

// Underlying permutation: the product of the transpositions (r, r+1), signs
// ignored, applied in diagram order (last letter first).  Satisfies
// underlying_permutation(concat(a, b)) ==
//     underlying_permutation(a) * underlying_permutation(b).
Permutation underlying_permutation(const BraidWord& w);

// Number of components of the closure = cycle count of the underlying
// permutation.
int component_count(const BraidWord& w);

// Concatenation a·b (b acts first in the diagram).  Strand counts must
// match; throws std::invalid_argument otherwise.
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Markov conjugation: g · w · g^-1 on the same strand count.
BraidWord conjugate(const BraidWord& w, const BraidLetter& g);

// Markov stabilization B_n -> B_{n+1}: append sigma_n^{sign} on n+1 strands.
BraidWord markov_stabilize(const BraidWord& w, int sign);

}  // namespace alexsum
