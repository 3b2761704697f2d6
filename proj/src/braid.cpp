#include "alexsum/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace alexsum {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

int Permutation::cycle_count() const {
    std::vector<char> seen(images_.size(), 0);
    int cycles = 0;
    for (int i = 1; i <= size(); ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<size_t>(j) - 1]; j = apply(j))
            seen[static_cast<size_t>(j) - 1] = 1;
    }
    return cycles;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> im(static_cast<size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) im[static_cast<size_t>(i) - 1] = a.apply(b.apply(i));
    return Permutation(std::move(im));
}

void validate(const BraidWord& w) {
    if (w.strands < 1) throw std::invalid_argument("strand count must be at least 1");
    for (const BraidLetter& l : w.letters) {
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
        if (l.index < 1 || l.index >= w.strands)
            throw std::invalid_argument("letter index " + std::to_string(l.index) +
                                        " out of range for " + std::to_string(w.strands) +
                                        " strands");
    }
}

BraidWord parse_braid_word(const std::string& text, std::optional<int> strands) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');

    BraidWord w;
    std::istringstream in(cleaned);
    std::string tok;
    int max_index = 0;
    while (in >> tok) {
        int k = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || k == 0)
            throw std::invalid_argument("bad braid letter '" + tok + "'");
        w.letters.push_back({std::abs(k), k > 0 ? 1 : -1});
        max_index = std::max(max_index, std::abs(k));
    }
    w.strands = strands.value_or(max_index + 1);
    validate(w);
    return w;
}

std::string to_text(const BraidWord& w) {
    std::string out;
    for (const BraidLetter& l : w.letters) {
        if (!out.empty()) out += ' ';
        out += std::to_string(l.sign * l.index);
    }
    return out;
}

int exponent_sum(const BraidWord& w) {
    int e = 0;
    for (const BraidLetter& l : w.letters) e += l.sign;
    return e;
}

Permutation underlying_permutation(const BraidWord& w) {
    // Track the top position of the strand entering at each bottom position,
    // applying letters from the back (bottom of the diagram) upward.
    std::vector<int> im(static_cast<size_t>(w.strands));
    std::iota(im.begin(), im.end(), 1);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        for (int& p : im)
            if (p == it->index || p == it->index + 1) p = 2 * it->index + 1 - p;
    return Permutation(std::move(im));
}

int component_count(const BraidWord& w) {
    return underlying_permutation(w).cycle_count();
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord conjugate(const BraidWord& w, const BraidLetter& g) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.letters.size() + 2);
    out.letters.push_back(g);
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    out.letters.push_back(g.inverse());
    validate(out);
    return out;
}

BraidWord markov_stabilize(const BraidWord& w, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    BraidWord out = w;
    out.strands = w.strands + 1;
    out.letters.push_back({w.strands, sign});
    return out;
}

}  // namespace alexsum
