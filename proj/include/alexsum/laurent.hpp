#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace alexsum {

using Int = boost::multiprecision::cpp_int;

// Thrown when a division that must be exact leaves a remainder.  Reaching
// this from a braid-word computation indicates a bug, not a bad input.
struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by to_conway when the input is not a polynomial in v - v^-1.
struct NotAConwayPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent polynomial in v with arbitrary-precision integer coefficients.
// Stored as exponent -> coefficient with no zero entries; the zero
// polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant) { set(0, Int(constant)); }
    explicit LaurentPoly(Int constant) { set(0, std::move(constant)); }

    static LaurentPoly monomial(Int coeff, int exp);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    const std::map<int, Int>& terms() const { return c_; }
    Int coeff(int exp) const;
    // min/max exponent with nonzero coefficient; requires nonzero poly.
    int min_exp() const;
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly operator-() const;

    // Multiplication by the unit v^k.
    LaurentPoly shifted(int k) const;
    // The bar involution v -> v^-1 (negates all exponents).
    LaurentPoly bar() const;
    LaurentPoly pow(unsigned e) const;

    // Strict total order so LaurentPoly can key containers.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ < b.c_; }

    void set(int exp, Int coeff);
    void add_term(int exp, const Int& coeff);

private:
    std::map<int, Int> c_;
};

// [r] = (v^r - v^-r)/(v - v^-1); [0] = 0 and [-r] = -[r].
LaurentPoly quantum_integer(long r);

// Exact quotient a / b in Z[v, v^-1]; throws InexactDivision if b does not
// divide a (or b is zero).
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// gcd in Z[v, v^-1], canonicalized: lowest exponent 0, positive leading
// coefficient, integer content included.  gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Reduced fraction num/den over Z[v, v^-1].  Canonical form: gcd(num, den)
// is a unit, den has lowest exponent 0 and positive leading coefficient.
// Equality is therefore structural.
class RationalFn {
public:
    RationalFn() : num_(), den_(1L) {}
    RationalFn(LaurentPoly n) : num_(std::move(n)), den_(1L) {}
    RationalFn(long n) : num_(n), den_(1L) {}
    RationalFn(LaurentPoly n, LaurentPoly d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the canonical denominator is 1, i.e. the value lies in Z[v, v^-1].
    bool is_laurent() const { return den_.is_one(); }
    // Cast to LaurentPoly; throws InexactDivision when the denominator is not 1.
    LaurentPoly as_laurent() const;

    RationalFn bar() const;

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    RationalFn operator-() const;

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

private:
    void reduce();

    LaurentPoly num_;
    LaurentPoly den_;
};

// Polynomial in z = v - v^-1 with nonnegative exponents and integer
// coefficients; no stored zero coefficients.
class ConwayPoly {
public:
    ConwayPoly() = default;
    ConwayPoly(long constant) { set(0, Int(constant)); }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Int>& terms() const { return c_; }
    Int coeff(int exp) const;
    int degree() const;  // requires nonzero

    void set(int exp, Int coeff);

    friend bool operator==(const ConwayPoly& a, const ConwayPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ConwayPoly& a, const ConwayPoly& b) { return !(a == b); }

private:
    std::map<int, Int> c_;
};

// Writes f as a polynomial in z = v - v^-1 by greedy elimination of the
// leading term; throws NotAConwayPolynomial when no such expression exists.
ConwayPoly to_conway(const LaurentPoly& f);

// Expands p(v - v^-1) back into Z[v, v^-1] (inverse of to_conway).
LaurentPoly conway_to_laurent(const ConwayPoly& p);

// Laurent polynomial in t allowing half-integer exponents.  Exponents are
// stored doubled: a term with stored exponent k stands for c * t^{k/2}.
struct HalfTPoly {
    LaurentPoly doubled;

    bool is_zero() const { return doubled.is_zero(); }
    // True when some t-exponent is a genuine half-integer.
    bool has_half_integer() const;

    static HalfTPoly from_integer_t(const LaurentPoly& p);  // t-exponents doubled

    friend bool operator==(const HalfTPoly& a, const HalfTPoly& b) {
        return a.doubled == b.doubled;
    }
    friend bool operator!=(const HalfTPoly& a, const HalfTPoly& b) { return !(a == b); }
};

// Substitutes z = t^{1/2} - t^{-1/2} into a Conway polynomial.  The result
// has integer t-exponents exactly when `components` is odd.
HalfTPoly to_alexander_t(const ConwayPoly& p, int components);

// True iff f = ±t^{k/2} * g for some integer k (0 = ±t^{k/2} * 0 counts).
bool equal_up_to_unit(const HalfTPoly& f, const HalfTPoly& g);
bool equal_up_to_unit(const LaurentPoly& f_in_t, const LaurentPoly& g_in_t);

}  // namespace alexsum
