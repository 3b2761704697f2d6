#include "alexsum/laurent.hpp"

#include <algorithm>
#include <vector>

namespace alexsum {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Dense ascending coefficient vector for an ordinary polynomial in v,
// used by the gcd/division kernels.  No trailing zeros.
using Dense = std::vector<Int>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Splits p = v^shift * (dense polynomial with nonzero constant term).
Dense to_dense(const LaurentPoly& p, int& shift) {
    Dense out;
    if (p.is_zero()) {
        shift = 0;
        return out;
    }
    shift = p.min_exp();
    out.assign(static_cast<size_t>(p.max_exp() - shift) + 1, Int(0));
    for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e - shift)] = c;
    return out;
}

LaurentPoly from_dense(const Dense& a, int shift) {
    LaurentPoly p;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) p.set(static_cast<int>(i) + shift, a[i]);
    return p;
}

Int content(const Dense& a) {
    Int g = 0;
    for (const Int& c : a) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Dense divide_by_int(Dense a, const Int& d) {
    for (Int& c : a) c /= d;
    return a;
}

Dense primitive_part(Dense a) {
    trim(a);
    if (a.empty()) return a;
    Int c = content(a);
    if (a.back() < 0) c = -c;
    return divide_by_int(std::move(a), c);
}

// One round of pseudo-division: returns the pseudo-remainder of a by b.
Dense pseudo_rem(Dense a, const Dense& b) {
    const Int& lb = b.back();
    trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        Int la = a.back();
        size_t k = a.size() - b.size();
        for (Int& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= la * b[i];
        trim(a);
    }
    return a;
}

Dense negate_if_leading_negative(Dense a) {
    if (!a.empty() && a.back() < 0)
        for (Int& c : a) c = -c;
    return a;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
    LaurentPoly p;
    p.set(exp, std::move(coeff));
    return p;
}

bool LaurentPoly::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

void LaurentPoly::set(int exp, Int coeff) {
    if (coeff == 0)
        c_.erase(exp);
    else
        c_[exp] = std::move(coeff);
}

void LaurentPoly::add_term(int exp, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_[e + k] = c;
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_[-e] = c;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1L);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

LaurentPoly quantum_integer(long r) {
    LaurentPoly p;
    if (r == 0) return p;
    long a = r > 0 ? r : -r;
    Int sign = r > 0 ? 1 : -1;
    for (long e = a - 1; e >= 1 - a; e -= 2) p.set(static_cast<int>(e), sign);
    return p;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw InexactDivision("division by zero polynomial");
    if (a.is_zero()) return {};
    int sa = 0, sb = 0;
    Dense A = to_dense(a, sa);
    Dense B = to_dense(b, sb);
    Dense Q(A.size() >= B.size() ? A.size() - B.size() + 1 : 0, Int(0));
    // Classical descending division; every leading-coefficient division
    // must be exact in Z and the remainder must vanish.
    Dense R = A;
    trim(R);
    while (!R.empty() && R.size() >= B.size()) {
        Int q = R.back() / B.back();
        if (q * B.back() != R.back())
            throw InexactDivision("leading coefficient does not divide");
        size_t k = R.size() - B.size();
        Q[k] = q;
        for (size_t i = 0; i < B.size(); ++i) R[k + i] -= q * B[i];
        trim(R);
    }
    if (!R.empty()) throw InexactDivision("nonzero remainder");
    return from_dense(Q, sa - sb);
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    int sa = 0, sb = 0;
    Dense A = to_dense(a, sa);
    Dense B = to_dense(b, sb);
    trim(A);
    trim(B);
    if (A.empty()) return from_dense(negate_if_leading_negative(std::move(B)), 0);
    if (B.empty()) return from_dense(negate_if_leading_negative(std::move(A)), 0);
    Int ca = content(A), cb = content(B);
    Int c = gcd(ca, cb);
    A = divide_by_int(std::move(A), ca);
    B = divide_by_int(std::move(B), cb);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        Dense R = pseudo_rem(A, B);
        A = std::move(B);
        B = primitive_part(std::move(R));
    }
    A = primitive_part(std::move(A));
    for (Int& x : A) x *= c;
    return from_dense(A, 0);
}

RationalFn::RationalFn(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn with zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1L);
        return;
    }
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    // Canonical unit: denominator gets lowest exponent 0 and positive
    // leading coefficient.
    int m = den_.min_exp();
    if (m != 0) {
        num_ = num_.shifted(-m);
        den_ = den_.shifted(-m);
    }
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

LaurentPoly RationalFn::as_laurent() const {
    if (num_.is_zero()) return {};
    if (!den_.is_one()) throw InexactDivision("rational function is not a Laurent polynomial");
    return num_;
}

RationalFn RationalFn::bar() const {
    RationalFn out;
    out.num_ = num_.bar();
    out.den_ = den_.bar();
    out.reduce();
    return out;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    reduce();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
    }
    reduce();
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.num_ = -out.num_;
    return out;
}

Int ConwayPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
}

int ConwayPoly::degree() const {
    if (c_.empty()) throw std::logic_error("degree of zero polynomial");
    return c_.rbegin()->first;
}

void ConwayPoly::set(int exp, Int coeff) {
    if (exp < 0) throw std::logic_error("ConwayPoly exponent must be nonnegative");
    if (coeff == 0)
        c_.erase(exp);
    else
        c_[exp] = std::move(coeff);
}

ConwayPoly to_conway(const LaurentPoly& f) {
    ConwayPoly p;
    LaurentPoly rest = f;
    const LaurentPoly z = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
    while (!rest.is_zero()) {
        int d = rest.max_exp();
        if (d < 0) throw NotAConwayPolynomial("residual has only negative exponents");
        Int c = rest.coeff(d);
        p.set(d, c);
        rest -= LaurentPoly(c) * z.pow(static_cast<unsigned>(d));
    }
    return p;
}

LaurentPoly conway_to_laurent(const ConwayPoly& p) {
    const LaurentPoly z = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
    LaurentPoly out;
    for (const auto& [e, c] : p.terms())
        out += LaurentPoly(c) * z.pow(static_cast<unsigned>(e));
    return out;
}

bool HalfTPoly::has_half_integer() const {
    for (const auto& [e, c] : doubled.terms())
        if (e % 2 != 0) return true;
    return false;
}

HalfTPoly HalfTPoly::from_integer_t(const LaurentPoly& p) {
    HalfTPoly out;
    for (const auto& [e, c] : p.terms()) out.doubled.set(2 * e, c);
    return out;
}

HalfTPoly to_alexander_t(const ConwayPoly& p, int components) {
    if (components < 1) throw std::invalid_argument("components must be >= 1");
    // z = t^{1/2} - t^{-1/2}: in the doubled-exponent lattice this is the
    // same expansion as z = v - v^-1.
    return HalfTPoly{conway_to_laurent(p)};
}

bool equal_up_to_unit(const HalfTPoly& f, const HalfTPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    const LaurentPoly a = f.doubled.shifted(-f.doubled.min_exp());
    const LaurentPoly b = g.doubled.shifted(-g.doubled.min_exp());
    return a == b || a == -b;
}

bool equal_up_to_unit(const LaurentPoly& f_in_t, const LaurentPoly& g_in_t) {
    return equal_up_to_unit(HalfTPoly::from_integer_t(f_in_t), HalfTPoly::from_integer_t(g_in_t));
}

}  // namespace alexsum
