#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebykit/errors.hpp"

namespace chebykit {

using Int = mpz_class;
using Rat = mpq_class;
using Complex = std::complex<double>;

// Dense univariate polynomial over Z, coefficient of x^i at index i.
// The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial from_ints(std::initializer_list<long> coeffs);
    static IntPolynomial constant(const Int& c);
    static IntPolynomial monomial(const Int& c, std::size_t k);
    static IntPolynomial x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const Int& s);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const Int& s) { return a *= s; }
    friend IntPolynomial operator*(const Int& s, IntPolynomial a) { return a *= s; }
    IntPolynomial operator-() const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    IntPolynomial compose(const IntPolynomial& inner) const;
    IntPolynomial derivative() const;
    IntPolynomial negate_arg() const;  // p(-x)
    IntPolynomial pow(unsigned e) const;

    // Division by a divisor whose leading coefficient divides every step; returns
    // nullopt when the quotient would leave Z[x] or the remainder is nonzero.
    std::optional<IntPolynomial> exact_div(const IntPolynomial& d) const;
    // Quotient and remainder by a monic divisor.
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& d) const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    double eval(double x) const;
    Complex eval(Complex x) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Dense bivariate polynomial, coefficient of x^i y^j at (i, j). Stored as a
// rectangular matrix with no all-zero trailing row or column.
class BiPolynomial {
public:
    BiPolynomial() = default;
    explicit BiPolynomial(std::vector<std::vector<Int>> rows);

    static BiPolynomial in_x(const IntPolynomial& p);
    static BiPolynomial in_y(const IntPolynomial& p);
    static BiPolynomial constant(const Int& c);

    int deg_x() const { return static_cast<int>(m_.size()) - 1; }
    int deg_y() const { return m_.empty() ? -1 : static_cast<int>(m_[0].size()) - 1; }
    bool is_zero() const { return m_.empty(); }
    const std::vector<std::vector<Int>>& rows() const { return m_; }
    Int coeff(std::size_t i, std::size_t j) const;

    BiPolynomial& operator+=(const BiPolynomial& o);
    BiPolynomial& operator-=(const BiPolynomial& o);
    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
    friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) { return a.m_ == b.m_; }

    // Specialize y = a.
    IntPolynomial at_y(const Int& a) const;
    Int eval(const Int& x, const Int& y) const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<std::vector<Int>> m_;
};

// Coefficients in the basis {x^©k : k >= 1} plus a separate absolute constant.
// x^©0 = 2 is never stored; algebra folds it into the constant.
struct ChebExpansion {
    Int constant{0};
    std::map<unsigned, Int> coeffs;  // only nonzero entries

    void add(unsigned k, const Int& c);  // k == 0 folds 2c into the constant
    friend bool operator==(const ChebExpansion& a, const ChebExpansion& b) {
        return a.constant == b.constant && a.coeffs == b.coeffs;
    }
    std::string to_string() const;
};

// Element of Z/mZ.
class ResidueElement {
public:
    ResidueElement(Int modulus, const Int& value);

    const Int& modulus() const { return m_; }
    const Int& value() const { return v_; }
    ResidueElement with_value(const Int& v) const { return {m_, v}; }

    friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
    friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b);
    friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b);
    friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
        return a.m_ == b.m_ && a.v_ == b.v_;
    }

private:
    Int m_;
    Int v_;
};

Int binomial(long n, long k);  // 0 outside 0 <= k <= n

IntPolynomial cheb_first_kind(long n);
// S_n; negative n gives -S_{|n|}.
IntPolynomial cheb_second_kind(long n);
IntPolynomial u_odd_poly(long n);
Int k_coeff(long n, long m);

ChebExpansion pow_to_cheb(const IntPolynomial& p);
IntPolynomial cheb_to_pow(const ChebExpansion& e);
IntPolynomial cheby_transform(const IntPolynomial& p);
BiPolynomial cheby_transform(const BiPolynomial& p);
ChebExpansion cheb_mul(const ChebExpansion& a, const ChebExpansion& b);

// Pair ladder over (C_m, C_{m+1}); any commutative ring with the given "two".
template <class R>
R cheb_ladder(const R& x, const R& two, std::uint64_t n) {
    if (n == 0) return two;
    R a = x;
    R b = x * x - two;
    int top = 63;
    while (!((n >> top) & 1u)) --top;
    for (int bit = top - 1; bit >= 0; --bit) {
        R even = a * a - two;
        R odd = a * b - x;
        if ((n >> bit) & 1u) {
            b = x * odd - even;
            a = odd;
        } else {
            a = even;
            b = odd;
        }
    }
    return a;
}

ResidueElement cheb_pow_ladder(const ResidueElement& x, std::uint64_t n);
Rat cheb_pow_ladder(const Rat& x, std::uint64_t n);
Int cheb_pow_ladder(const Int& x, std::uint64_t n);
Complex cheb_pow_ladder(const Complex& x, std::uint64_t n);

// (F_n, L_n): Fibonacci and Lucas polynomials.
std::pair<IntPolynomial, IntPolynomial> fib_lucas_polys(long n);

}  // namespace chebykit
