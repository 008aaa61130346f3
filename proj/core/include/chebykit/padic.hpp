#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "chebykit/exactcore.hpp"

namespace chebykit {

constexpr long kPadicDefaultPrecision = 64;

// x = p^val * unit with unit known modulo p^prec (capped relative precision).
// Exact zero: val == kInf. Inexact zero O(p^val): unit == 0, prec == 0.
struct PAdicNumber {
    static constexpr long kInf = LONG_MAX;

    Int p{2};
    long val = kInf;
    Int unit{0};
    long prec = 0;

    bool is_exact_zero() const { return val == kInf; }
    bool is_zero() const { return unit == 0; }
    long abs_prec() const { return is_exact_zero() ? kInf : val + prec; }
    // base-p digits of the unit, least significant first
    std::vector<long> digits() const;
    // representative of p^val * unit modulo p^n (requires val >= 0)
    Int residue(long n) const;
    std::string to_string() const;
};

PAdicNumber padic_exact_zero(const Int& p);
PAdicNumber padic_zero(const Int& p, long abs_prec);
PAdicNumber from_rational(const Rat& a, const Int& p, long N = kPadicDefaultPrecision);
// Same, capped at absolute precision n.
PAdicNumber from_rational_abs(const Rat& a, const Int& p, long n);

PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber operator-(const PAdicNumber& a);
PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber scale(const PAdicNumber& a, const Rat& q);  // exact rational multiple
// a == b to the precision both carry
bool agrees(const PAdicNumber& a, const PAdicNumber& b);
// a == q to the precision of a
bool agrees(const PAdicNumber& a, const Rat& q);

struct PAdicPoly {
    Int p{2};
    std::vector<PAdicNumber> coeffs;  // coefficient of x^i at index i

    static PAdicPoly from_rationals(const std::vector<Rat>& c, const Int& p, long N = kPadicDefaultPrecision);
    static PAdicPoly from_int_poly(const IntPolynomial& f, const Int& p, long N = kPadicDefaultPrecision);
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    PAdicNumber eval(const PAdicNumber& x) const;
};

struct RadiusCheck {
    bool converges = false;
    long nu = 0;      // lower bound for v(x - 2)
    long kappa = 0;   // v(k), clipped to 0 for exact zero
    std::string rule;  // human readable inequality that was tested
};

RadiusCheck cheb_pow_radius(const PAdicNumber& x, const PAdicNumber& k);
RadiusCheck u_radius(const PAdicNumber& x, const PAdicNumber& k);
bool converges_cheb_pow(const PAdicNumber& x, const PAdicNumber& k);
bool converges_u(const PAdicNumber& x, const PAdicNumber& k);

PAdicNumber padic_cheb_pow(const PAdicNumber& x, const PAdicNumber& k);
PAdicNumber padic_u(const PAdicNumber& x, const PAdicNumber& k);

struct HenselResult {
    PAdicNumber root;
    long derivative_valuation = 0;
    std::vector<long> trace;  // v(f(r_j)) per Newton step
};

// Throws NonConvergence when v(f(r0)) <= 2 v(f'(r0)); r0 must be integral.
HenselResult hensel_root(const PAdicPoly& f, const PAdicNumber& r0, long target = kPadicDefaultPrecision);
std::optional<HenselResult> try_hensel_root(const PAdicPoly& f, const PAdicNumber& r0,
                                            long target = kPadicDefaultPrecision);

struct RootSearchResult {
    std::vector<PAdicNumber> roots;  // certified roots in Z_p
    std::vector<Int> undecided;      // live classes mod p^depth never certified
    long depth = 0;
    bool complete() const { return undecided.empty(); }
};

// Roots of f in Z_p by refining live residue classes up to p^depth.
RootSearchResult padic_root_search(const PAdicPoly& f, long depth, long target = kPadicDefaultPrecision);

// a is a square in Q_p
bool is_padic_square(const Rat& a, const Int& p);

}  // namespace chebykit
