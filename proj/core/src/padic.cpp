#include "chebykit/padic.hpp"

#include <algorithm>
#include <sstream>

#include "chebykit/arith.hpp"

namespace chebykit {

namespace {

constexpr long kMaxSeriesTerms = 200000;
constexpr long kHenselMaxSteps = 400;

Int ppow(const Int& p, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inverse(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw DomainError("p-adic unit not invertible");
    return r;
}

long vp(const Int& n, const Int& p) {
    auto v = valuation(n, p);
    return v ? *v : PAdicNumber::kInf;
}

void same_prime(const PAdicNumber& a, const PAdicNumber& b) {
    if (a.p != b.p) throw DomainError("p-adic numbers over different primes");
}

// Normalize p^val * u known to absolute precision abs.
PAdicNumber make(const Int& p, long val, const Int& u, long abs) {
    PAdicNumber r;
    r.p = p;
    if (abs == PAdicNumber::kInf) throw DomainError("p-adic values need finite precision");
    if (u == 0 || val >= abs) return padic_zero(p, abs);
    Int m = mod_pos(u, ppow(p, abs - val));
    if (m == 0) return padic_zero(p, abs);
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++val;
    }
    r.val = val;
    r.prec = abs - val;
    r.unit = m;
    return r;
}

long sat_add(long a, long b) {
    if (a == PAdicNumber::kInf || b == PAdicNumber::kInf) return PAdicNumber::kInf;
    return a + b;
}

long floor_log(long m, long p) {
    long r = 0;
    for (long v = p; v <= m; v *= p) ++r;
    return r;
}

}  // namespace

std::vector<long> PAdicNumber::digits() const {
    std::vector<long> d;
    Int u = unit;
    for (long i = 0; i < prec; ++i) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
        d.push_back(r.get_si());
        u = q;
    }
    return d;
}

Int PAdicNumber::residue(long n) const {
    if (is_zero() || val >= n) return 0;
    if (val < 0) throw DomainError("residue of a non-integral p-adic number");
    return mod_pos(unit * ppow(p, val), ppow(p, n));
}

std::string PAdicNumber::to_string() const {
    std::ostringstream os;
    if (is_exact_zero()) return "0";
    if (is_zero()) {
        os << "O(" << p.get_str() << "^" << val << ")";
        return os.str();
    }
    os << p.get_str() << "^" << val << " * " << unit.get_str() << " + O(" << p.get_str() << "^" << abs_prec() << ")";
    return os.str();
}

PAdicNumber padic_exact_zero(const Int& p) {
    PAdicNumber r;
    r.p = p;
    return r;
}

PAdicNumber padic_zero(const Int& p, long abs_prec) {
    if (abs_prec == PAdicNumber::kInf) return padic_exact_zero(p);
    PAdicNumber r;
    r.p = p;
    r.val = abs_prec;
    r.prec = 0;
    r.unit = 0;
    return r;
}

PAdicNumber from_rational(const Rat& a, const Int& p, long N) {
    if (N < 1) throw DomainError("p-adic precision must be >= 1");
    if (!is_probable_prime(p)) throw DomainError("p-adic prime expected");
    if (a == 0) return padic_exact_zero(p);
    long v = *valuation(a, p);
    return from_rational_abs(a, p, v + N);
}

PAdicNumber from_rational_abs(const Rat& a, const Int& p, long n) {
    if (a == 0) return padic_zero(p, n);
    Rat q = a;
    q.canonicalize();
    Int num = q.get_num(), den = q.get_den();
    long vn = vp(num, p), vd = vp(den, p);
    num /= ppow(p, vn);
    den /= ppow(p, vd);
    long v = vn - vd;
    if (n <= v) return padic_zero(p, n);
    Int m = ppow(p, n - v);
    return make(p, v, mod_pos(num * inverse(den, m), m), n);
}

PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) {
    same_prime(a, b);
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    const long abs = std::min(a.abs_prec(), b.abs_prec());
    const long v = std::min(a.val, b.val);
    Int s = 0;
    if (!a.is_zero() && a.val < abs) s += a.unit * ppow(a.p, a.val - v);
    if (!b.is_zero() && b.val < abs) s += b.unit * ppow(b.p, b.val - v);
    return make(a.p, v, s, abs);
}

PAdicNumber operator-(const PAdicNumber& a) {
    if (a.is_zero()) return a;
    return make(a.p, a.val, -a.unit, a.abs_prec());
}

PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) { return a + (-b); }

PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b) {
    same_prime(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return padic_exact_zero(a.p);
    if (a.is_zero() || b.is_zero()) return padic_zero(a.p, a.val + b.val);
    return make(a.p, a.val + b.val, a.unit * b.unit, a.val + b.val + std::min(a.prec, b.prec));
}

PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b) {
    same_prime(a, b);
    if (b.is_zero()) throw DomainError("p-adic division by zero");
    if (a.is_exact_zero()) return a;
    if (a.is_zero()) return padic_zero(a.p, a.val - b.val);
    const long prec = std::min(a.prec, b.prec);
    const Int m = ppow(a.p, prec);
    return make(a.p, a.val - b.val, a.unit * inverse(b.unit, m), a.val - b.val + prec);
}

PAdicNumber scale(const PAdicNumber& a, const Rat& q) {
    if (q == 0) return padic_exact_zero(a.p);
    if (a.is_exact_zero()) return a;
    Rat c = q;
    c.canonicalize();
    Int num = c.get_num(), den = c.get_den();
    long vn = vp(num, a.p), vd = vp(den, a.p);
    num /= ppow(a.p, vn);
    den /= ppow(a.p, vd);
    const long shift = vn - vd;
    if (a.is_zero()) return padic_zero(a.p, a.val + shift);
    const Int m = ppow(a.p, a.prec);
    return make(a.p, a.val + shift, a.unit * num * inverse(den, m), a.abs_prec() + shift);
}

bool agrees(const PAdicNumber& a, const PAdicNumber& b) { return (a - b).is_zero(); }

bool agrees(const PAdicNumber& a, const Rat& q) {
    if (a.is_exact_zero()) return q == 0;
    return (a - from_rational_abs(q, a.p, a.abs_prec())).is_zero();
}

PAdicPoly PAdicPoly::from_rationals(const std::vector<Rat>& c, const Int& p, long N) {
    PAdicPoly f;
    f.p = p;
    for (const auto& v : c) f.coeffs.push_back(from_rational(v, p, N));
    while (!f.coeffs.empty() && f.coeffs.back().is_exact_zero()) f.coeffs.pop_back();
    return f;
}

PAdicPoly PAdicPoly::from_int_poly(const IntPolynomial& g, const Int& p, long N) {
    std::vector<Rat> c(g.coeffs().begin(), g.coeffs().end());
    return from_rationals(c, p, N);
}

PAdicNumber PAdicPoly::eval(const PAdicNumber& x) const {
    PAdicNumber acc = padic_exact_zero(p);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

namespace {

long nu_of(const PAdicNumber& y) { return y.is_exact_zero() ? PAdicNumber::kInf : y.val; }

RadiusCheck radius_common(const PAdicNumber& x, const PAdicNumber& k, bool u_series) {
    same_prime(x, k);
    RadiusCheck rc;
    const Int& p = x.p;
    const PAdicNumber y = x - from_rational_abs(2, p, std::max<long>(x.abs_prec(), 1));
    rc.nu = nu_of(y);
    rc.kappa = k.is_exact_zero() ? 0 : k.val;
    if (x.is_exact_zero()) rc.nu = vp(2, p);
    if (rc.nu == PAdicNumber::kInf) {
        rc.converges = true;
        rc.rule = "x = 2";
        return rc;
    }
    const long pm1 = p.get_si() - 1;
    const long v4 = u_series ? vp(4, p) : 0;
    const long nu = rc.nu, ka = rc.kappa;
    std::ostringstream os;
    if (ka >= 0 && (!u_series || p != 2 || ka == 0)) {
        rc.converges = nu > v4;
        os << "v(x-2) > " << v4 << " (v(k) >= 0)";
    } else {
        const long kk = std::min(ka, 0L);
        rc.converges = nu * pm1 > (v4 - 2 * kk) * pm1 + 2;
        os << "v(x-2)*(p-1) > (" << v4 << " - 2*" << kk << ")*(p-1) + 2";
    }
    os << "; v(x-2) = " << nu << ", v(k) = " << ka;
    rc.rule = os.str();
    return rc;
}

// Lower bound for the valuation of the m-th series term (m >= 1).
long cheb_tail(long m, long nu, long ka, long p) {
    if (ka >= 0) return m * nu - floor_log(m, p);
    return m * (nu + 2 * ka) - (2 * m - 1) / (p - 1) + (p == 2 ? 1 : 0);
}

long u_tail(long m, long nu, long ka, long p) {
    if (p == 2) {
        if (ka == 0) return m * (nu - 1);
        if (ka > 0) return m * (nu - 4) + ka;
        return m * (nu + 2 * ka - 4) + ka;
    }
    if (ka >= 0) return m * nu - floor_log(2 * m + 1, p);
    return m * (nu + 2 * ka) + ka - (2 * m) / (p - 1);
}

PAdicNumber add_rat(const PAdicNumber& a, const Rat& q) {
    return a + from_rational_abs(q, a.p, a.abs_prec());
}

long target_of(const PAdicNumber& y, const PAdicNumber& k) {
    long t = y.abs_prec();
    if (!k.is_exact_zero()) t = std::min(t, k.abs_prec() + (k.val < 0 ? -k.val : 0));
    return t == PAdicNumber::kInf ? kPadicDefaultPrecision : t;
}

}  // namespace

RadiusCheck cheb_pow_radius(const PAdicNumber& x, const PAdicNumber& k) { return radius_common(x, k, false); }
RadiusCheck u_radius(const PAdicNumber& x, const PAdicNumber& k) { return radius_common(x, k, true); }
bool converges_cheb_pow(const PAdicNumber& x, const PAdicNumber& k) { return cheb_pow_radius(x, k).converges; }
bool converges_u(const PAdicNumber& x, const PAdicNumber& k) { return u_radius(x, k).converges; }

PAdicNumber padic_cheb_pow(const PAdicNumber& x, const PAdicNumber& k) {
    const RadiusCheck rc = cheb_pow_radius(x, k);
    if (!rc.converges) throw DomainError("outside the convergence radius: " + rc.rule);
    const Int& p = x.p;
    const PAdicNumber y = x - from_rational_abs(2, p, std::max<long>(x.abs_prec(), 1));
    const long T = target_of(y, k);
    if (y.is_exact_zero() || k.is_exact_zero()) return from_rational_abs(2, p, T);
    const PAdicNumber k2 = k * k;
    PAdicNumber term = from_rational_abs(2, p, T);
    PAdicNumber sum = term;
    const long pl = p.get_si();
    for (long n = 0; n < kMaxSeriesTerms; ++n) {
        if (cheb_tail(n + 1, rc.nu, rc.kappa, pl) >= T) return sum;
        const long nn = n;
        term = scale(add_rat(k2, Rat(-nn * nn)) * term * y, Rat(1, (2 * nn + 1) * (2 * nn + 2)));
        sum = sum + term;
    }
    throw NonConvergence("p-adic Chebyshev power series exceeded the term budget");
}

PAdicNumber padic_u(const PAdicNumber& x, const PAdicNumber& k) {
    const RadiusCheck rc = u_radius(x, k);
    if (!rc.converges) throw DomainError("outside the convergence radius: " + rc.rule);
    const Int& p = x.p;
    if (k.is_exact_zero()) return k;
    const PAdicNumber y = x - from_rational_abs(2, p, std::max<long>(x.abs_prec(), 1));
    const long T = std::max(target_of(y, k), k.abs_prec());
    if (y.is_exact_zero()) return k;
    const PAdicNumber k2 = k * k;
    PAdicNumber term = k, sum = k;
    const long pl = p.get_si();
    for (long i = 0; i < kMaxSeriesTerms; ++i) {
        if (u_tail(i + 1, rc.nu, rc.kappa, pl) >= T) return sum;
        const long o = 2 * i + 1;
        term = scale(add_rat(k2, Rat(-o * o)) * term * y, Rat(1, (o + 1) * (o + 2) * 4));
        sum = sum + term;
    }
    throw NonConvergence("p-adic U series exceeded the term budget");
}

namespace {

// f scaled by a power of p to integral coefficients, as residues modulo p^A.
struct IntegralPoly {
    std::vector<Int> c;
    long A = 0;
};

IntegralPoly integral_form(const PAdicPoly& f) {
    if (f.coeffs.empty()) throw DomainError("p-adic root search on the zero polynomial");
    long vmin = PAdicNumber::kInf;
    for (const auto& c : f.coeffs)
        if (!c.is_zero()) vmin = std::min(vmin, c.val);
    if (vmin == PAdicNumber::kInf) throw DomainError("polynomial vanishes to its precision");
    IntegralPoly g;
    g.A = PAdicNumber::kInf;
    for (const auto& c : f.coeffs) g.A = std::min(g.A, sat_add(c.abs_prec(), -vmin));
    if (g.A == PAdicNumber::kInf) throw DomainError("polynomial vanishes to its precision");
    for (const auto& c : f.coeffs) {
        if (c.is_zero()) {
            g.c.emplace_back(0);
            continue;
        }
        // p^-vmin * c as a residue mod p^A
        PAdicNumber s = c;
        s.val -= vmin;
        g.c.push_back(s.residue(g.A));
    }
    return g;
}

Int eval_mod(const std::vector<Int>& c, const Int& x, const Int& m) {
    Int acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = mod_pos(acc * x + c[i], m);
    return acc;
}

Int deriv_eval_mod(const std::vector<Int>& c, const Int& x, const Int& m) {
    Int acc = 0;
    for (std::size_t i = c.size(); i-- > 1;) acc = mod_pos(acc * x + c[i] * static_cast<unsigned long>(i), m);
    return acc;
}

long val_capped(const Int& v, const Int& p, long cap) {
    if (v == 0) return cap;
    return std::min(vp(v, p), cap);
}

std::optional<HenselResult> lift(const IntegralPoly& g, const Int& p, Int r, long target) {
    const Int M = ppow(p, g.A);
    r = mod_pos(r, M);
    const long e = val_capped(deriv_eval_mod(g.c, r, M), p, g.A);
    Int fr = eval_mod(g.c, r, M);
    long v = val_capped(fr, p, g.A);
    if (e >= g.A || v <= 2 * e) return std::nullopt;
    HenselResult out;
    out.derivative_valuation = e;
    out.trace.push_back(v);
    for (long step = 0; step < kHenselMaxSteps && v < g.A && v - e < target; ++step) {
        const Int d = deriv_eval_mod(g.c, r, M);
        const Int pe = ppow(p, e);
        const Int du = d / pe;
        const Int m = ppow(p, g.A - e);
        // r <- r - f(r) / f'(r)
        const Int delta = mod_pos((fr / pe) * inverse(du, m), m);
        r = mod_pos(r - delta, M);
        fr = eval_mod(g.c, r, M);
        v = val_capped(fr, p, g.A);
        out.trace.push_back(v);
    }
    const long abs = std::min(v, g.A) - e;
    out.root = make(p, 0, r, abs);
    return out;
}

}  // namespace

std::optional<HenselResult> try_hensel_root(const PAdicPoly& f, const PAdicNumber& r0, long target) {
    if (!r0.is_zero() && r0.val < 0) throw DomainError("hensel_root needs an integral starting point");
    const IntegralPoly g = integral_form(f);
    return lift(g, f.p, r0.residue(std::min(g.A, r0.abs_prec())), target);
}

HenselResult hensel_root(const PAdicPoly& f, const PAdicNumber& r0, long target) {
    auto r = try_hensel_root(f, r0, target);
    if (!r) throw NonConvergence("Newton condition v(f(r)) > 2 v(f'(r)) fails at the starting point");
    return *r;
}

RootSearchResult padic_root_search(const PAdicPoly& f, long depth, long target) {
    if (depth < 1) throw DomainError("root search depth must be >= 1");
    if (f.degree() > 6) throw DomainError("root search supports degree <= 6");
    const Int& p = f.p;
    if (ppow(p, depth) > 10000000) throw DomainError("root search needs p^depth <= 10^7");
    const IntegralPoly g = integral_form(f);
    const Int M = ppow(p, g.A);
    RootSearchResult res;
    res.depth = depth;
    std::vector<Int> live{0};
    Int pd = 1;
    for (long d = 1; d <= depth && !live.empty(); ++d) {
        std::vector<Int> next;
        for (const auto& base : live)
            for (long j = 0; j < p; ++j) {
                const Int r = base + pd * j;
                const Int fr = eval_mod(g.c, r, M);
                if (val_capped(fr, p, g.A) < d) continue;
                const long e = val_capped(deriv_eval_mod(g.c, r, M), p, g.A);
                const long v = val_capped(fr, p, g.A);
                // the Newton root then lies in this class and is its only root
                if (d > e && v > 2 * e && v - e >= d) {
                    if (auto h = lift(g, p, r, target)) {
                        res.roots.push_back(h->root);
                        continue;
                    }
                }
                next.push_back(r);
            }
        live = std::move(next);
        pd *= p;
    }
    res.undecided = std::move(live);
    return res;
}

bool is_padic_square(const Rat& a, const Int& p) {
    if (a == 0) return true;
    long v = *valuation(a, p);
    if (v % 2) return false;
    Rat q = a;
    q.canonicalize();
    Int num = q.get_num(), den = q.get_den();
    num /= ppow(p, vp(num, p));
    den /= ppow(p, vp(den, p));
    const Int u = num * den;
    if (p == 2) return mod_pos(u, 8) == 1;
    return mpz_legendre(mod_pos(u, p).get_mpz_t(), p.get_mpz_t()) == 1;
}

}  // namespace chebykit
