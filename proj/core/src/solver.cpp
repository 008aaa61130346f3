#include "chebykit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "chebykit/analytic.hpp"
#include "chebykit/arith.hpp"
#include "chebykit/factorcyc.hpp"
#include "chebykit/numeric.hpp"

namespace chebykit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTowerTol = 1e-9;

long mod(long a, long n) { return ((a % n) + n) % n; }

Complex second_kind_at(long k, Complex x) {
    if (k < 0) return -second_kind_at(-k, x);
    Complex a = 0, b = 1;
    if (k == 0) return a;
    for (long i = 1; i < k; ++i) {
        Complex c = x * b - a;
        a = b;
        b = c;
    }
    return b;
}

double rel(Complex err, Complex scale) { return std::abs(err) / std::max(1.0, std::abs(scale)); }

TowerStep make_step(std::string kind, long degree, Complex radicand, Complex value) {
    Complex lhs;
    if (kind == "ordinary-root")
        lhs = std::pow(value, static_cast<double>(degree));
    else if (kind == "square-root")
        lhs = value * value;
    else
        lhs = cheb_pow_ladder(value, static_cast<std::uint64_t>(degree));
    return {std::move(kind), degree, radicand, value, rel(lhs - radicand, radicand)};
}

void require_odd_prime(long q) {
    if (q < 3 || !is_prime_small(q)) throw DomainError("tower witnesses need an odd prime q");
}

}  // namespace

Complex IndexedRootSet::root(long i) const { return roots[static_cast<std::size_t>(mod(i, n))]; }

IndexedRootSet indexed_roots(Complex t, long n) {
    if (n < 1) throw DomainError("indexed_roots needs n >= 1");
    IndexedRootSet s;
    s.t = t;
    s.n = n;
    s.zeta = std::polar(1.0, 2 * kPi / static_cast<double>(n));
    s.mu = s.zeta + 1.0 / s.zeta;
    s.u = std::exp(cheb_log(principal_radical(t, n)).value());
    Complex zi = 1;
    for (long i = 0; i < n; ++i) {
        s.roots.push_back(zi * s.u + 1.0 / (zi * s.u));
        zi *= s.zeta;
    }
    return s;
}

std::array<Complex, 2> MonicQuadratic::roots() const {
    Complex d = std::sqrt(b * b - 4.0 * c);
    return {(-b + d) / 2.0, (-b - d) / 2.0};
}

MonicQuadratic sibling_quadratic(const IndexedRootSet& set, long k, long i) {
    const auto ai = static_cast<std::uint64_t>(std::labs(i));
    Complex rk = set.root(k);
    Complex mi = cheb_pow_ladder(set.mu, ai);
    Complex m2i = cheb_pow_ladder(set.mu, 2 * ai);
    return {-mi * rk, rk * rk - 2.0 + m2i};
}

Complex recover_root(const IndexedRootSet& set, long i, long j, long k) {
    const long e = j - i;
    Complex me = cheb_pow_ladder(set.mu, static_cast<std::uint64_t>(std::labs(e)));
    return second_kind_at(k, me) * set.root(j) - second_kind_at(k - 1, me) * set.root(i);
}

std::vector<Complex> recover_all(const IndexedRootSet& set, long i, long j) {
    if (gcd_long(j - i, set.n) != 1) throw DomainError("full recovery needs gcd(j - i, n) = 1");
    std::vector<Complex> out;
    for (long k = 0; k < set.n; ++k) out.push_back(recover_root(set, i, j, k));
    return out;
}

std::array<Complex, 3> cubic_cheb_solve(const Rat& b, const Rat& c) {
    if (b == 0) throw DomainError("cubic_cheb_solve needs b != 0");
    const double bd = b.get_d(), cd = c.get_d();
    // x = z / alpha with alpha^2 = -3/b turns the cubic into z^©3 = h
    const Complex alpha = std::sqrt(Complex(-3.0 / bd));
    const Complex h = -cd * alpha * alpha * alpha;
    const Complex z1 = principal_radical(h, 3);
    const Complex z2 = -principal_radical(-h, 3);
    const Complex z3 = -z1 - z2;
    return {z1 / alpha, z2 / alpha, z3 / alpha};
}

CubicEps cubic_eps(const Rat& b, const Rat& c) {
    if (b == 0) throw DomainError("cubic_eps needs b != 0");
    CubicEps r;
    const Rat b3 = b * b * b;
    r.delta = -4 * b3 - 27 * c * c;
    r.eps = -2 - 27 * c * c / b3;
    r.eps_from_delta = 2 + r.delta / b3;
    r.forms_agree = r.eps == r.eps_from_delta;
    return r;
}

TowerWitness cheb_to_radical_witness(long q, Complex t) {
    require_odd_prime(q);
    TowerWitness w;
    w.q = q;
    w.t = t;
    w.target = "x^©q = t";
    const double qd = static_cast<double>(q);
    const Complex zeta = std::polar(1.0, 2 * kPi / qd);
    w.steps.push_back(make_step("ordinary-root", q, 1.0, zeta));
    if (std::abs(t - 2.0) == 0.0 || std::abs(t + 2.0) == 0.0) {
        // roots of C_q(x) -+ 2 in closed form
        const double shift = t.real() > 0 ? 0.0 : kPi / qd;
        for (long i = 0; i < q; ++i) w.values.emplace_back(2 * std::cos(shift + 2 * kPi * static_cast<double>(i) / qd), 0.0);
    } else {
        const Complex s = std::sqrt(t * t - 4.0);
        w.steps.push_back(make_step("square-root", 2, t * t - 4.0, s));
        const Complex rad = (s + t) / 2.0;
        const Complex r = std::pow(rad, 1.0 / qd);
        w.steps.push_back(make_step("ordinary-root", q, rad, r));
        Complex zi = 1;
        for (long i = 0; i < q; ++i) {
            w.values.push_back(zi * r + 1.0 / (zi * r));
            zi *= zeta;
        }
    }
    for (const auto& st : w.steps) w.max_residual = std::max(w.max_residual, st.residual);
    for (const auto& v : w.values)
        w.max_residual = std::max(w.max_residual, rel(cheb_pow_ladder(v, static_cast<std::uint64_t>(q)) - t, t));
    w.verified = w.max_residual < kTowerTol;
    return w;
}

TowerWitness radical_to_cheb_witness(long q, Complex t) {
    require_odd_prime(q);
    if (t == Complex(0)) throw DomainError("radical_to_cheb_witness needs t != 0");
    TowerWitness w;
    w.q = q;
    w.t = t;
    w.target = "x^q = t";
    const Complex mu = branch_radical(2.0, q, 2);
    w.steps.push_back(make_step("chebyshev-root", q, 2.0, mu));
    const Complex lambda = principal_radical(mu * mu - 6.0, 2);
    w.steps.push_back(make_step("chebyshev-root", 2, mu * mu - 6.0, lambda));
    const Complex zeta = (mu + lambda) / 2.0;
    const Complex tt = t + 1.0 / t;
    const Complex s = principal_radical(tt, q);
    w.steps.push_back(make_step("chebyshev-root", q, tt, s));
    const Complex r = principal_radical(s * s - 6.0, 2);
    w.steps.push_back(make_step("chebyshev-root", 2, s * s - 6.0, r));
    Complex root = (s + r) / 2.0;
    const double qd = static_cast<double>(q);
    if (std::abs(std::pow(root, qd) - t) > std::abs(std::pow(1.0 / root, qd) - t)) root = 1.0 / root;
    Complex zi = 1;
    for (long i = 0; i < q; ++i) {
        w.values.push_back(zi * root);
        zi *= zeta;
    }
    for (const auto& st : w.steps) w.max_residual = std::max(w.max_residual, st.residual);
    for (const auto& v : w.values) w.max_residual = std::max(w.max_residual, rel(std::pow(v, qd) - t, t));
    w.verified = w.max_residual < kTowerTol;
    return w;
}

namespace {

// Chebyshev cube roots b of v in char 2 (b^3 + b = v), skipping `exclude`.
std::optional<GF2mElement> cheb_cube_root_gf2(const GF2mElement& v, const GF2mElement& exclude) {
    for (std::uint32_t bits = 0; bits < (1u << v.m); ++bits) {
        GF2mElement b{v.m, bits};
        if (b == exclude) continue;
        if (b * b * b + b == v) return b;
    }
    return std::nullopt;
}

// Runs `attempt` in GF(2^m), then in GF(2^{2m}) on the embedded input.
Char2Solution with_extension(const GF2mElement& x, const std::function<std::optional<Char2Solution>(const GF2mElement&)>& attempt) {
    if (auto s = attempt(x)) return *s;
    if (2 * x.m > 16) throw Undecided("no solution in GF(2^m) and the quadratic extension exceeds GF(2^16)");
    if (auto s = attempt(gf2_embed(x))) {
        s->in_extension = true;
        return *s;
    }
    throw Undecided("no solution in GF(2^m) or its quadratic extension");
}

}  // namespace

Char2Solution char2_unit_quadratic(const GF2mElement& a) {
    if (a == gf2_one(a.m)) throw DomainError("char2_unit_quadratic needs a != 1");
    return with_extension(a, [](const GF2mElement& x) -> std::optional<Char2Solution> {
        const GF2mElement a1 = x + gf2_one(x.m);
        const GF2mElement inv = gf2_inv(a1);
        const GF2mElement v = x * inv * inv * inv;
        auto b = cheb_cube_root_gf2(v, x * inv);
        if (!b) return std::nullopt;
        return Char2Solution{a1 * *b, false, *b};
    });
}

Char2Solution char2_artin_schreier(const GF2mElement& t) {
    const GF2mElement one = gf2_one(t.m);
    if (t == one) {
        // nonzero roots of C_5 = x (x^2 + x + 1)^2
        return with_extension(t, [](const GF2mElement& x) -> std::optional<Char2Solution> {
            for (std::uint32_t bits = 1; bits < (1u << x.m); ++bits) {
                GF2mElement v{x.m, bits};
                GF2mElement v2 = v * v;
                if (v2 * v2 * v + v2 * v + v == gf2_zero(x.m)) return Char2Solution{v, false, v};
            }
            return std::nullopt;
        });
    }
    return with_extension(t, [](const GF2mElement& x) -> std::optional<Char2Solution> {
        const GF2mElement s = gf2_sqrt(x + gf2_one(x.m));
        const GF2mElement sinv = gf2_inv(s);
        auto r = cheb_cube_root_gf2(x * sinv * sinv * sinv, sinv);
        if (!r) return std::nullopt;
        return Char2Solution{s * *r, false, *r};
    });
}

Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    const int sz = m + n;
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(sz), std::vector<Int>(static_cast<std::size_t>(sz), 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + i] = f.coeff(static_cast<std::size_t>(m - i));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(static_cast<std::size_t>(n - i));
    // Bareiss fraction-free elimination
    Int sign = 1, prev = 1;
    for (int k = 0; k < sz - 1; ++k) {
        if (a[k][k] == 0) {
            int p = k + 1;
            while (p < sz && a[p][k] == 0) ++p;
            if (p == sz) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < sz; ++i)
            for (int j = k + 1; j < sz; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[sz - 1][sz - 1];
}

namespace {

// Exact interpolation through (xs[i], ys[i]); the result must be integral.
IntPolynomial interpolate(const std::vector<long>& xs, const std::vector<Int>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rat> dd(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - j]);
    std::vector<Rat> poly{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // poly = poly * (x - xs[k]) + dd[k]
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * xs[k];
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    std::vector<Int> out;
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1) throw DomainError("resolvent interpolation left Z[x]");
        out.emplace_back(c.get_num());
    }
    return IntPolynomial(std::move(out));
}

Int round_int(double v) {
    Int r;
    mpz_set_d(r.get_mpz_t(), std::nearbyint(v));
    return r;
}

std::optional<IntPolynomial> near_integer_poly(const std::vector<Complex>& c, double tol) {
    std::vector<Int> out;
    for (const auto& v : c) {
        if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v)) || std::abs(v.real()) > 1e12) return std::nullopt;
        double r = std::nearbyint(v.real());
        if (std::abs(v.real() - r) > tol * std::max(1.0, std::abs(v))) return std::nullopt;
        out.push_back(round_int(r));
    }
    return IntPolynomial(std::move(out));
}

std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{1.0};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

IntPolynomial even_part_in_w(const IntPolynomial& p) {
    std::vector<Int> c;
    for (int i = 0; i <= p.degree(); i += 2) c.push_back(p.coeff(static_cast<std::size_t>(i)));
    return IntPolynomial(std::move(c));
}

IntPolynomial w_to_z(const IntPolynomial& p) {
    std::vector<Int> c(static_cast<std::size_t>(2 * p.degree() + 1), 0);
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(2 * i)] = p.coeff(static_cast<std::size_t>(i));
    return IntPolynomial(std::move(c));
}

// H(z^2) = g(z) g(-z) with g rational and not even: the cyclic case.
bool splits_as_cyclic(const IntPolynomial& h) {
    auto ws = poly_roots(h);
    std::vector<Complex> sq;
    for (const auto& w : ws) sq.push_back(std::sqrt(w));
    const IntPolynomial hz = w_to_z(h);
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<Complex> pick{sq[0]};
        for (unsigned k = 1; k < 4; ++k) pick.push_back((mask >> (k - 1)) & 1u ? -sq[k] : sq[k]);
        auto g = near_integer_poly(poly_from_roots(pick), 1e-6);
        if (!g) continue;
        if (*g == g->negate_arg()) continue;
        if (*g * g->negate_arg() == hz) return true;
    }
    return false;
}

}  // namespace

D4Report d4_resolvent(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4) {
    D4Report rep;
    Int d = 1;
    for (const Rat* a : {&a1, &a2, &a3, &a4}) {
        Int den = a->get_den();
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
    rep.scale = d;
    const Rat dr(d);
    Rat c3 = a1 * dr, c2 = a2 * dr * dr, c1 = a3 * dr * dr * dr, c0 = a4 * dr * dr * dr * dr;
    for (Rat* c : {&c3, &c2, &c1, &c0}) c->canonicalize();
    rep.quartic = IntPolynomial(std::vector<Int>{c0.get_num(), c1.get_num(), c2.get_num(), c3.get_num(), 1});
    const IntPolynomial& f = rep.quartic;

    // Res_y(f(y), f(y + z)) sampled at 17 integers, interpolated, divided by z^4
    std::vector<long> xs;
    std::vector<Int> ys;
    for (long z = -8; z <= 8; ++z) {
        xs.push_back(z);
        ys.push_back(resultant(f, f.compose(IntPolynomial(std::vector<Int>{Int(z), 1}))));
    }
    IntPolynomial full = interpolate(xs, ys);
    auto q = full.exact_div(IntPolynomial::monomial(1, 4));
    if (!q) throw DomainError("resultant not divisible by z^4");
    rep.resolvent = *q;
    rep.resolvent_w = even_part_in_w(rep.resolvent);

    rep.separable = rep.resolvent.coeff(0) != 0;
    if (!rep.separable) {
        rep.structure = "inseparable";
        return rep;
    }
    rep.irreducible = rational_roots(f).empty() && !quadratic_factor(f).has_value();
    if (!rep.irreducible) {
        rep.structure = "reducible";
        return rep;
    }

    // candidate quadratics in w from pairs of numeric squared differences
    const auto r = poly_roots(f);
    std::vector<Complex> wv;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) wv.push_back((r[i] - r[j]) * (r[i] - r[j]));
    IntPolynomial rem = rep.resolvent_w;
    for (std::size_t i = 0; i < wv.size(); ++i)
        for (std::size_t j = i + 1; j < wv.size(); ++j) {
            auto cand = near_integer_poly({wv[i] * wv[j], -(wv[i] + wv[j]), 1.0}, 1e-6);
            if (!cand) continue;
            unsigned mult = 0;
            while (auto qq = rem.exact_div(*cand)) {
                rem = *qq;
                ++mult;
            }
            if (mult) rep.w_factors.emplace_back(*cand, mult);
        }

    const IntPolynomial* bq = nullptr;
    const auto& wf = rep.w_factors;
    if (wf.empty()) {
        rep.structure = "no D4 split";
    } else if (wf.size() == 1 && wf[0].second == 1 && rem.degree() == 4) {
        if (splits_as_cyclic(rem)) {
            rep.structure = "C4";
        } else {
            rep.structure = "D4";
            bq = &wf[0].first;
        }
    } else if (wf.size() == 2 && rem.degree() == 0) {
        rep.structure = "D4";
        bq = wf[0].second == 1 ? &wf[0].first : &wf[1].first;
    } else if (wf.size() == 3 && rem.degree() == 0) {
        rep.structure = "V4";
    } else {
        rep.structure = "no D4 split";
    }
    if (!bq) return rep;
    rep.is_d4 = true;

    // undo the scaling: w_orig = w / d^2
    const Rat d2 = dr * dr;
    rep.B = Rat(bq->coeff(1)) / d2;
    rep.C = Rat(bq->coeff(0)) / (d2 * d2);
    rep.B->canonicalize();
    rep.C->canonicalize();

    std::vector<Complex> diffs;
    const double dd = d.get_d();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) diffs.push_back((r[i] - r[j]) / dd);
    const auto zr = poly_roots(std::vector<Rat>{*rep.C, 0, *rep.B, 0, 1});
    for (const auto& z : zr) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& df : diffs) best = std::min(best, std::abs(z - df) / std::max(1.0, std::abs(z)));
        rep.root_match = std::max(rep.root_match, best);
    }
    return rep;
}

}  // namespace chebykit
