#include "chebykit/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chebykit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesTol = 1e-17;
constexpr long kSeriesMaxTerms = 400000;
constexpr double kNearTwo = 1e-3;

void require_disc(Complex y) {
    if (!(std::abs(y) < 4.0)) throw DomainError("series about 2 needs |x - 2| < 4");
}

struct MpComplex {
    mpf_class re, im;
};

MpComplex mp_mul(const MpComplex& a, const MpComplex& b, mp_bitcnt_t bits) {
    mpf_class r(a.re * b.re - a.im * b.im, bits), i(a.re * b.im + a.im * b.re, bits);
    return {r, i};
}

double mp_abs(const MpComplex& a) {
    return std::hypot(a.re.get_d(), a.im.get_d());
}

// Sum of t_0 = first, t_{n+1} = t_n * (k^2 - a(n)^2) / b(n) * y in binary64; when
// the terms cancel by more than 2^8 the sum is redone in GMP floats.
template <class A, class B>
Complex sum_series(Complex first, Complex y, Complex k, A a, B b) {
    const double kmag = std::abs(k);
    const Complex k2 = k * k;
    Complex term = first, sum = first;
    double peak = std::abs(first);
    bool done = false;
    for (long n = 0; n < kSeriesMaxTerms; ++n) {
        const double an = a(n);
        term *= (k2 - an * an) / b(n) * y;
        sum += term;
        peak = std::max(peak, std::abs(term));
        if (term == Complex(0) ||
            (static_cast<double>(n) > kmag + 2 && std::abs(term) <= kSeriesTol * std::abs(sum))) {
            done = true;
            break;
        }
    }
    if (!done) throw NonConvergence("series about 2 did not settle within the term budget");
    if (peak <= std::ldexp(std::abs(sum), 8)) return sum;

    double scale = std::abs(sum);
    mp_bitcnt_t bits = 0;
    for (int round = 0; round < 8; ++round) {
        const double lost = scale > 0 ? std::log2(peak / scale) : 4096.0;
        const auto need = static_cast<mp_bitcnt_t>(128 + std::max(0.0, std::ceil(lost)));
        if (need <= bits) return sum;
        if (need > 8192) throw NonConvergence("series about 2 cancels beyond the precision budget");
        bits = need;
        const MpComplex kk{mpf_class(k.real(), bits), mpf_class(k.imag(), bits)};
        const MpComplex kq = mp_mul(kk, kk, bits);
        const MpComplex yy{mpf_class(y.real(), bits), mpf_class(y.imag(), bits)};
        MpComplex t{mpf_class(first.real(), bits), mpf_class(first.imag(), bits)};
        MpComplex acc = t;
        for (long n = 0;; ++n) {
            const mpf_class an(a(n), bits), bn(b(n), bits);
            MpComplex r{mpf_class(kq.re - an * an, bits), mpf_class(kq.im, bits)};
            r.re /= bn;
            r.im /= bn;
            t = mp_mul(mp_mul(t, r, bits), yy, bits);
            acc.re += t.re;
            acc.im += t.im;
            const double ta = mp_abs(t), sa = mp_abs(acc);
            if (ta == 0.0 || (static_cast<double>(n) > kmag + 2 && ta <= 1e-30 * sa)) break;
            if (n >= kSeriesMaxTerms) throw NonConvergence("series about 2 did not settle within the term budget");
        }
        sum = Complex(acc.re.get_d(), acc.im.get_d());
        scale = std::abs(sum);
    }
    return sum;
}

Complex second_kind_recurrence(long k, Complex x) {
    if (k < 0) return -second_kind_recurrence(-k, x);
    Complex a = 0, b = 1;
    if (k == 0) return a;
    for (long i = 1; i < k; ++i) {
        Complex c = x * b - a;
        a = b;
        b = c;
    }
    return b;
}

}  // namespace

bool is_integer_value(Complex k, long* out) {
    if (k.imag() != 0.0) return false;
    double r = std::round(k.real());
    if (std::abs(k.real() - r) > 1e-12 || std::abs(r) > 1e15) return false;
    if (out) *out = static_cast<long>(r);
    return true;
}

ChebLogValue cheb_log(Complex x) {
    if (x.imag() == 0.0) {
        double v = x.real();
        if (v >= 2.0) return {std::acosh(v / 2.0), 0.0};
        if (v >= -2.0) return {0.0, std::acos(v / 2.0)};
        return {std::acosh(-v / 2.0), kPi};
    }
    Complex h = x / 2.0;
    Complex w = std::log(h + std::sqrt(h - 1.0) * std::sqrt(h + 1.0));
    double r = w.real(), th = w.imag();
    if (r < 0) {
        r = -r;
        th = -th;
    }
    if (th <= -kPi) th += 2 * kPi;
    if (th > kPi) th -= 2 * kPi;
    if (r == 0.0 && th < 0) th = -th;
    return {r, th};
}

Complex cheb_exp(Complex z) { return 2.0 * std::cosh(z); }

Complex cheb_pow_complex(Complex a, Complex k) { return cheb_exp(cheb_log(a).value() * k); }

Complex principal_radical(Complex t, long n) {
    if (n == 0) throw DomainError("radical index must be nonzero");
    return cheb_exp(cheb_log(t).value() / static_cast<double>(std::labs(n)));
}

Complex rational_power(Complex t, long p, long q) {
    return cheb_pow_ladder(principal_radical(t, q), static_cast<std::uint64_t>(std::labs(p)));
}

bool branch_equiv(long i, long j, long n) {
    if (n < 1) throw DomainError("branch order must be positive");
    long m = 2 * n;
    auto mod = [m](long v) { return ((v % m) + m) % m; };
    return mod(i - j) == 0 || mod(i + j + 1) == 0;
}

Complex branch_radical(Complex t, long n, long l) {
    if (n < 1) throw DomainError("branch order must be positive");
    long m = 2 * n;
    l = ((l % m) + m) % m;
    if (l >= n) l = m - 1 - l;  // l ~ 2n-1-l
    if (l == 0) return principal_radical(t, n);
    ChebLogValue lt = cheb_log(t);
    const double nn = static_cast<double>(n);
    const double r = lt.r / nn, theta0 = lt.theta / nn;
    const double ld = static_cast<double>(l);
    // angles in units of pi/n, so window edges are exact integers
    const double unit = theta0 * nn / kPi;
    // on the cut every branch takes its limit from above, like the principal one
    const bool on_cut = t.imag() == 0.0 && t.real() < -2.0;
    const double probe = on_cut ? unit - 2e-9 : unit;
    double shift = std::floor((ld - probe) / 2);
    while (probe + 2 * shift < ld) shift += 1;
    while (probe + 2 * shift >= ld + 2) shift -= 1;
    // even window: l <= angle < l + 1; otherwise shift into the odd window
    if (probe + 2 * shift >= ld + 1) shift -= ld + 1;
    const double step = 2 * kPi / nn;
    return cheb_exp(Complex(r, theta0 + shift * step));
}

Complex branch_combination(Complex t, long n, long i) {
    if (n < 1 || i < 0 || i >= n) throw DomainError("branch_combination needs 0 <= i < n");
    const double mu = 2.0 * std::cos(kPi / static_cast<double>(n));
    const Complex si = second_kind_recurrence(i, mu), si1 = second_kind_recurrence(i + 1, mu);
    const Complex a = principal_radical(t, n);
    // for real t > 2 take -t on the cut from below, i.e. t from above like branch_radical
    const Complex b = t.imag() == 0.0 && t.real() > 2.0 ? std::conj(principal_radical(-t, n)) : principal_radical(-t, n);
    if (i % 2 == 0) return si1 * a - si * b;
    return -si * a + si1 * b;
}

Complex series_cheb_pow_near2(Complex x, Complex k) { return series_cheb_pow_offset(x - 2.0, k); }

Complex series_cheb_pow_offset(Complex y, Complex k) {
    require_disc(y);
    return sum_series(
        2.0, y, k, [](long n) { return static_cast<double>(n); },
        [](long n) { return static_cast<double>((2 * n + 1) * (2 * n + 2)); });
}

Complex series_s_near2(Complex x, Complex k) {
    Complex y = x - 2.0;
    require_disc(y);
    return sum_series(
        k, y, k, [](long i) { return static_cast<double>(i + 1); },
        [](long i) { return static_cast<double>((2 * i + 2) * (2 * i + 3)); });
}

Complex series_u_near2(Complex x, Complex k) {
    Complex y = x - 2.0;
    require_disc(y);
    return sum_series(
        k, y, k, [](long i) { return static_cast<double>(2 * i + 1); },
        [](long i) { return static_cast<double>((2 * i + 2) * (2 * i + 3) * 4); });
}

SecondKindValue second_kind_num(Complex k, Complex x) {
    long ki = 0;
    bool integral = is_integer_value(k, &ki);
    if (std::abs(x - 2.0) < kNearTwo) return {series_s_near2(x, k), series_u_near2(x, k)};
    if (integral && (std::abs(x + 2.0) < kNearTwo || std::abs(ki) <= 64)) {
        SecondKindValue v{second_kind_recurrence(ki, x), Complex(std::nan(""), std::nan(""))};
        if (ki % 2 != 0) v.u = second_kind_recurrence((ki + 1) / 2, x) + second_kind_recurrence((ki - 1) / 2, x);
        else v.u = std::sinh(k * cheb_log(x).value() / 2.0) / std::sinh(cheb_log(x).value() / 2.0);
        return v;
    }
    Complex w = cheb_log(x).value();
    return {std::sinh(k * w) / std::sinh(w), std::sinh(k * w / 2.0) / std::sinh(w / 2.0)};
}

Complex series_near0(Complex x, Complex k) {
    if (!(std::abs(x) < 2.0)) throw DomainError("expansion about 0 needs |x| < 2");
    Complex y = 2.0 - x * x;
    return std::cos(kPi * k / 2.0) * series_cheb_pow_near2(y, k / 2.0) +
           std::sin(kPi * k / 2.0) * x * series_u_near2(y, k);
}

Complex puiseux_neg2(Complex x, Complex k) {
    if (!(std::abs(x + 2.0) < 4.0)) throw DomainError("expansion about -2 needs |x + 2| < 4");
    return std::cos(kPi * k) * series_cheb_pow_near2(-x, k) +
           std::sin(kPi * k) * std::sqrt(x + 2.0) * series_u_near2(-x, 2.0 * k);
}

Complex gen_binomial(Complex a, long m) {
    if (m < 0) return 0;
    Complex r = 1;
    for (long i = 0; i < m; ++i) r *= (a - static_cast<double>(i)) / static_cast<double>(i + 1);
    return r;
}

Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("hyp2f1 direct summation needs |z| < 1");
    Complex term = 1, sum = 1;
    double mag = std::abs(a) + std::abs(b) + std::abs(c);
    for (long i = 0; i < kSeriesMaxTerms; ++i) {
        double id = static_cast<double>(i);
        term *= (a + id) * (b + id) / ((c + id) * (id + 1)) * z;
        sum += term;
        if (term == Complex(0) || (id > mag + 2 && std::abs(term) <= kSeriesTol * std::abs(sum))) return sum;
    }
    throw NonConvergence("hyp2f1 did not settle within the term budget");
}

Complex cheb_pow_derivative(Complex x, Complex k, long n) {
    if (n < 1) throw DomainError("derivative order must be >= 1");
    double fact = 1;
    for (long i = 2; i < n; ++i) fact *= static_cast<double>(i);
    const double nd = static_cast<double>(n);
    return fact * k * gen_binomial(k + nd - 1.0, 2 * n - 1) * hyp2f1(nd + k, nd - k, nd + 0.5, (2.0 - x) / 4.0);
}

double orthogonality_integral(long n, long m) {
    n = std::labs(n);
    m = std::labs(m);
    const long nodes = 4 * (n + m + 1);
    double sum = 0;
    for (long j = 1; j <= nodes; ++j) {
        double x = 2.0 * std::cos((2.0 * static_cast<double>(j) - 1.0) * kPi / (2.0 * static_cast<double>(nodes)));
        // C_n(x) by the three-term recurrence
        auto cheb = [x](long k) {
            double a = 2, b = x;
            if (k == 0) return a;
            for (long i = 1; i < k; ++i) {
                double c = x * b - a;
                a = b;
                b = c;
            }
            return b;
        };
        sum += cheb(n) * cheb(m);
    }
    return sum * kPi / static_cast<double>(nodes);
}

namespace {

// Five-point central stencils with one Richardson step.
template <class F>
Complex stencil1(F f, Complex x, double h) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

template <class F>
Complex stencil2(F f, Complex x, double h) {
    return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

template <class F>
Complex diff1(F f, Complex x, double h) {
    return (16.0 * stencil1(f, x, h / 2) - stencil1(f, x, h)) / 15.0;
}

template <class F>
Complex diff2(F f, Complex x, double h) {
    return (16.0 * stencil2(f, x, h / 2) - stencil2(f, x, h)) / 15.0;
}

}  // namespace

OdeResiduals ode_residuals(Complex k, Complex x, double h) {
    long ki = 0;
    const bool integral = is_integer_value(k, &ki);
    const Complex k2 = k * k;
    const Complex q = x * x - 4.0;
    OdeResiduals r;

    auto dy = [&](Complex at) { return k * second_kind_num(k, at).s; };
    Complex y = cheb_pow_complex(x, k);
    Complex y1 = dy(x);
    Complex y2;
    if (integral) {
        IntPolynomial c = cheb_first_kind(ki);
        y = c.eval(x);
        y1 = c.derivative().eval(x);
        y2 = c.derivative().derivative().eval(x);
    } else {
        y2 = diff1(dy, x, h);
    }
    r.first_order = std::abs(q * y1 * y1 - k2 * (y * y - 4.0));
    r.second_order = std::abs(q * y2 + x * y1 - k2 * y);

    // (-x)^©k
    auto dneg = [&](Complex at) { return -k * second_kind_num(k, -at).s; };
    Complex n0 = cheb_pow_complex(-x, k);
    Complex n1 = dneg(x);
    Complex n2;
    if (integral) {
        IntPolynomial c = cheb_first_kind(ki).negate_arg();
        n0 = c.eval(x);
        n1 = c.derivative().eval(x);
        n2 = c.derivative().derivative().eval(x);
    } else {
        n2 = diff1(dneg, x, h);
    }
    r.neg_solution = std::abs(q * n2 + x * n1 - k2 * n0);

    // sqrt(x^2-4) S_k(x)
    auto f = [&](Complex at) { return std::sqrt(at - 2.0) * std::sqrt(at + 2.0) * second_kind_num(k, at).s; };
    r.sqrt_solution = std::abs(q * diff2(f, x, h) + x * diff1(f, x, h) - k2 * f(x));
    return r;
}

}  // namespace chebykit
