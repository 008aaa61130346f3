#pragma once

#include "chebykit/exactcore.hpp"

namespace chebykit {

// log_© in polar form: r >= 0, theta in (-pi, pi], theta >= 0 when r == 0.
struct ChebLogValue {
    double r = 0;
    double theta = 0;
    Complex value() const { return {r, theta}; }
};

ChebLogValue cheb_log(Complex x);
Complex cheb_exp(Complex z);
Complex cheb_pow_complex(Complex a, Complex k);

Complex principal_radical(Complex t, long n);
Complex rational_power(Complex t, long p, long q);
Complex branch_radical(Complex t, long n, long l);
bool branch_equiv(long i, long j, long n);
Complex branch_combination(Complex t, long n, long i);

struct SecondKindValue {
    Complex s;  // S_k(x)
    Complex u;  // U_k(x) = S_{(k+1)/2}(x) + S_{(k-1)/2}(x)
};
SecondKindValue second_kind_num(Complex k, Complex x);

// Series about x = 2; each requires |x - 2| < 4.
Complex series_cheb_pow_near2(Complex x, Complex k);
Complex series_s_near2(Complex x, Complex k);
Complex series_u_near2(Complex x, Complex k);
// (2 + y)^©k from the offset y itself, so tiny offsets keep full precision.
Complex series_cheb_pow_offset(Complex y, Complex k);

Complex series_near0(Complex x, Complex k);
Complex puiseux_neg2(Complex x, Complex k);

// Gauss 2F1 by direct summation, |z| < 1.
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);
// Generalized binomial coefficient C(a, m) for complex a.
Complex gen_binomial(Complex a, long m);
// n-th derivative of x^©k through its hypergeometric form, n >= 1.
Complex cheb_pow_derivative(Complex x, Complex k, long n);

double orthogonality_integral(long n, long m);

struct OdeResiduals {
    double first_order = 0;    // (x^2-4) y'^2 - k^2 (y^2 - 4)
    double second_order = 0;   // (x^2-4) y'' + x y' - k^2 y
    double neg_solution = 0;   // second-order residual of (-x)^©k
    double sqrt_solution = 0;  // second-order residual of sqrt(x^2-4) S_k(x)
};
OdeResiduals ode_residuals(Complex k, Complex x, double h);

bool is_integer_value(Complex k, long* out = nullptr);

}  // namespace chebykit
