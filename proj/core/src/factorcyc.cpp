#include "chebykit/factorcyc.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "chebykit/arith.hpp"

namespace chebykit {

IntPolynomial FactorList::product() const {
    IntPolynomial r = IntPolynomial::constant(scalar);
    for (const auto& [f, m] : factors) r *= f.pow(m);
    return r;
}

namespace {

BiPolynomial r_sum(long n) {
    BiPolynomial r;
    for (long i = 1; i <= n - 1; ++i)
        r += BiPolynomial::in_x(cheb_second_kind(i)) * BiPolynomial::in_y(cheb_second_kind(n - i));
    return r;
}

}  // namespace

BiPolynomial r_bipoly(long n) {
    if (n < 1) throw DomainError("r_bipoly needs n >= 1");
    return r_sum(n);
}

BiPolynomial diff_factor(long n) {
    if (n < 1) throw DomainError("diff_factor needs n >= 1");
    return r_sum(n + 1) - r_sum(n - 1);
}

IntPolynomial cofactor_at(long n, const Int& a) {
    if (n < 1) throw DomainError("cofactor_at needs n >= 1");
    std::vector<Int> c(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i) c[static_cast<std::size_t>(n - i)] = cheb_second_kind(i).eval(a);
    return cheby_transform(IntPolynomial(std::move(c)));
}

std::vector<long> divisors_of(long n) {
    std::vector<long> d;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

IntPolynomial cyclotomic(long n) {
    if (n < 1) throw DomainError("cyclotomic needs n >= 1");
    IntPolynomial r = IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial::constant(1);
    for (long d : divisors_of(n)) {
        if (d == n) continue;
        auto q = r.exact_div(cyclotomic(d));
        r = *q;
    }
    return r;
}

IntPolynomial cheb_cyclotomic(long n) {
    if (n == 1) return IntPolynomial::constant(1);
    if (n < 1 || n == 2) throw DomainError("cheb_cyclotomic is defined for n = 1 and n > 2");
    IntPolynomial phi = cyclotomic(n);
    long half = phi.degree() / 2;
    // Phi_n(z) / z^half = a_half + sum_{j>=1} a_{half+j} (z^j + z^-j)
    std::vector<Int> folded(static_cast<std::size_t>(half + 1));
    for (long j = 0; j <= half; ++j) folded[static_cast<std::size_t>(j)] = phi.coeff(static_cast<std::size_t>(half + j));
    return cheby_transform(IntPolynomial(std::move(folded)));
}

FactorList u_psi_factorization(long n) {
    if (n < 1 || n % 2 == 0) throw DomainError("u_psi_factorization needs an odd positive index");
    FactorList fl;
    for (long d : divisors_of(n)) fl.factors.emplace_back(cheb_cyclotomic(d), 1u);
    return fl;
}

std::vector<StructuralIdentity> structural_factorizations(long n) {
    if (n < 1) throw DomainError("structural_factorizations needs n >= 1");
    std::vector<StructuralIdentity> out;
    const IntPolynomial x = IntPolynomial::x();
    const IntPolynomial two = IntPolynomial::constant(2);
    const IntPolynomial cn = cheb_first_kind(n);

    if (n % 2 == 0) {
        long k = n / 2;
        out.push_back({"even_minus_two", cn - two,
                       {1, {{IntPolynomial::from_ints({-4, 0, 1}), 1u}, {cheb_second_kind(k), 2u}}}});
        out.push_back({"s_even_split", cheb_second_kind(n), {1, {{cheb_second_kind(k), 1u}, {cheb_first_kind(k), 1u}}}});
    } else {
        long k = (n - 1) / 2;
        Int sign = (k % 2) ? -1 : 1;
        IntPolynomial u = u_odd_poly(n);
        out.push_back({"odd_minus_two", cn - two, {1, {{IntPolynomial::from_ints({-2, 1}), 1u}, {u, 2u}}}});
        IntPolynomial cyc = IntPolynomial::constant(1);
        for (long j = 1; j <= k; ++j) cyc += cheb_first_kind(j);
        out.push_back({"odd_minus_two_sum", cn - two, {1, {{IntPolynomial::from_ints({-2, 1}), 1u}, {cyc, 2u}}}});
        out.push_back({"s_odd_split", cheb_second_kind(n), {sign, {{u, 1u}, {u.negate_arg(), 1u}}}});
        out.push_back({"odd_u_form", cn, {sign, {{x, 1u}, {u.compose(IntPolynomial::from_ints({2, 0, -1})), 1u}}}});
    }

    // n = l*m with l a power of two and m odd:
    // C_n = (-1)^((m-1)/2) C_l * U_m(-C_{2l})
    long l = 1;
    while ((n / l) % 2 == 0) l *= 2;
    long m = n / l;
    Int sign = (((m - 1) / 2) % 2) ? -1 : 1;
    IntPolynomial inner = -cheb_first_kind(2 * l);
    out.push_back({"power_split", cn, {sign, {{cheb_first_kind(l), 1u}, {u_odd_poly(m).compose(inner), 1u}}}});
    return out;
}

bool eisenstein_check(const IntPolynomial& p, long q) {
    if (!p.is_monic()) throw DomainError("eisenstein_check needs a monic polynomial");
    if (!is_prime_small(q)) throw DomainError("eisenstein_check needs a prime");
    if (p.degree() < 1) return false;
    const Int Q = q;
    for (int i = 0; i < p.degree(); ++i)
        if (!mpz_divisible_p(p.coeff(i).get_mpz_t(), Q.get_mpz_t())) return false;
    const Int Q2 = Q * Q;
    return !mpz_divisible_p(p.coeff(0).get_mpz_t(), Q2.get_mpz_t());
}

ChebRootOfTwoSet chebroots_of_two(long n) {
    if (n < 1) throw DomainError("chebroots_of_two needs n >= 1");
    ChebRootOfTwoSet s;
    s.n = n;
    for (long k = 0; 2 * k <= n; ++k) {
        long d = n / std::gcd(k, n);
        s.values.push_back({2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)), d});
        // orders 1 and 2 carry the linear minimal polynomials of 2 and -2
        if (!s.defining.count(d))
            s.defining.emplace(d, d == 1   ? IntPolynomial::from_ints({-2, 1})
                                  : d == 2 ? IntPolynomial::from_ints({2, 1})
                                           : cheb_cyclotomic(d));
    }
    return s;
}

std::vector<Rat> rational_roots(const IntPolynomial& p) {
    std::vector<Rat> roots;
    if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
    IntPolynomial q = p;
    if (q.coeff(0) == 0) {
        roots.emplace_back(0);
        std::size_t z = 0;
        while (q.coeff(z) == 0) ++z;
        q = IntPolynomial(std::vector<Int>(q.coeffs().begin() + static_cast<long>(z), q.coeffs().end()));
    }
    if (q.degree() < 1) return roots;
    std::vector<Int> num = divisors(q.coeff(0));
    std::vector<Int> den = divisors(q.leading());
    for (const auto& a : num)
        for (const auto& b : den) {
            if (gcd(a, b) != 1) continue;
            for (int s : {1, -1}) {
                Rat r(s * a, b);
                r.canonicalize();
                if (q.eval(r) == 0) roots.push_back(r);
            }
        }
    return roots;
}

std::optional<IntPolynomial> quadratic_factor(const IntPolynomial& p) {
    if (p.degree() != 4 || !p.is_monic()) return std::nullopt;
    const Int c0 = p.coeff(0), c1 = p.coeff(1), c2 = p.coeff(2), c3 = p.coeff(3);
    if (c0 == 0) {
        IntPolynomial q(std::vector<Int>(p.coeffs().begin() + 1, p.coeffs().end()));
        for (const auto& r : rational_roots(q))
            if (r.get_den() == 1) return IntPolynomial(std::vector<Int>{0, -r.get_num(), 1});
        return std::nullopt;
    }
    // (x^2 + a x + b)(x^2 + c x + d) with b d = c0
    for (const auto& bd : divisors(c0))
        for (int s : {1, -1}) {
            Int b = s * bd;
            Int d = c0 / b;
            if (d != b) {
                Int num = c1 - b * c3, den = d - b;
                if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
                Int a = num / den, c = c3 - a;
                if (b + d + a * c == c2) return IntPolynomial(std::vector<Int>{b, a, 1});
            } else {
                if (c1 != b * c3) continue;
                // a + c = c3, a c = c2 - 2b
                Int disc = c3 * c3 - 4 * (c2 - 2 * b);
                if (!is_square(disc)) continue;
                Int r = sqrt(disc);
                Int a2 = c3 + r;
                if (mpz_even_p(a2.get_mpz_t())) return IntPolynomial(std::vector<Int>{b, a2 / 2, 1});
            }
        }
    return std::nullopt;
}

}  // namespace chebykit
