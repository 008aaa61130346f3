#include "chebykit/arith.hpp"

#include <algorithm>
#include <numeric>

namespace chebykit {

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Brent's cycle-finding Pollard rho. Returns a nontrivial factor or 0 when the
// budget runs out.
Int rho(const Int& n, unsigned long long& budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c0 = 1; budget > 0; ++c0) {
        Int c = c0, y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const Int& v) {
            Int t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    Int d = abs(x - y);
                    q = q * d;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                budget = budget > lim ? budget - lim : 0;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = f(ys);
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

void split(const Int& n, Factorization& out, unsigned long long& budget) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.primes[n] += 1;
        return;
    }
    Int d = budget > 0 ? rho(n, budget) : Int(0);
    if (d == 0) {
        out.unfactored *= n;
        return;
    }
    split(d, out, budget);
    split(Int(n / d), out, budget);
}

}  // namespace

Factorization factorize(Int n, const FactorBudget& budget) {
    if (n == 0) throw DomainError("cannot factor zero");
    n = abs(n);
    Factorization out;
    for (unsigned long p = 2; p <= budget.trial_limit; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.primes[Int(p)] += 1;
            n /= p;
        }
    }
    if (n == 1) return out;
    unsigned long long b = budget.rho_iterations;
    split(n, out, b);
    return out;
}

std::vector<Int> divisors(const Int& n) {
    Factorization f = factorize(n);
    if (!f.complete()) throw Undecided("divisors: factorization incomplete");
    std::vector<Int> ds{1};
    for (const auto& [p, e] : f.primes) {
        std::size_t sz = ds.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::optional<long> valuation(const Int& n, const Int& p) {
    if (n == 0) return std::nullopt;
    Int m = n;
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

std::optional<long> valuation(const Rat& q, const Int& p) {
    if (q == 0) return std::nullopt;
    return *valuation(q.get_num(), p) - *valuation(q.get_den(), p);
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

bool is_square(const Rat& q) { return is_square(Int(q.get_num())) && is_square(Int(q.get_den())); }

std::optional<Int> squarefree_kernel(const Rat& q, const FactorBudget& budget) {
    if (q == 0) throw DomainError("squarefree kernel of zero");
    Int n = q.get_num() * q.get_den();
    Factorization f = factorize(n, budget);
    if (!f.complete()) return std::nullopt;
    Int d = n < 0 ? -1 : 1;
    for (const auto& [p, e] : f.primes)
        if (e % 2) d *= p;
    return d;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace chebykit
