#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "chebykit/exactcore.hpp"

namespace chebykit {

// Integer factorization: trial division up to `trial_limit`, then Pollard rho
// (Brent variant) with a total iteration budget. Composite parts that resist the
// budget land in `unfactored` (1 when the factorization is complete).
struct Factorization {
    std::map<Int, int> primes;
    Int unfactored{1};
    bool complete() const { return unfactored == 1; }
};

struct FactorBudget {
    unsigned long trial_limit = 1000000;
    unsigned long long rho_iterations = 100000000ULL;
};

Factorization factorize(Int n, const FactorBudget& budget = {});
bool is_probable_prime(const Int& n);
bool is_prime_small(long n);

// All positive divisors of |n| (n != 0), ascending. Requires a complete factorization.
std::vector<Int> divisors(const Int& n);

// v_p of a nonzero integer / rational; nullopt for zero (valuation +infinity).
std::optional<long> valuation(const Int& n, const Int& p);
std::optional<long> valuation(const Rat& q, const Int& p);

bool is_square(const Rat& q);
bool is_square(const Int& n);

// Squarefree kernel d of a nonzero rational: q = d * (square of a rational).
// nullopt when the factorization budget was exhausted.
std::optional<Int> squarefree_kernel(const Rat& q, const FactorBudget& budget = {});

Int gcd(const Int& a, const Int& b);
long gcd_long(long a, long b);

}  // namespace chebykit
