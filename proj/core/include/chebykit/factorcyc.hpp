#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebykit/exactcore.hpp"

namespace chebykit {

struct FactorList {
    Int scalar{1};
    std::vector<std::pair<IntPolynomial, unsigned>> factors;

    IntPolynomial product() const;
};

// A named exact identity lhs == scalar * prod(factors^mult).
struct StructuralIdentity {
    std::string name;
    IntPolynomial lhs;
    FactorList rhs;

    bool holds() const { return lhs == rhs.product(); }
};

struct RootOfTwo {
    double value;
    long order;  // primitive order d | n
};

struct ChebRootOfTwoSet {
    long n = 0;
    std::vector<RootOfTwo> values;
    std::map<long, IntPolynomial> defining;  // order d -> Psi_d
};

BiPolynomial r_bipoly(long n);
BiPolynomial diff_factor(long n);
IntPolynomial cofactor_at(long n, const Int& a);

IntPolynomial cyclotomic(long n);
IntPolynomial cheb_cyclotomic(long n);
FactorList u_psi_factorization(long n);
std::vector<StructuralIdentity> structural_factorizations(long n);

bool eisenstein_check(const IntPolynomial& p, long q);
ChebRootOfTwoSet chebroots_of_two(long n);

// Certificate-style irreducibility evidence over Q.
std::vector<Rat> rational_roots(const IntPolynomial& p);
// A monic integer quadratic factor of a monic quartic, if one exists.
std::optional<IntPolynomial> quadratic_factor(const IntPolynomial& p);

long euler_phi(long n);
std::vector<long> divisors_of(long n);

}  // namespace chebykit
