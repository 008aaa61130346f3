#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chebykit/exactcore.hpp"
#include "chebykit/gf2m.hpp"

namespace chebykit {

// r_i = zeta^i u + zeta^-i u^-1, the n Chebyshev n-th roots of t.
struct IndexedRootSet {
    Complex t;
    long n = 1;
    Complex zeta;
    Complex u;
    Complex mu;  // zeta + zeta^-1
    std::vector<Complex> roots;

    Complex root(long i) const;  // index taken mod n
};

IndexedRootSet indexed_roots(Complex t, long n);

// x^2 + b x + c
struct MonicQuadratic {
    Complex b;
    Complex c;
    std::array<Complex, 2> roots() const;
};

// Quadratic with roots r_{k+i}, r_{k-i}.
MonicQuadratic sibling_quadratic(const IndexedRootSet& set, long k, long i);
// r_{i+ke} from r_i, r_j with e = j - i.
Complex recover_root(const IndexedRootSet& set, long i, long j, long k);
// r_{i+ke} for k = 0..n-1; throws DomainError unless gcd(j - i, n) = 1.
std::vector<Complex> recover_all(const IndexedRootSet& set, long i, long j);

// Roots of x^3 + b x + c.
std::array<Complex, 3> cubic_cheb_solve(const Rat& b, const Rat& c);

struct CubicEps {
    Rat delta;           // -4 b^3 - 27 c^2
    Rat eps;             // -2 - 27 c^2 / b^3
    Rat eps_from_delta;  // 2 + delta / b^3
    bool forms_agree = false;
};
CubicEps cubic_eps(const Rat& b, const Rat& c);

struct TowerStep {
    std::string kind;  // ordinary-root | chebyshev-root | square-root
    long degree = 0;
    Complex radicand;
    Complex value;
    double residual = 0;
};

struct TowerWitness {
    long q = 0;
    Complex t;
    std::vector<TowerStep> steps;
    std::vector<Complex> values;  // solutions of the target equation
    std::string target;           // description of the solved relation
    double max_residual = 0;      // over steps and target
    bool verified = false;
};

// Solve x^©q = t by ordinary radicals.
TowerWitness cheb_to_radical_witness(long q, Complex t);
// Solve x^q = t by Chebyshev radicals.
TowerWitness radical_to_cheb_witness(long q, Complex t);

struct Char2Solution {
    GF2mElement value;
    bool in_extension = false;  // value lives in GF(2^{2m})
    GF2mElement aux;            // Chebyshev cube root used by the construction
};

// c with c^2 + a c + 1 = 0, a != 1.
Char2Solution char2_unit_quadratic(const GF2mElement& a);
// w with w^2 + w + t = 0.
Char2Solution char2_artin_schreier(const GF2mElement& t);

struct D4Report {
    Int scale{1};             // quartic was rescaled by x -> x / scale
    IntPolynomial quartic;    // integral monic rescaled quartic
    IntPolynomial resolvent;  // degree 12 in z, roots the differences r_i - r_j
    IntPolynomial resolvent_w;  // same in w = z^2
    std::vector<std::pair<IntPolynomial, unsigned>> w_factors;  // rational quadratic factors in w
    bool separable = false;
    bool irreducible = false;
    std::string structure;  // D4 | C4 | V4 | no D4 split | reducible | inseparable
    bool is_d4 = false;
    std::optional<Rat> B, C;  // biquadratic z^4 + B z^2 + C for the original quartic
    double root_match = 0;    // worst distance of biquadratic roots to numeric differences
};

D4Report d4_resolvent(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4);

// Resultant of two integer polynomials via a fraction-free Sylvester determinant.
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace chebykit
