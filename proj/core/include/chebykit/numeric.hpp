#pragma once

#include <vector>

#include "chebykit/exactcore.hpp"

namespace chebykit {

// All complex roots (with multiplicity) of sum c[i] x^i, leading coefficient
// nonzero. Aberth iteration followed by Newton polishing.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);
std::vector<Complex> poly_roots(const IntPolynomial& p);
std::vector<Complex> poly_roots(const std::vector<Rat>& coeffs);

// Greedy nearest matching; returns the largest matched distance.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace chebykit
