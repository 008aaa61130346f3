#include "chebykit/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace chebykit {

namespace {

std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, Complex x) {
    Complex p = 0, dp = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[i];
    }
    return {p, dp};
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back() == Complex(0)) c.pop_back();
    if (c.size() < 2) return {};
    const std::size_t n = c.size() - 1;
    for (auto& v : c) v /= coeffs[n];
    c.back() = 1;

    // Cauchy bound for the initial circle
    double bound = 0;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
    double radius = std::min(1.0 + bound, 1e6);
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = std::polar(radius * 0.5 + 0.1, 2 * std::numbers::pi * (static_cast<double>(i) + 0.25) / static_cast<double>(n));

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            auto [p, dp] = eval_with_derivative(c, z[i]);
            if (p == Complex(0)) continue;
            Complex ratio = p / dp;
            Complex sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            Complex step = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-15) break;
    }
    for (auto& r : z)
        for (int k = 0; k < 3; ++k) {
            auto [p, dp] = eval_with_derivative(c, r);
            if (dp == Complex(0)) break;
            Complex nr = r - p / dp;
            if (std::abs(eval_with_derivative(c, nr).first) < std::abs(p)) r = nr;
            else break;
        }
    return z;
}

std::vector<Complex> poly_roots(const IntPolynomial& p) {
    std::vector<Complex> c;
    for (const auto& v : p.coeffs()) c.emplace_back(v.get_d(), 0.0);
    return poly_roots(c);
}

std::vector<Complex> poly_roots(const std::vector<Rat>& coeffs) {
    std::vector<Complex> c;
    for (const auto& v : coeffs) c.emplace_back(v.get_d(), 0.0);
    return poly_roots(c);
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0;
    for (const auto& x : a) {
        auto it = std::min_element(b.begin(), b.end(),
                                   [&](const Complex& u, const Complex& v) { return std::abs(u - x) < std::abs(v - x); });
        worst = std::max(worst, std::abs(*it - x));
        b.erase(it);
    }
    return worst;
}

}  // namespace chebykit
