#pragma once

#include <cstddef>
#include <vector>

namespace siac {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Returns the n-point Gauss-Legendre rule. Rules are cached and never evicted,
/// so the returned reference stays valid; lookup is guarded for concurrent use.
const GaussRule& gauss_legendre(int n);

/// Integrates f over [a, b] with an n-point Gauss rule.
template <typename F>
double integrate_gauss(F&& f, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

}  // namespace siac
