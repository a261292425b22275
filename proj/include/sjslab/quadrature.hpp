/*
 * quadrature.hpp — Gauss–Legendre rules and adaptive-order integration.
 *
 * Rules live on [-1,1] and are cached per order. integrate() doubles the
 * order (16 -> 32 -> ... -> 4096) until two successive estimates agree to
 * rel_tol, with an absolute floor tied to the integrand's L1 mass so that
 * transforms of rapidly decaying functions can return values near zero
 * instead of chasing relative accuracy on noise.
 */

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "sjslab/errors.hpp"

namespace sjslab {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1], ascending
    std::vector<double> weights; // sum to 2
};

// Cached rule of the given order (Newton iteration on P_n).
const GaussLegendreRule& gauss_legendre(int order);

inline constexpr int kMinQuadratureNodes = 16;
inline constexpr int kMaxQuadratureNodes = 4096;

namespace detail {

template <class F>
std::pair<double, double> gl_estimate(F&& f, double a, double b, int order) {
    const GaussLegendreRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = f(mid + half * rule.nodes[i]);
        sum += rule.weights[i] * v;
        abs_sum += rule.weights[i] * std::abs(v);
    }
    return {half * sum, half * abs_sum};
}

} // namespace detail

template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10) {
    if (!(b > a)) throw invalid_parameter("integrate: empty interval");
    double prev = detail::gl_estimate(f, a, b, kMinQuadratureNodes).first;
    for (int n = 2 * kMinQuadratureNodes; n <= kMaxQuadratureNodes; n *= 2) {
        auto [cur, l1] = detail::gl_estimate(f, a, b, n);
        const double abs_floor = rel_tol * 1e-3 * l1;
        if (std::abs(cur - prev) <= std::max(rel_tol * std::abs(cur), abs_floor))
            return cur;
        if (n == kMaxQuadratureNodes)
            throw accuracy_error(
                "integrate: node budget exhausted before estimates stabilised", cur, prev);
        prev = cur;
    }
    return prev; // unreachable: kMaxQuadratureNodes is a power-of-two multiple of kMin
}

} // namespace sjslab
