#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>

namespace susyho::quad {

/// Gauss-Legendre nodes and weights on [-1, 1], built once per order.
template <int N>
struct GaussLegendre {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    GaussLegendre() {
        for (int i = 0; i < (N + 1) / 2; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= N; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[i] = -x;
            nodes[N - 1 - i] = x;
            weights[i] = weights[N - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    static const GaussLegendre& instance() {
        static const GaussLegendre rule;
        return rule;
    }
};

template <int N, typename F>
auto gauss_panel(F&& f, double a, double b) {
    const auto& rule = GaussLegendre<N>::instance();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    decltype(f(mid)) acc{};
    for (int i = 0; i < N; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

template <typename T>
struct QuadResult {
    T value{};
    double error = 0.0;
};

namespace detail {

template <typename F, typename T>
void adaptive_step(F& f, double a, double b, double abs_tol, int depth, QuadResult<T>& out) {
    const T coarse = gauss_panel<10>(f, a, b);
    const T fine = gauss_panel<20>(f, a, b);
    const double err = std::abs(fine - coarse);
    if (err <= abs_tol || depth <= 0) {
        out.value += fine;
        out.error += err;
        return;
    }
    const double mid = 0.5 * (a + b);
    adaptive_step(f, a, mid, 0.5 * abs_tol, depth - 1, out);
    adaptive_step(f, mid, b, 0.5 * abs_tol, depth - 1, out);
}

} // namespace detail

/// Adaptive Gauss-Legendre (10 vs 20 points, bisection) of f over the given
/// breakpoints. abs_tol is shared among panels in proportion to their width.
template <typename F>
auto integrate(F&& f, std::span<const double> breaks, double abs_tol, int max_depth = 20) {
    using T = decltype(f(0.0));
    QuadResult<T> out;
    const double total = breaks.back() - breaks.front();
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double w = breaks[i + 1] - breaks[i];
        detail::adaptive_step(f, breaks[i], breaks[i + 1], abs_tol * w / total, max_depth, out);
    }
    return out;
}

template <typename F>
auto integrate(F&& f, double a, double b, double abs_tol, int max_depth = 20) {
    const std::array<double, 2> br{a, b};
    return integrate(std::forward<F>(f), std::span<const double>(br), abs_tol, max_depth);
}

} // namespace susyho::quad
