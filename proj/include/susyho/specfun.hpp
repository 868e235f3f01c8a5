#pragma once

// Special-function kernel: Gamma (Lanczos), Pochhammer, Kummer 1F1,
// 0F2 and physicists' Hermite polynomials. Pure functions, no global state.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "susyho/errors.hpp"

namespace susyho::specfun {

using complex = std::complex<double>;

inline constexpr double series_tol = 1e-15;
inline constexpr int series_cap = 10'000;

template <typename T>
struct SeriesResult {
    T value{};
    int terms_used = 0;
    bool converged = false;
};

namespace detail {

inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coeff = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool near_nonpositive_integer(complex z) {
    const double re = z.real();
    if (re > 0.5) return false;
    const double scale = std::max(1.0, std::abs(z));
    return std::abs(z.imag()) < 1e-13 * scale && std::abs(re - std::round(re)) < 1e-13 * scale;
}

inline bool is_nonpositive_integer(double b) {
    return b <= 0.0 && b == std::round(b);
}

// Lanczos partial-fraction sum for argument z-1 (Re z >= 1/2).
inline complex lanczos_sum(complex zm1) {
    complex acc = lanczos_coeff[0];
    for (std::size_t i = 1; i < lanczos_coeff.size(); ++i) {
        acc += lanczos_coeff[i] / (zm1 + static_cast<double>(i));
    }
    return acc;
}

// log(sin(pi z)) modulo 2 pi i; stays finite for large |Im z|.
inline complex log_sin_pi(complex z) {
    const complex w = std::numbers::pi * z;
    if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
    if (w.imag() > 0) {
        const complex i{0.0, 1.0};
        return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(complex{0.0, 0.5});
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

template <typename T>
std::string to_string(const T& v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace detail

/// Gamma function for complex argument, reflection for Re z < 1/2.
inline complex gamma(complex z) {
    if (detail::near_nonpositive_integer(z)) {
        throw GammaPoleError("gamma: pole at z = " + detail::to_string(z));
    }
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    }
    const complex zm1 = z - 1.0;
    const complex t = zm1 + detail::lanczos_g + 0.5;
    const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
    return sqrt_2pi * std::pow(t, zm1 + 0.5) * std::exp(-t) * detail::lanczos_sum(zm1);
}

inline double gamma(double x) { return gamma(complex{x, 0.0}).real(); }

/// log Gamma(z) up to an additive multiple of 2 pi i (only exp() of it is meaningful).
inline complex log_gamma(complex z) {
    if (detail::near_nonpositive_integer(z)) {
        throw GammaPoleError("log_gamma: pole at z = " + detail::to_string(z));
    }
    if (z.real() < 0.5) {
        return std::log(std::numbers::pi) - detail::log_sin_pi(z) - log_gamma(1.0 - z);
    }
    const complex zm1 = z - 1.0;
    const complex t = zm1 + detail::lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t +
           std::log(detail::lanczos_sum(zm1));
}

/// Digamma for real argument.
inline double digamma(double x) {
    if (detail::is_nonpositive_integer(x)) {
        throw GammaPoleError("digamma: pole at x = " + detail::to_string(x));
    }
    if (x < 0.5) {
        const double pi = std::numbers::pi;
        return digamma(1.0 - x) - pi / std::tan(pi * x);
    }
    double acc = 0.0;
    while (x < 16.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    // Bernoulli asymptotic tail
    const double tail =
        r * (1.0 / 12 -
             r * (1.0 / 120 -
                  r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
    return acc + std::log(x) - 0.5 / x - tail;
}

/// Rising factorial (z)_n as a finite product.
template <typename T>
T pochhammer(T z, int n) {
    T acc = T(1);
    for (int k = 0; k < n; ++k) acc *= z + static_cast<double>(k);
    return acc;
}

namespace detail {

inline void check_b(double b, const char* who) {
    if (is_nonpositive_integer(b)) {
        throw ParameterPoleError(std::string(who) + ": lower parameter b = " + to_string(b) +
                                 " is a nonpositive integer");
    }
}

// Neumaier-compensated Maclaurin series of 1F1. Terminates exactly if a is a
// nonpositive integer.
inline SeriesResult<double> kummer_series(double a, double b, double z) {
    double sum = 1.0;
    double comp = 0.0;
    double term = 1.0;
    for (int k = 0; k < series_cap; ++k) {
        const double ratio = (a + k) / (b + k) * z / (k + 1);
        term *= ratio;
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        const double value = sum + comp;
        if (term == 0.0) return {value, k + 2, true};
        if (std::abs(term) < series_tol * std::abs(value) && std::abs(ratio) < 1.0) {
            return {value, k + 2, true};
        }
    }
    throw ConvergenceError("kummer_1f1: series did not converge within " +
                           std::to_string(series_cap) + " terms (a=" + to_string(a) +
                           ", b=" + to_string(b) + ", z=" + to_string(z) + ")");
}

} // namespace detail

/// log 1F1(a, b, z) for a, b > 0 and z >= 0, where every series term is
/// positive. The running sum is rescaled so e^z-size values never materialize.
inline SeriesResult<double> log_scaled_1f1(double a, double b, double z) {
    if (!(a > 0.0 && b > 0.0 && z >= 0.0)) {
        throw DomainError("log_scaled_1f1: requires a > 0, b > 0, z >= 0 (a=" +
                          detail::to_string(a) + ", b=" + detail::to_string(b) +
                          ", z=" + detail::to_string(z) + ")");
    }
    if (z > 500.0) {
        // log[Gamma(b)/Gamma(a) e^z z^(a-b) sum_k (b-a)_k (1-a)_k / (k! z^k)]
        double sum = 1.0, term = 1.0, prev = 1.0;
        for (int k = 0; k < 200; ++k) {
            term *= (b - a + k) * (1.0 - a + k) / ((k + 1.0) * z);
            if (std::abs(term) > std::abs(prev)) break;
            sum += term;
            prev = term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) {
                const double lg = log_gamma(complex{b, 0.0}).real() - log_gamma(complex{a, 0.0}).real();
                return {lg + z + (a - b) * std::log(z) + std::log(sum), k + 2, true};
            }
        }
    }
    constexpr double big = 1e280;
    const double log_big = std::log(big);
    double log_offset = 0.0;
    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < series_cap; ++k) {
        const double ratio = (a + k) / (b + k) * z / (k + 1);
        term *= ratio;
        sum += term;
        if (sum > big) {
            sum /= big;
            term /= big;
            log_offset += log_big;
        }
        if (term < series_tol * sum && ratio < 1.0) {
            return {log_offset + std::log(sum), k + 2, true};
        }
    }
    throw ConvergenceError("log_scaled_1f1: series did not converge within " +
                           std::to_string(series_cap) + " terms (z=" + detail::to_string(z) + ")");
}

/// Confluent hypergeometric 1F1(a, b, z).
///
/// Positive-term cases (a, b > 0, z >= 0) above z = 40 go through the
/// log-scaled sum. For z < 0 with b - a > 0 and b > 0 the Kummer transformation
/// e^z 1F1(b-a, b, -z) turns the alternating series into a positive one.
inline SeriesResult<double> kummer_1f1(double a, double b, double z) {
    detail::check_b(b, "kummer_1f1");
    if (z == 0.0) return {1.0, 1, true};
    if (z > 40.0 && a > 0.0 && b > 0.0) {
        auto r = log_scaled_1f1(a, b, z);
        const double v = std::exp(r.value);
        if (!std::isfinite(v)) {
            throw DomainError("kummer_1f1: value overflows double (log value " +
                              detail::to_string(r.value) + "); use log_scaled_1f1");
        }
        return {v, r.terms_used, true};
    }
    if (z < 0.0 && b > 0.0 && b - a > 0.0 && !(a <= 0.0 && a == std::round(a))) {
        auto r = detail::kummer_series(b - a, b, -z);
        return {std::exp(z) * r.value, r.terms_used, true};
    }
    return detail::kummer_series(a, b, z);
}

/// d/dz 1F1(a, b, z) = (a/b) 1F1(a+1, b+1, z).
inline SeriesResult<double> kummer_1f1_deriv(double a, double b, double z) {
    detail::check_b(b, "kummer_1f1_deriv");
    if (a == 0.0) return {0.0, 1, true};
    auto r = kummer_1f1(a + 1.0, b + 1.0, z);
    r.value *= a / b;
    return r;
}

/// Generalized hypergeometric 0F2(;b1, b2; z), real or complex z.
template <typename T>
SeriesResult<T> hyp_0f2(double b1, double b2, T z) {
    detail::check_b(b1, "hyp_0f2");
    detail::check_b(b2, "hyp_0f2");
    T sum = T(1);
    T term = T(1);
    for (int k = 0; k < series_cap; ++k) {
        const double denom = (b1 + k) * (b2 + k) * (k + 1);
        term *= z / denom;
        sum += term;
        if (std::abs(term) <= series_tol * std::abs(sum) && std::abs(z) < std::abs(denom)) {
            return {sum, k + 2, true};
        }
    }
    throw ConvergenceError("hyp_0f2: series did not converge within " +
                           std::to_string(series_cap) + " terms");
}

/// Physicists' Hermite polynomial H_n(x).
inline double hermite(int n, double x) {
    if (n <= 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace susyho::specfun
