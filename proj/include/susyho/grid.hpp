#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "susyho/errors.hpp"

namespace susyho {

using complex = std::complex<double>;

/// Uniform grid on [x_min, x_max]. Defaults cover oscillator levels n <= 10
/// with Gaussian decay at the edges.
struct GridSpec {
    double x_min = -12.0;
    double x_max = 12.0;
    int n_points = 4801;

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + i * spacing(); }

    void validate() const {
        if (n_points < 5 || !(x_max > x_min)) {
            throw GridError("grid needs x_max > x_min and at least 5 points");
        }
    }
};

enum class StateKind { GroundEpsilon, Excited, PlusOscillator, CoherentReal, Transformed };

struct StateLabel {
    StateKind kind = StateKind::Transformed;
    int n = 0;
    complex mu{};
};

struct WavefunctionGrid {
    GridSpec grid;
    std::vector<complex> values;
    StateLabel label;

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v));
        return m;
    }

    /// True when both edge samples are below rel * max|psi|.
    bool decays_at_edges(double rel = 1e-8) const {
        const double m = max_abs();
        return std::abs(values.front()) < rel * m && std::abs(values.back()) < rel * m;
    }
};

namespace gridops {

/// Composite trapezoid of samples with spacing h.
template <typename T>
T trapezoid(std::span<const T> f, double h) {
    if (f.size() < 2) return T{};
    T acc = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
    return acc * h;
}

/// <a|b> = integral conj(a) b on a shared grid.
inline complex inner(const WavefunctionGrid& a, const WavefunctionGrid& b) {
    if (a.values.size() != b.values.size()) throw GridError("inner: grid size mismatch");
    std::vector<complex> prod(a.values.size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = std::conj(a.values[i]) * b.values[i];
    return trapezoid<complex>(prod, a.grid.spacing());
}

inline double norm2(const WavefunctionGrid& a) { return inner(a, a).real(); }

/// Five-point first derivative; one-sided five-point stencils on the two
/// outermost samples at each end.
inline std::vector<complex> derivative(std::span<const complex> f, double h) {
    const std::size_t n = f.size();
    if (n < 5) throw GridError("derivative: need at least 5 samples");
    std::vector<complex> d(n);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    }
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                3.0 * f[n - 5]) /
               (12.0 * h);
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) /
               (12.0 * h);
    return d;
}

/// Five-point second derivative on the interior; the two outermost samples at
/// each end are left at zero.
inline std::vector<complex> second_derivative(std::span<const complex> f, double h) {
    const std::size_t n = f.size();
    if (n < 5) throw GridError("second_derivative: need at least 5 samples");
    std::vector<complex> d(n);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) /
               (12.0 * h * h);
    }
    return d;
}

} // namespace gridops
} // namespace susyho
