#pragma once

// Non-linear coherent states |mu> = sum_n c_n mu^n |phi_n>, eigenstates of B,
// and the radial weight sigma of their resolution of unity.
//
// sigma is the inverse Mellin transform of
//   M(s) = Gamma(s) Gamma(s - 1/2 - eps) Gamma(s + 1/2 - eps) / [Gamma(1/2-eps) Gamma(3/2-eps)],
// i.e. a Meijer G^{30}_{03}, evaluated along Re s = c to the right of all poles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "susyho/darboux.hpp"
#include "susyho/errors.hpp"
#include "susyho/quadrature.hpp"
#include "susyho/specfun.hpp"

namespace susyho {

inline constexpr double coherent_tail_tol = 1e-14;
inline constexpr double default_contour_abscissa = 1.0;

namespace detail {

inline void require_epsilon(double epsilon, const char* who) {
    if (!(epsilon < ground_energy_plus)) {
        throw EpsilonTooLarge(epsilon, ground_energy_plus,
                              std::string(who) + ": epsilon = " +
                                  specfun::detail::to_string(epsilon) + " violates epsilon < 1/2");
    }
}

} // namespace detail

/// c_n / c_0 for n = 0..n_max from c_{n+1} = c_n [(n+1/2-eps)(n+1)(n+3/2-eps)]^{-1/2}.
inline std::vector<double> coherent_coeffs(double epsilon, int n_max) {
    detail::require_epsilon(epsilon, "coherent_coeffs");
    if (n_max < 0) throw DomainError("coherent_coeffs: n_max must be nonnegative");
    std::vector<double> c(n_max + 1);
    c[0] = 1.0;
    for (int n = 0; n < n_max; ++n) {
        c[n + 1] = c[n] / std::sqrt((n + 0.5 - epsilon) * (n + 1.0) * (n + 1.5 - epsilon));
    }
    return c;
}

/// Same ratios from [n! (1/2-eps)_n (3/2-eps)_n]^{-1/2}.
inline std::vector<double> coherent_coeffs_closed_form(double epsilon, int n_max) {
    detail::require_epsilon(epsilon, "coherent_coeffs_closed_form");
    std::vector<double> c(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        c[n] = 1.0 / std::sqrt(specfun::pochhammer(1.0, n) *
                               specfun::pochhammer(0.5 - epsilon, n) *
                               specfun::pochhammer(1.5 - epsilon, n));
    }
    return c;
}

/// c_0(mu) = 0F2(1/2-eps, 3/2-eps; |mu|^2)^{-1/2}.
inline double normalization_c0(double epsilon, complex mu) {
    detail::require_epsilon(epsilon, "normalization_c0");
    const double f = specfun::hyp_0f2(0.5 - epsilon, 1.5 - epsilon, std::norm(mu)).value;
    return 1.0 / std::sqrt(f);
}

struct CoherentState {
    complex mu;
    double epsilon = 0.0;
    std::vector<complex> coeffs; // c_n mu^n, n = 0..n_trunc-1
    double c0 = 1.0;
    double trunc_tail = 0.0; // |c_N mu^N| of the first dropped term, over the norm

    int n_trunc() const { return static_cast<int>(coeffs.size()); }

    /// Vector on the FockRep basis (index 0 = eps-state, never populated).
    Eigen::VectorXcd fock_vector(int dim) const {
        if (dim < n_trunc()) {
            throw DomainError("fock_vector: dim " + std::to_string(dim) +
                              " below truncation " + std::to_string(n_trunc()));
        }
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim + 1);
        for (int n = 0; n < n_trunc(); ++n) v(n + 1) = coeffs[n];
        return v;
    }
};

/// Eigenstate of B with eigenvalue mu. Without n_max the series is cut at the
/// first N with |c_N mu^N|^2 < 1e-28 * (running norm); with n_max the levels
/// 0..n_max are kept and a tail above 1e-14 is an error.
inline CoherentState build_coherent_state(double epsilon, complex mu,
                                          std::optional<int> n_max = std::nullopt) {
    detail::require_epsilon(epsilon, "build_coherent_state");
    CoherentState st{mu, epsilon, {}, normalization_c0(epsilon, mu), 0.0};
    complex amp = st.c0;
    double norm = 0.0;
    for (int n = 0;; ++n) {
        const double a2 = std::norm(amp);
        const bool done = n_max ? n > *n_max : (n > 0 && a2 < 1e-28 * norm);
        if (done) {
            st.trunc_tail = std::sqrt(a2 / norm);
            break;
        }
        if (n >= specfun::series_cap) {
            throw ConvergenceError("build_coherent_state: no truncation found");
        }
        st.coeffs.push_back(amp);
        norm += a2;
        amp *= mu / std::sqrt((n + 0.5 - epsilon) * (n + 1.0) * (n + 1.5 - epsilon));
    }
    if (st.trunc_tail > coherent_tail_tol) {
        throw ConvergenceError("build_coherent_state: truncation tail " +
                               specfun::detail::to_string(st.trunc_tail) + " exceeds " +
                               specfun::detail::to_string(coherent_tail_tol));
    }
    return st;
}

/// <mu|nu> = c_0(mu) c_0(nu) 0F2(1/2-eps, 3/2-eps; conj(mu) nu).
inline complex overlap(const CoherentState& s1, const CoherentState& s2) {
    if (s1.epsilon != s2.epsilon) {
        throw DomainError("overlap: states built for different epsilon");
    }
    const double eps = s1.epsilon;
    const complex f = specfun::hyp_0f2(0.5 - eps, 1.5 - eps, std::conj(s1.mu) * s2.mu).value;
    return s1.c0 * s2.c0 * f;
}

/// n! (1/2-eps)_n (3/2-eps)_n, the n-th power moment of sigma.
inline double moment_target(double epsilon, int n) {
    return specfun::pochhammer(1.0, n) * specfun::pochhammer(0.5 - epsilon, n) *
           specfun::pochhammer(1.5 - epsilon, n);
}

namespace detail {

// log of the normalized Mellin data M(s).
inline complex log_mellin(double epsilon, complex s) {
    using specfun::log_gamma;
    const double log_norm = log_gamma(complex{0.5 - epsilon}).real() +
                            log_gamma(complex{1.5 - epsilon}).real();
    return log_gamma(s) + log_gamma(s - 0.5 - epsilon) + log_gamma(s + 0.5 - epsilon) - log_norm;
}

struct ContourNodes {
    std::vector<double> t;
    std::vector<double> w;
};

// Graded Gauss-Legendre nodes on [0, T] for an integrand analytic within
// `dist` of the real axis near t = 0 and oscillating at most at rate omega.
inline ContourNodes contour_nodes(double dist, double omega, double t_max) {
    const auto& rule = quad::GaussLegendre<20>::instance();
    ContourNodes out;
    double t = 0.0;
    while (t < t_max) {
        const double w = std::min({1.0, 0.5 * std::max(dist, t), 6.0 / omega});
        const double half = 0.5 * w;
        const double mid = t + half;
        for (int i = 0; i < 20; ++i) {
            out.t.push_back(mid + half * rule.nodes[i]);
            out.w.push_back(half * rule.weights[i]);
        }
        t += w;
    }
    return out;
}

// Height beyond which |M(c+it)| < 1e-18 |M(c)|; |M| decreases in |t| when all
// Gamma arguments have positive real part.
inline double contour_height(double epsilon, double c) {
    const double peak = log_mellin(epsilon, complex{c, 0.0}).real();
    const double drop = std::log(1e-18);
    double t = 1.0;
    while (log_mellin(epsilon, complex{c, t}).real() - peak > drop) {
        t *= 1.25;
        if (t > 1e5) throw ConvergenceError("contour: integrand does not decay");
    }
    return t;
}

} // namespace detail

/// sigma(x) by numerical inverse Mellin transform. Contour tables are cached
/// per instance; use one instance per thread.
class MeasureDensity {
public:
    explicit MeasureDensity(double epsilon, std::optional<double> abscissa = std::nullopt)
        : epsilon_(epsilon), abscissa_(abscissa) {
        detail::require_epsilon(epsilon, "MeasureDensity");
        if (abscissa_ && !(*abscissa_ > rightmost_pole() + 1e-9)) {
            throw ContourPlacementError(
                "contour abscissa c = " + specfun::detail::to_string(*abscissa_) +
                " must lie right of the rightmost pole s = " +
                specfun::detail::to_string(rightmost_pole()));
        }
    }

    double epsilon() const { return epsilon_; }
    std::optional<double> abscissa() const { return abscissa_; }

    /// max(0, 1/2 + eps): poles sit at s = -k, 1/2+eps-k, -1/2+eps-k.
    double rightmost_pole() const { return std::max(0.0, 0.5 + epsilon_); }

    /// Abscissa used at x: the fixed one if given, otherwise max(1, saddle of
    /// |M(s) x^{-s}| on the real axis) rounded to a multiple of 1/2. Moving to
    /// the saddle removes the cancellation a fixed contour suffers at large x.
    double abscissa_for(double x) const {
        if (abscissa_) return *abscissa_;
        const double lx = std::log(x);
        const auto slope = [&](double s) {
            return specfun::digamma(s) + specfun::digamma(s - 0.5 - epsilon_) +
                   specfun::digamma(s + 0.5 - epsilon_) - lx;
        };
        const double c0 = default_contour_abscissa;
        if (slope(c0) >= 0.0) return c0;
        double lo = c0;
        double hi = 2.0 * c0;
        while (slope(hi) < 0.0) {
            lo = hi;
            hi *= 2.0;
        }
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (slope(mid) < 0.0 ? lo : hi) = mid;
        }
        return std::max(c0, std::round(2.0 * lo) / 2.0);
    }

    double operator()(double x) const {
        if (!(x > 0.0)) throw DomainError("measure_density: x must be positive");
        const double c = abscissa_for(x);
        const double lx = std::log(x);
        const auto& tab = table(c, std::abs(lx));
        double acc = 0.0;
        for (std::size_t j = 0; j < tab.nodes.t.size(); ++j) {
            const complex s{c, tab.nodes.t[j]};
            acc += tab.nodes.w[j] * std::exp(tab.log_m[j] - s * lx).real();
        }
        return acc / std::numbers::pi;
    }

    /// Figure-style radial weight f(x) = sigma(x) / c_0^2(sqrt x) = sigma(x) 0F2(.; x).
    double radial(double x) const {
        return (*this)(x) * specfun::hyp_0f2(0.5 - epsilon_, 1.5 - epsilon_, x).value;
    }

private:
    struct Table {
        double c = 0.0;
        double max_log_x = 0.0;
        detail::ContourNodes nodes;
        std::vector<complex> log_m;
    };

    const Table& table(double c, double abs_log_x) const {
        for (const auto& t : cache_) {
            if (t.c == c && t.max_log_x >= abs_log_x) return t;
        }
        double bound = 16.0;
        while (bound < abs_log_x) bound *= 2.0;
        Table t{c, bound, {}, {}};
        const double t_max = detail::contour_height(epsilon_, c);
        const double omega = bound + 3.0 * std::log(1.0 + c + t_max) + std::numbers::pi;
        t.nodes = detail::contour_nodes(c - rightmost_pole(), omega, t_max);
        t.log_m.reserve(t.nodes.t.size());
        for (double tj : t.nodes.t) t.log_m.push_back(detail::log_mellin(epsilon_, {c, tj}));
        cache_.push_back(std::move(t));
        return cache_.back();
    }

    double epsilon_;
    std::optional<double> abscissa_;
    mutable std::vector<Table> cache_;
};

inline double measure_density(double epsilon, double x,
                              std::optional<double> abscissa = std::nullopt) {
    return MeasureDensity(epsilon, abscissa)(x);
}

inline double radial_density(double epsilon, double x) {
    return MeasureDensity(epsilon).radial(x);
}

struct MomentResult {
    int n = 0;
    double value = 0.0;
    double target = 0.0;
    double error_estimate = 0.0;

    double relative_error() const { return std::abs(value - target) / std::abs(target); }
};

/// int_0^inf sigma(x) x^n dx. Quadrature in y = ln x over [ln x_cut, y_hi];
/// the sliver [0, x_cut] is integrated in x inside the Mellin integral,
///   int_0^{x_cut} sigma x^n dx = (1/2 pi i) int M(s) x_cut^{n+1-s} / (n+1-s) ds,
/// on a line between the rightmost pole and s = n+1.
inline MomentResult measure_moment(const MeasureDensity& sigma, int n, double x_cut = 1e-6) {
    if (n < 0) throw DomainError("measure_moment: n must be nonnegative");
    const double eps = sigma.epsilon();
    const double y0 = std::log(x_cut);

    const auto g = [&](double y) { return sigma(std::exp(y)) * std::exp((n + 1.0) * y); };
    double gmax = 0.0;
    double y_hi = y0;
    for (;;) {
        y_hi += 0.5;
        const double v = std::abs(g(y_hi));
        gmax = std::max(gmax, v);
        if (v < 1e-17 * gmax && y_hi > y0 + 2.0) break;
        if (y_hi > 80.0) throw ConvergenceError("measure_moment: integrand tail does not decay");
    }
    std::vector<double> breaks;
    for (double y = y0; y < y_hi; y += 0.5) breaks.push_back(y);
    breaks.push_back(y_hi);
    const auto main = quad::integrate(g, breaks, 1e-14 * gmax * (y_hi - y0));

    const double p = sigma.rightmost_pole();
    const double cs = 0.5 * (p + n + 1.0);
    const double dist = 0.5 * (n + 1.0 - p);
    const double t_max = detail::contour_height(eps, cs);
    const double omega = std::abs(y0) + 3.0 * std::log(1.0 + cs + t_max) + std::numbers::pi;
    const auto nodes = detail::contour_nodes(dist, omega, t_max);
    double sliver = 0.0;
    for (std::size_t j = 0; j < nodes.t.size(); ++j) {
        const complex s{cs, nodes.t[j]};
        const complex v =
            std::exp(detail::log_mellin(eps, s) + (n + 1.0 - s) * y0) / (n + 1.0 - s);
        sliver += nodes.w[j] * v.real();
    }
    sliver /= std::numbers::pi;

    return {n, main.value + sliver, moment_target(eps, n), main.error};
}

/// Deviation of int d rho |mu><mu| from 1 - |phi_eps><phi_eps| on the
/// (dim+1)-dimensional FockRep basis. The angular integral removes m != n
/// terms, so off-diagonals and the eps-row are zero by construction; diagonal
/// entry n+1 is moment_n / (n! (1/2-eps)_n (3/2-eps)_n) - 1.
inline Eigen::MatrixXd resolution_of_unity_check(double epsilon, int dim) {
    detail::require_epsilon(epsilon, "resolution_of_unity_check");
    if (dim < 1) throw DomainError("resolution_of_unity_check: dim must be >= 1");
    const MeasureDensity sigma(epsilon);
    Eigen::MatrixXd dev = Eigen::MatrixXd::Zero(dim + 1, dim + 1);
    for (int n = 0; n < dim; ++n) {
        const auto m = measure_moment(sigma, n);
        dev(n + 1, n + 1) = m.value / m.target - 1.0;
    }
    return dev;
}

} // namespace susyho
