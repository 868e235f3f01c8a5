#pragma once

// Darboux/SUSY partners of the harmonic oscillator in dimensionless units
// (x in sqrt(hbar/m omega), energies in hbar omega).
//
// Seed:     u(x) = e^{-x^2/2} [ M(a1, 1/2, x^2) + beta x M(a2, 3/2, x^2) ],
//           a1 = (1 - 2 eps)/4, a2 = (3 - 2 eps)/4, alpha fixed to 1.
// Operator: A = (d/dx + u'/u)/sqrt(2), so H_+ = A A^dag + eps, H_- = A^dag A + eps.
// Partner:  V_-(x) = (u'/u)^2 - x^2/2 + 2 eps.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "susyho/errors.hpp"
#include "susyho/grid.hpp"
#include "susyho/specfun.hpp"

namespace susyho {

inline constexpr double ground_energy_plus = 0.5;
/// Soft upper limit on epsilon; the family degenerates as epsilon -> 1/2.
inline constexpr double epsilon_soft_limit = 0.499;
/// Coarsest spacing accepted by the finite-difference operators.
inline constexpr double max_operator_spacing = 0.02;

struct PartnerParams {
    double epsilon = -0.5;
    complex beta{0.0, 0.0};
    bool complex_family = false;
};

/// Energy of oscillator level n.
inline double level_energy(int n) { return n + 0.5; }

/// Nodeless bound beta_c(eps) = 2 Gamma(3/4 - eps/2) / Gamma(1/4 - eps/2).
inline double beta_critical(double epsilon) {
    if (!(epsilon < ground_energy_plus)) {
        throw EpsilonTooLarge(epsilon, ground_energy_plus,
                              "epsilon = " + specfun::detail::to_string(epsilon) +
                                  " violates epsilon < E_0 = 1/2");
    }
    // Both arguments are positive here; the log form avoids overflow for very negative eps.
    const double num = specfun::log_gamma(complex{0.75 - 0.5 * epsilon, 0.0}).real();
    const double den = specfun::log_gamma(complex{0.25 - 0.5 * epsilon, 0.0}).real();
    return 2.0 * std::exp(num - den);
}

inline PartnerParams validate_params(PartnerParams p, bool allow_near_half = false) {
    using specfun::detail::to_string;
    if (!(p.epsilon < ground_energy_plus)) {
        throw EpsilonTooLarge(p.epsilon, ground_energy_plus,
                              "epsilon = " + to_string(p.epsilon) +
                                  " violates epsilon < E_0 = 1/2");
    }
    if (p.epsilon > epsilon_soft_limit && !allow_near_half) {
        throw EpsilonTooLarge(p.epsilon, epsilon_soft_limit,
                              "epsilon = " + to_string(p.epsilon) + " exceeds the soft limit " +
                                  to_string(epsilon_soft_limit) +
                                  " (near-degenerate family; override to proceed)");
    }
    if (!std::isfinite(p.beta.real()) || !std::isfinite(p.beta.imag())) {
        throw DomainError("beta must be finite");
    }
    p.complex_family = p.beta.imag() != 0.0;
    if (!p.complex_family) {
        const double bc = beta_critical(p.epsilon);
        const double b = p.beta.real();
        if (std::abs(b) >= bc) {
            throw BetaOutOfRange(b, bc,
                                 "|beta| = " + to_string(std::abs(b)) +
                                     " >= beta_c(epsilon) = " + to_string(bc) +
                                     " at epsilon = " + to_string(p.epsilon));
        }
    }
    return p;
}

struct SeedValue {
    complex u;
    complex du;
};

/// u = exp(log_scale) * p and u' = exp(log_scale) * dp.
struct ScaledSeed {
    double log_scale = 0.0;
    complex p;
    complex dp;
};

/// Immutable evaluator of the nodeless seed u and its derivative.
class SeedSolution {
public:
    explicit SeedSolution(PartnerParams p, bool allow_near_half = false)
        : params_(validate_params(p, allow_near_half)),
          a1_((1.0 - 2.0 * params_.epsilon) / 4.0),
          a2_((3.0 - 2.0 * params_.epsilon) / 4.0) {}

    SeedSolution(double epsilon, complex beta, bool allow_near_half = false)
        : SeedSolution(PartnerParams{epsilon, beta, false}, allow_near_half) {}

    const PartnerParams& params() const { return params_; }
    double epsilon() const { return params_.epsilon; }
    complex beta() const { return params_.beta; }

    ScaledSeed scaled(double x) const {
        const double z = x * x;
        // d/dx M(a, b, x^2) = 2x (a/b) M(a+1, b+1, x^2)
        const double l1 = specfun::log_scaled_1f1(a1_, 0.5, z).value;
        const double l1d = specfun::log_scaled_1f1(a1_ + 1.0, 1.5, z).value;
        const double l2 = specfun::log_scaled_1f1(a2_, 1.5, z).value;
        const double l2d = specfun::log_scaled_1f1(a2_ + 1.0, 2.5, z).value;
        const double lmax = std::max(std::max(l1, l1d), std::max(l2, l2d));
        const double m1 = std::exp(l1 - lmax);
        const double m1d = 2.0 * x * (a1_ / 0.5) * std::exp(l1d - lmax);
        const double m2 = std::exp(l2 - lmax);
        const double m2d = 2.0 * x * (a2_ / 1.5) * std::exp(l2d - lmax);
        const complex beta = params_.beta;
        const complex p = m1 + beta * x * m2;
        const complex dbracket = m1d + beta * (m2 + x * m2d);
        return {-0.5 * z + lmax, p, dbracket - x * p};
    }

    /// u'(x)/u(x), formed from scaled quantities.
    complex log_derivative(double x) const {
        const ScaledSeed s = scaled(x);
        if (std::abs(s.p) < 1e-300 * std::abs(s.dp) || s.p == 0.0) {
            throw DomainError("u'/u: |u| vanishes at x = " + specfun::detail::to_string(x) +
                              " (parameters outside the nodeless family?)");
        }
        return s.dp / s.p;
    }

    /// log u(x) modulo 2 pi i.
    complex log_u(double x) const {
        const ScaledSeed s = scaled(x);
        if (s.p == 0.0) {
            throw DomainError("log u: u vanishes at x = " + specfun::detail::to_string(x));
        }
        return s.log_scale + std::log(s.p);
    }

private:
    PartnerParams params_;
    double a1_;
    double a2_;
};

/// (u, u'); finite for |x| up to about 35.
inline SeedValue seed_u(const SeedSolution& s, double x) {
    const ScaledSeed sc = s.scaled(x);
    const double scale = std::exp(sc.log_scale);
    return {scale * sc.p, scale * sc.dp};
}

/// SUSY potential Phi = u'/u (the 1/sqrt(2) sits in A).
inline complex susy_phi(const SeedSolution& s, double x) { return s.log_derivative(x); }

inline complex partner_potential(const SeedSolution& s, double x) {
    const complex w = s.log_derivative(x);
    return w * w - 0.5 * x * x + 2.0 * s.epsilon();
}

inline double oscillator_potential(double x) { return 0.5 * x * x; }

namespace detail {

inline std::vector<complex> phi_on_grid(const SeedSolution& s, const GridSpec& g) {
    std::vector<complex> w(g.n_points);
    for (int i = 0; i < g.n_points; ++i) w[i] = s.log_derivative(g.x(i));
    return w;
}

inline void require_real_family(const SeedSolution& s, const char* who) {
    if (s.params().complex_family) {
        throw DomainError(std::string(who) + " is defined for real beta only");
    }
}

inline void require_fine_grid(const GridSpec& g, const char* who) {
    g.validate();
    if (g.spacing() > max_operator_spacing) {
        throw GridError(std::string(who) + ": grid spacing " +
                        specfun::detail::to_string(g.spacing()) + " exceeds " +
                        specfun::detail::to_string(max_operator_spacing));
    }
}

} // namespace detail

/// Isolated ground state N/u(x) at energy epsilon, normalized on the grid.
inline WavefunctionGrid ground_state(const SeedSolution& s, const GridSpec& g) {
    detail::require_real_family(s, "ground_state");
    g.validate();
    WavefunctionGrid out{g, std::vector<complex>(g.n_points), {StateKind::GroundEpsilon, 0, {}}};
    for (int i = 0; i < g.n_points; ++i) out.values[i] = std::exp(-s.log_u(g.x(i)));
    if (!out.decays_at_edges()) {
        throw GridError("ground_state: grid [" + specfun::detail::to_string(g.x_min) + ", " +
                        specfun::detail::to_string(g.x_max) +
                        "] too small, state has not decayed at the edges");
    }
    const double norm = std::sqrt(gridops::norm2(out));
    for (auto& v : out.values) v /= norm;
    return out;
}

/// phi^-_n(x) = e^{-x^2/2} [H_{n+1} + (u'/u - x) H_n] / sqrt(sqrt(pi) 2^{n+1} n! (n+1/2-eps)).
/// The prefactor is used as is; no renormalization.
inline WavefunctionGrid excited_state(const SeedSolution& s, int n, const GridSpec& g) {
    if (n < 0) throw DomainError("excited_state: n must be nonnegative");
    g.validate();
    const double log_pref =
        -0.5 * (0.5 * std::log(std::numbers::pi) + (n + 1) * std::log(2.0) + std::lgamma(n + 1.0) +
                std::log(level_energy(n) - s.epsilon()));
    WavefunctionGrid out{g, std::vector<complex>(g.n_points), {StateKind::Excited, n, {}}};
    for (int i = 0; i < g.n_points; ++i) {
        const double x = g.x(i);
        const complex w = s.log_derivative(x);
        const double env = std::exp(log_pref - 0.5 * x * x);
        out.values[i] = env * (specfun::hermite(n + 1, x) + (w - x) * specfun::hermite(n, x));
    }
    return out;
}

/// Oscillator eigenstate (sqrt(pi) 2^n n!)^{-1/2} H_n(x) e^{-x^2/2}.
inline WavefunctionGrid oscillator_state(int n, const GridSpec& g) {
    if (n < 0) throw DomainError("oscillator_state: n must be nonnegative");
    g.validate();
    const double log_pref =
        -0.5 * (0.5 * std::log(std::numbers::pi) + n * std::log(2.0) + std::lgamma(n + 1.0));
    WavefunctionGrid out{g, std::vector<complex>(g.n_points), {StateKind::PlusOscillator, n, {}}};
    for (int i = 0; i < g.n_points; ++i) {
        const double x = g.x(i);
        out.values[i] = std::exp(log_pref - 0.5 * x * x) * specfun::hermite(n, x);
    }
    return out;
}

/// A psi or A^dag psi with A = (d/dx + u'/u)/sqrt(2), A^dag = (-d/dx + u'/u)/sqrt(2).
inline WavefunctionGrid apply_a_op(const SeedSolution& s, const WavefunctionGrid& psi,
                                   bool dagger) {
    detail::require_fine_grid(psi.grid, "apply_a_op");
    const auto w = detail::phi_on_grid(s, psi.grid);
    const auto d = gridops::derivative(psi.values, psi.grid.spacing());
    const double sign = dagger ? -1.0 : 1.0;
    WavefunctionGrid out{psi.grid, std::vector<complex>(psi.values.size()), {}};
    for (std::size_t i = 0; i < d.size(); ++i) {
        out.values[i] = (sign * d[i] + w[i] * psi.values[i]) / std::numbers::sqrt2;
    }
    return out;
}

/// Oscillator ladder a = (d/dx + x)/sqrt(2) or a^dag = (-d/dx + x)/sqrt(2).
inline WavefunctionGrid apply_ladder(const WavefunctionGrid& psi, bool dagger) {
    detail::require_fine_grid(psi.grid, "apply_ladder");
    const auto d = gridops::derivative(psi.values, psi.grid.spacing());
    const double sign = dagger ? -1.0 : 1.0;
    WavefunctionGrid out{psi.grid, std::vector<complex>(psi.values.size()), {}};
    for (std::size_t i = 0; i < d.size(); ++i) {
        out.values[i] = (sign * d[i] + psi.grid.x(static_cast<int>(i)) * psi.values[i]) /
                        std::numbers::sqrt2;
    }
    return out;
}

namespace detail {

template <typename Potential>
WavefunctionGrid apply_schroedinger(const WavefunctionGrid& psi, Potential&& v) {
    psi.grid.validate();
    const auto d2 = gridops::second_derivative(psi.values, psi.grid.spacing());
    WavefunctionGrid out{psi.grid, std::vector<complex>(psi.values.size()), {}};
    for (std::size_t i = 0; i < d2.size(); ++i) {
        out.values[i] = -0.5 * d2[i] + v(psi.grid.x(static_cast<int>(i))) * psi.values[i];
    }
    return out;
}

} // namespace detail

/// H_- psi by finite differences. The two outermost samples at each end are not meaningful.
inline WavefunctionGrid apply_h_minus(const SeedSolution& s, const WavefunctionGrid& psi) {
    return detail::apply_schroedinger(psi, [&](double x) { return partner_potential(s, x); });
}

inline WavefunctionGrid apply_h_plus(const WavefunctionGrid& psi) {
    return detail::apply_schroedinger(psi,
                                      [](double x) { return complex{oscillator_potential(x)}; });
}

/// max |H psi - E psi| / max |psi| over the interior (edge stencils excluded).
inline double eigen_residual(const WavefunctionGrid& h_psi, const WavefunctionGrid& psi,
                             complex energy) {
    double worst = 0.0;
    const std::size_t n = psi.values.size();
    for (std::size_t i = 2; i + 2 < n; ++i) {
        worst = std::max(worst, std::abs(h_psi.values[i] - energy * psi.values[i]));
    }
    return worst / psi.max_abs();
}

} // namespace susyho
