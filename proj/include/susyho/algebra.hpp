#pragma once

// Quadratic ladder algebra of H_- on the truncated basis
// {phi_eps, phi_0, ..., phi_{N-1}}; index 0 is the isolated eps-state and
// index k+1 holds phi_k. Matrices are stored as M(m, n) = <m|M|n>.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "susyho/darboux.hpp"
#include "susyho/errors.hpp"
#include "susyho/grid.hpp"

namespace susyho {

struct FockRep {
    double epsilon = 0.0;
    int dim = 0; // excited levels; matrices are (dim+1) x (dim+1)
    Eigen::MatrixXd h_minus;
    Eigen::MatrixXd b;
    Eigen::MatrixXd b_dagger;

    int size() const { return dim + 1; }
};

/// <phi_n| B |phi_{n+1}> = sqrt((n+1/2-eps)(n+1)(n+3/2-eps)).
inline double ladder_element(double epsilon, int n) {
    return std::sqrt((n + 0.5 - epsilon) * (n + 1.0) * (n + 1.5 - epsilon));
}

/// Psi(E) = (E - eps)(E + 1/2)(E + 1 - eps).
inline double casimir_psi(double epsilon, double e) {
    return (e - epsilon) * (e + 0.5) * (e + 1.0 - epsilon);
}

/// 3E^2 - 4 eps E + eps^2, the right-hand side of [B, B^dag].
inline double quadratic_rhs(double epsilon, double e) {
    return 3.0 * e * e - 4.0 * epsilon * e + epsilon * epsilon;
}

inline FockRep build_fock_rep(double epsilon, int dim) {
    if (!(epsilon < ground_energy_plus)) {
        throw EpsilonTooLarge(epsilon, ground_energy_plus,
                              "build_fock_rep: epsilon = " +
                                  specfun::detail::to_string(epsilon) +
                                  " violates epsilon < 1/2");
    }
    if (dim < 2) throw DomainError("build_fock_rep: dim must be >= 2");
    const int size = dim + 1;
    FockRep rep{epsilon, dim, Eigen::MatrixXd::Zero(size, size), Eigen::MatrixXd::Zero(size, size),
                Eigen::MatrixXd::Zero(size, size)};
    rep.h_minus(0, 0) = epsilon;
    for (int n = 0; n < dim; ++n) rep.h_minus(n + 1, n + 1) = level_energy(n);
    for (int n = 0; n + 1 < dim; ++n) rep.b(n + 1, n + 2) = ladder_element(epsilon, n);
    rep.b_dagger = rep.b.transpose();
    return rep;
}

/// Oscillator a, a^dag, H_+ on {phi^+_0, ..., phi^+_{dim-1}}.
struct OscillatorRep {
    Eigen::MatrixXd h_plus;
    Eigen::MatrixXd a;
    Eigen::MatrixXd a_dagger;
};

inline OscillatorRep build_oscillator_rep(int dim) {
    if (dim < 2) throw DomainError("build_oscillator_rep: dim must be >= 2");
    OscillatorRep rep{Eigen::MatrixXd::Zero(dim, dim), Eigen::MatrixXd::Zero(dim, dim),
                      Eigen::MatrixXd::Zero(dim, dim)};
    for (int n = 0; n < dim; ++n) rep.h_plus(n, n) = level_energy(n);
    for (int n = 0; n + 1 < dim; ++n) rep.a(n, n + 1) = std::sqrt(n + 1.0);
    rep.a_dagger = rep.a.transpose();
    return rep;
}

struct ResidualEntry {
    std::string relation;
    double residual = 0.0; // max-norm, relative to max(1, |target|_max)
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;

    double max() const {
        double m = 0.0;
        for (const auto& e : entries) m = std::max(m, e.residual);
        return m;
    }
};

namespace detail {

// Truncation corrupts the last row/column of products, so compare the
// leading (size-1) block only.
inline double interior_residual(const Eigen::MatrixXd& lhs, const Eigen::MatrixXd& rhs) {
    const Eigen::Index k = lhs.rows() - 1;
    const double scale = std::max(1.0, rhs.topLeftCorner(k, k).cwiseAbs().maxCoeff());
    return (lhs - rhs).topLeftCorner(k, k).cwiseAbs().maxCoeff() / scale;
}

inline Eigen::MatrixXd diagonal_map(const Eigen::MatrixXd& h, auto&& f) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(h.rows(), h.cols());
    for (Eigen::Index i = 0; i < h.rows(); ++i) out(i, i) = f(h(i, i));
    return out;
}

} // namespace detail

/// [H,B] = -B, [H,B^dag] = B^dag, [B,B^dag] = 3H^2 - 4 eps H + eps^2.
inline ResidualReport commutator_check(const FockRep& rep) {
    if (rep.dim < 2) throw DomainError("commutator_check: dim must be >= 2");
    const auto& h = rep.h_minus;
    const auto& b = rep.b;
    const auto& bd = rep.b_dagger;
    const double eps = rep.epsilon;
    const Eigen::MatrixXd rhs = detail::diagonal_map(h, [&](double e) { return quadratic_rhs(eps, e); });
    ResidualReport r;
    r.entries.push_back({"HB-BH = -B", detail::interior_residual(h * b - b * h, -b)});
    r.entries.push_back({"HBdag-BdagH = Bdag", detail::interior_residual(h * bd - bd * h, bd)});
    r.entries.push_back(
        {"BBdag-BdagB = 3H^2-4eH+e^2", detail::interior_residual(b * bd - bd * b, rhs)});
    return r;
}

/// B B^dag = Psi(H), B^dag B = Psi(H-1), C = B B^dag - Psi(H) = 0, and the
/// difference identity Psi(H) - Psi(H-1) = 3H^2 - 4 eps H + eps^2.
inline ResidualReport casimir_check(const FockRep& rep) {
    const auto& h = rep.h_minus;
    const double eps = rep.epsilon;
    const Eigen::MatrixXd psi = detail::diagonal_map(h, [&](double e) { return casimir_psi(eps, e); });
    const Eigen::MatrixXd psi_shift =
        detail::diagonal_map(h, [&](double e) { return casimir_psi(eps, e - 1.0); });
    const Eigen::MatrixXd rhs = detail::diagonal_map(h, [&](double e) { return quadratic_rhs(eps, e); });
    const Eigen::MatrixXd bbd = rep.b * rep.b_dagger;
    const Eigen::MatrixXd bdb = rep.b_dagger * rep.b;
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(h.rows(), h.cols());
    const double scale = std::max(1.0, psi.cwiseAbs().maxCoeff());
    ResidualReport r;
    r.entries.push_back({"BBdag = Psi(H)", detail::interior_residual(bbd, psi)});
    r.entries.push_back({"BdagB = Psi(H-1)", detail::interior_residual(bdb, psi_shift)});
    r.entries.push_back({"C = 0", detail::interior_residual(bbd - psi, zero) / scale});
    r.entries.push_back({"Psi(H)-Psi(H-1) = 3H^2-4eH+e^2",
                         detail::interior_residual(psi - psi_shift, rhs)});
    return r;
}

/// [a, a^dag] = 1, [H_+, a] = -a, [H_+, a^dag] = a^dag.
inline ResidualReport oscillator_check(const OscillatorRep& rep) {
    const auto& h = rep.h_plus;
    const auto& a = rep.a;
    const auto& ad = rep.a_dagger;
    const Eigen::MatrixXd one = Eigen::MatrixXd::Identity(h.rows(), h.cols());
    ResidualReport r;
    r.entries.push_back({"aadag-adaga = 1", detail::interior_residual(a * ad - ad * a, one)});
    r.entries.push_back({"Ha-aH = -a", detail::interior_residual(h * a - a * h, -a)});
    r.entries.push_back({"Hadag-adagH = adag", detail::interior_residual(h * ad - ad * h, ad)});
    return r;
}

/// Excited-sector matrix <phi_m| A^dag a A |phi_n>, m, n < dim, by finite
/// differences and trapezoid quadrature on the grid.
inline Eigen::MatrixXd build_b_via_susy(const SeedSolution& s, int dim, const GridSpec& g) {
    detail::require_real_family(s, "build_b_via_susy");
    detail::require_fine_grid(g, "build_b_via_susy");
    if (dim < 1) throw DomainError("build_b_via_susy: dim must be >= 1");
    std::vector<WavefunctionGrid> states;
    states.reserve(dim);
    for (int n = 0; n < dim; ++n) states.push_back(excited_state(s, n, g));
    Eigen::MatrixXd out(dim, dim);
    for (int n = 0; n < dim; ++n) {
        const auto a_psi = apply_a_op(s, states[n], false);
        const auto la = apply_ladder(a_psi, false);
        const auto b_psi = apply_a_op(s, la, true);
        for (int m = 0; m < dim; ++m) out(m, n) = gridops::inner(states[m], b_psi).real();
    }
    return out;
}

} // namespace susyho
