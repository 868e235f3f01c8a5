#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "susyho/algebra.hpp"

using namespace susyho;

TEST(FockRep, MatrixElements) {
    const auto rep = build_fock_rep(-0.5, 6);
    // B|phi_1> = sqrt((1/2+1/2)(1)(3/2+1/2)) |phi_0> = sqrt(2) |phi_0>
    EXPECT_NEAR(rep.b(1, 2), std::sqrt(2.0), 1e-15);
    const auto rep0 = build_fock_rep(0.0, 6);
    EXPECT_NEAR(rep0.b(1, 2), std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_EQ(rep.h_minus(0, 0), -0.5);
    for (int n = 0; n < 6; ++n) EXPECT_EQ(rep.h_minus(n + 1, n + 1), n + 0.5);
}

TEST(FockRep, EpsilonStateIsIsolated) {
    const auto rep = build_fock_rep(0.2, 10);
    EXPECT_EQ(rep.b.row(0).cwiseAbs().sum(), 0.0);
    EXPECT_EQ(rep.b.col(0).cwiseAbs().sum(), 0.0);
    EXPECT_EQ(rep.b_dagger.row(0).cwiseAbs().sum(), 0.0);
    EXPECT_EQ(rep.b_dagger.col(0).cwiseAbs().sum(), 0.0);
    // B annihilates phi_0
    EXPECT_EQ(rep.b.col(1).cwiseAbs().sum(), 0.0);
}

TEST(FockRep, StructureProperties) {
    for (double eps : {-3.0, -0.5, 0.0, 0.49}) {
        const auto rep = build_fock_rep(eps, 15);
        EXPECT_EQ((rep.b_dagger - rep.b.transpose()).cwiseAbs().maxCoeff(), 0.0);
        for (int i = 0; i < rep.size(); ++i) {
            for (int j = 0; j < rep.size(); ++j) {
                if (i >= 1 && j == i + 1) {
                    EXPECT_GT(rep.b(i, j), 0.0);
                } else {
                    EXPECT_EQ(rep.b(i, j), 0.0);
                }
            }
        }
    }
}

TEST(FockRep, DomainErrors) {
    EXPECT_THROW(build_fock_rep(0.5, 5), EpsilonTooLarge);
    EXPECT_THROW(build_fock_rep(0.0, 1), DomainError);
}

TEST(Commutators, InteriorResiduals) {
    for (double eps : {-2.0, -0.5, 0.3}) {
        const auto r = commutator_check(build_fock_rep(eps, 20));
        ASSERT_EQ(r.entries.size(), 3u);
        EXPECT_LE(r.entries[0].residual, 1e-14);
        EXPECT_LE(r.entries[1].residual, 1e-14);
        EXPECT_LE(r.max(), 1e-12) << eps;
    }
}

TEST(Commutators, GroundLevelAtZeroEpsilon) {
    const auto rep = build_fock_rep(0.0, 6);
    const Eigen::MatrixXd c = rep.b * rep.b_dagger - rep.b_dagger * rep.b;
    EXPECT_NEAR(c(1, 1), 0.75, 1e-15);
    EXPECT_NEAR(quadratic_rhs(0.0, 0.5), 0.75, 1e-15);
}

TEST(Commutators, TruncationArtifactOnlyInLastLevel) {
    const auto rep = build_fock_rep(-0.5, 8);
    const Eigen::MatrixXd c = rep.b * rep.b_dagger - rep.b_dagger * rep.b;
    const int last = rep.size() - 1;
    EXPECT_GT(std::abs(c(last, last) - quadratic_rhs(-0.5, rep.h_minus(last, last))), 1.0);
}

TEST(Casimir, Identities) {
    const auto rep = build_fock_rep(0.0, 6);
    const Eigen::MatrixXd bbd = rep.b * rep.b_dagger;
    const Eigen::MatrixXd bdb = rep.b_dagger * rep.b;
    EXPECT_NEAR(casimir_psi(0.0, 0.5), 0.75, 1e-15);
    EXPECT_NEAR(bbd(1, 1), 0.75, 1e-15);
    EXPECT_EQ(casimir_psi(0.0, 0.5 - 1.0), 0.0);
    EXPECT_EQ(bdb(1, 1), 0.0);
    for (double eps : {-2.0, -0.5, 0.3}) {
        EXPECT_LE(casimir_check(build_fock_rep(eps, 20)).max(), 1e-12) << eps;
    }
}

TEST(Casimir, DifferenceIdentityRandomPoints) {
    // Psi(E) - Psi(E-1) against the expanded quadratic, with long-double arithmetic
    auto gen = oracle::rng(21);
    std::uniform_real_distribution<double> ed(-50.0, 50.0), epd(-10.0, 0.5);
    for (int i = 0; i < 50; ++i) {
        const long double e = ed(gen), eps = epd(gen);
        const auto psi = [&](long double x) { return (x - eps) * (x + 0.5L) * (x + 1.0L - eps); };
        const long double lhs = psi(e) - psi(e - 1);
        const double got = casimir_psi(static_cast<double>(eps), static_cast<double>(e)) -
                           casimir_psi(static_cast<double>(eps), static_cast<double>(e - 1));
        EXPECT_NEAR(static_cast<double>(lhs), quadratic_rhs(static_cast<double>(eps), static_cast<double>(e)),
                    1e-9 * std::max(1.0L, std::abs(lhs)));
        EXPECT_NEAR(got, static_cast<double>(lhs), 1e-9 * std::max(1.0L, std::abs(lhs)));
    }
}

TEST(Oscillator, LinearAlgebraBaseline) {
    const auto r = oscillator_check(build_oscillator_rep(20));
    EXPECT_LE(r.max(), 1e-13);
}

TEST(BViaSusy, MatchesFockElements) {
    const GridSpec g{};
    const auto rep = build_fock_rep(-0.5, 7);
    const auto b = build_b_via_susy(SeedSolution(-0.5, 0.0), 6, g);
    for (int m = 0; m < 6; ++m) {
        for (int n = 0; n < 6; ++n) {
            EXPECT_NEAR(b(m, n), rep.b(m + 1, n + 1), 1e-4) << m << "," << n;
        }
    }
}

TEST(BViaSusy, BetaIndependence) {
    const GridSpec g{};
    const double eps = -0.5;
    const auto rep = build_fock_rep(eps, 7);
    std::vector<Eigen::MatrixXd> mats;
    for (double beta : {0.0, 0.3, -0.7}) mats.push_back(build_b_via_susy(SeedSolution(eps, beta), 6, g));
    for (const auto& b : mats) {
        EXPECT_LE((b - rep.b.block(1, 1, 6, 6)).cwiseAbs().maxCoeff(), 1e-4);
        EXPECT_LE((b - mats[0]).cwiseAbs().maxCoeff(), 1e-4);
    }
}

TEST(BViaSusy, RejectsComplexFamily) {
    EXPECT_THROW(build_b_via_susy(SeedSolution(0.0, {0.1, 0.2}), 3, GridSpec{}), DomainError);
}
