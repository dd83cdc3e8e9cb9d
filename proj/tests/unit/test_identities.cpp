#include <gtest/gtest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "pwh/errors.hpp"
#include "pwh/identities.hpp"

using namespace pwh;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST(Beta, RhsOracle) {
  for (const auto& c : oracle::kBetaRhs) {
    BetaIdentityParams bp{Params::make(c.alpha, c.beta, 0.25), c.mu, c.nu};
    EXPECT_LT(rel(beta_rhs(bp), c.value), 1e-13) << c.mu << " " << c.nu;
    BetaIdentityParams sw{bp.params, c.nu, c.mu};
    EXPECT_DOUBLE_EQ(beta_rhs(sw), beta_rhs(bp));
  }
}

TEST(Beta, SamplePoint) {
  BetaIdentityParams bp{Params::make(0.3, 0.4, 0.25), 0.1, 0.2};
  double r = beta_rhs(bp);
  EXPECT_GT(r, 0.0);
  EXPECT_LT(std::fabs(beta_lhs(bp).value() - r), 1e-5 * r);
}

TEST(Beta, Grid) {
  for (auto [a, b, t] : {std::tuple{0.3, 0.5, 0.25}, std::tuple{-0.4, 0.7, 0.6}}) {
    for (double mu : {-0.2, 0.3, 1.0}) {
      for (double nu : {-0.2, 0.3, 1.0}) {
        BetaIdentityParams bp{Params::make(a, b, t), mu, nu};
        double r = beta_rhs(bp);
        EXPECT_LT(std::fabs(beta_lhs(bp).value() - r), 1e-5 * r) << a << " " << b << " " << t << " " << mu << " " << nu;
      }
    }
  }
}

TEST(Beta, Validate) {
  EXPECT_THROW((BetaIdentityParams{Params::make(0.3, 0.5, 0.25), -0.5, 0.1}.validate()), DomainError);
  EXPECT_THROW(beta_lhs(BetaIdentityParams{Params::make(0.3, 0.5, 0.25), 0.1, -0.7}), DomainError);
}

TEST(Beta, SameCodePathAsParseval) {
  Params prm = Params::make(0.3, 0.5, 0.25);
  BetaIdentityParams bp{prm, 0.6, 0.1};
  BetaOptions opt;
  SpectralGrid grid = alias_safe(prm, SpectralGrid{opt.h, opt.s_max});
  VProduct v = v_product(xi_transform(prm, 0.6, opt.N, grid), xi_transform(prm, 0.1, opt.N, grid));
  double g = std::tgamma(1.6) * std::tgamma(1.1) * std::tgamma(prm.alpha + 1.6) * std::tgamma(prm.alpha + 1.1);
  BetaLhs l = beta_lhs(bp, opt);
  EXPECT_LT(rel(l.discrete * g, v.discrete), 1e-14);
  EXPECT_LT(rel(l.continuous * g, v.continuous), 1e-14);
}

TEST(Beta, ThetaMinusOneKillsDiscreteSum) {
  Params prm = Params::make(0.2, -0.6, 0.6);
  BetaIdentityParams bp{prm, prm.theta - 1.0, 0.3};
  for (int n = n_min(prm); n <= 30; ++n) EXPECT_EQ(beta_discrete_term(bp, prm.theta + n), 0.0) << "n = " << n;
  BetaLhs l = beta_lhs(bp);
  EXPECT_EQ(l.discrete, 0.0);
  EXPECT_LT(std::fabs(l.value() - beta_rhs(bp)), 1e-5 * beta_rhs(bp));
}

TEST(Beta, ThetaToZeroKillsIntegral) {
  double prev_cont = INFINITY, prev_gap = INFINITY;
  for (double t : {1e-2, 1e-3, 1e-4}) {
    BetaIdentityParams bp{Params::make(0.3, 0.5, t), 0.1, 0.2};
    BetaLhs l = beta_lhs(bp);
    double gap = std::fabs(l.discrete + l.discrete_tail - beta_rhs(bp));
    EXPECT_LT(std::fabs(l.continuous), prev_cont) << "theta = " << t;
    EXPECT_LT(gap, prev_gap) << "theta = " << t;
    // the integral block is O(θ)
    EXPECT_LT(std::fabs(l.continuous), 0.5 * t);
    prev_cont = std::fabs(l.continuous);
    prev_gap = gap;
  }
  Params zero = Params::make(0.3, 0.5, 0.0);
  EXPECT_EQ(beta_continuous_integrand(BetaIdentityParams{zero, 0.1, 0.2}, 1.0), 0.0);
}

TEST(Dbw, SamplePointAndOracle) {
  IdentityCheck c = dbw_integral_check(0.3, 0.4, 0.5, 2.0);
  EXPECT_LT(c.residual, 1e-6);
  for (const auto& o : oracle::kDbw) {
    EXPECT_LT(rel(dbw_closed_form(o.a1, o.a2, o.a3, o.b), o.integral), 1e-12);
    EXPECT_LT(rel(dbw_integral_check(o.a1, o.a2, o.a3, o.b).numeric, o.integral), 1e-9);
  }
}

TEST(Dbw, PermutationSymmetry) {
  double v = dbw_closed_form(0.3, 0.4, 0.5, 2.0);
  EXPECT_DOUBLE_EQ(dbw_closed_form(0.5, 0.3, 0.4, 2.0), v);
  EXPECT_DOUBLE_EQ(dbw_closed_form(0.4, 0.5, 0.3, 2.0), v);
  EXPECT_LT(rel(dbw_integral_check(0.5, 0.3, 0.4, 2.0).numeric, v), 1e-9);
}

TEST(Dbw, Convergence) { EXPECT_THROW(dbw_integral_check(0.3, 0.4, 0.5, 1.1), NoConvergence); }

TEST(Dbw, FromBeta) {
  // μ = θ - 1 at a point where 1-h-θ > 0
  Params prm = Params::make(0.2, -0.6, 0.6);
  IdentityCheck c = dbw_from_beta(prm, 0.3);
  EXPECT_LT(c.residual, 1e-6 * std::fabs(c.closed));
}

TEST(Dougall, SamplePointAndOracle) {
  IdentityCheck c = dougall_check(0.2, 1.3, 1.4, 1.5, 200);
  EXPECT_LT(c.residual, 1e-8);
  // the second case decays like n^{-1.1}; N = 200 leaves a 6e-9 tail
  for (const auto& o : oracle::kDougall) {
    IdentityCheck d = dougall_check(o.alpha, o.a2, o.a3, o.a4, 20000);
    EXPECT_LT(rel(d.closed, o.sum), 1e-13);
    EXPECT_LT(rel(d.numeric, o.sum), 1e-10);
    EXPECT_LE(d.residual, 2.0 * d.tail_bound + 1e-15);
  }
}

TEST(Dougall, VanishesAtZero) {
  IdentityCheck c = dougall_check(1e-9, 1.3, 1.4, 1.5, 200);
  EXPECT_LT(std::fabs(c.closed), 1e-8);
  EXPECT_LT(std::fabs(c.numeric), 1e-8);
}

TEST(Dougall, Convergence) { EXPECT_THROW(dougall_check(0.2, 0.9, 0.9, 0.9, 200), NoConvergence); }

TEST(Dougall, FromBetaAtThetaZero) {
  for (auto [a, b] : {std::pair{0.3, 0.5}, std::pair{-0.4, 0.7}}) {
    BetaIdentityParams bp{Params::make(a, b, 0.0), 0.1, 0.2};
    IdentityCheck c = dougall_from_beta(bp, 20000);
    EXPECT_LT(c.residual, 1e-8 * std::fabs(c.closed)) << a << " " << b;
  }
}
