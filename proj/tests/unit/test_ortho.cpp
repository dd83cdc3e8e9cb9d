#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mpfr_oracle.hpp"
#include "oracle_values.hpp"
#include "pwh/errors.hpp"
#include "pwh/ortho.hpp"
#include "pwh/params.hpp"

using namespace pwh;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fmax(std::fabs(b), 1e-300); }

}  // namespace

TEST(Params, DomainIsChecked) {
  EXPECT_NO_THROW(Params::make(0.3, 0.5, 0.25));
  EXPECT_NO_THROW(Params::make(-0.4, 0.7, 0.0));
  EXPECT_THROW(Params::make(1.0, 0.5, 0.25), DomainError);
  EXPECT_THROW(Params::make(0.0, 0.5, 0.25), DomainError);
  EXPECT_THROW(Params::make(0.3, -1.0, 0.25), DomainError);
  EXPECT_THROW(Params::make(0.3, 0.5, 1.0), DomainError);
  EXPECT_THROW(Params::make(0.3, 0.5, -0.1), DomainError);
  // sin((α+θ)π) = 0
  EXPECT_THROW(Params::make(0.4, 0.5, 0.6), DomainError);
  EXPECT_THROW(Params::make(std::nan(""), 0.5, 0.2), DomainError);
}

TEST(Params, NMin) {
  // 2p + α + β + 1 > 0 admits p = θ - 1 = -0.75 here
  Params q = Params::make(0.3, 0.5, 0.25);
  EXPECT_EQ(n_min(q), -1);
  EXPECT_NO_THROW(SpectralIndex::make(q, -1));
  EXPECT_THROW(SpectralIndex::make(q, -2), DomainError);
  EXPECT_EQ(n_min(Params::make(-0.4, 0.7, 0.6)), -1);
  EXPECT_EQ(n_min(Params::make(0.3, 0.5, 0.0)), 0);
}

TEST(Jacobi, OracleValues) {
  for (const auto& c : oracle::kJacobi) {
    double tol = 1e-12 * std::fmax(1.0, std::fabs(c.value));
    EXPECT_NEAR(jacobi_eval(c.n, c.alpha, c.beta, c.y), c.value, tol) << "n = " << c.n;
  }
  for (const auto& c : oracle::kJacobiNorm)
    EXPECT_LT(rel(jacobi_norm_sq(c.n, c.alpha, c.beta), c.value), 1e-12) << "n = " << c.n;
}

TEST(Jacobi, ThreeFormulasAgree) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ab(-0.9, 2.0), yy(-0.95, 0.95);
  for (int t = 0; t < 200; ++t) {
    int n = static_cast<int>(rng() % 11);
    double a = ab(rng), b = ab(rng), y = yy(rng);
    double ref = oracle::mpfr::jacobi(n, a, b, y);
    double scale = std::fmax(1.0, std::fabs(ref));
    for (int f = 1; f <= 3; ++f)
      EXPECT_NEAR(jacobi_eval(n, a, b, y, f), ref, 1e-11 * scale) << "n=" << n << " a=" << a << " b=" << b
                                                                  << " y=" << y << " formula " << f;
  }
}

TEST(Jacobi, Errors) {
  EXPECT_THROW(jacobi_eval(-1, 0.3, 0.5, 0.0), DomainError);
  EXPECT_THROW(jacobi_eval(2, 0.3, 0.5, 1.5), DomainError);
  EXPECT_THROW(jacobi_eval(2, 0.3, 0.5, 1.0, 3), DomainError);
  EXPECT_THROW(jacobi_eval(2, 0.3, 0.5, 0.0, 4), DomainError);
}

TEST(Phi, OracleValues) {
  for (const auto& c : oracle::kPhi) {
    Params prm = Params::make(c.alpha, c.beta, c.theta);
    double v = phi_p(prm, SpectralIndex::make(prm, c.n), c.x);
    if (c.value == 0.0) {
      EXPECT_EQ(v, 0.0);
      continue;
    }
    EXPECT_LT(rel(v, c.value), 1e-10) << "(" << c.alpha << "," << c.beta << "," << c.theta << ") n=" << c.n
                                      << " x=" << c.x;
  }
}

TEST(Phi, AbscissaFormsAgree) {
  Params prm = Params::make(-0.4, 0.7, 0.6);
  PhiFunction f(prm, SpectralIndex::make(prm, 3));
  for (double d : {-0.3, -1e-3, -1e-7, 1e-7, 1e-3, 0.3, 5.0}) {
    double a = f(Abscissa::from_offset(d));
    double b = f(1.0 + d);
    EXPECT_LT(rel(a, b), 1e-9) << "d = " << d;
  }
  // far right through x = 1/t
  double t = 1e-6;
  EXPECT_LT(rel(f(Abscissa::from_inverse(t)), f(1.0 / t)), 1e-12);
}

TEST(Phi, DecayAtInfinity) {
  Params prm = Params::make(0.3, 0.5, 0.25);
  PhiFunction f(prm, SpectralIndex::make(prm, 2));
  double p = f.p();
  for (double x : {1e4, 1e8}) {
    double scaled = f(x) * std::pow(x, prm.alpha + prm.beta + p + 1.0);
    EXPECT_LT(rel(scaled, f.infinity_coefficient()), 1e-3) << "x = " << x;
  }
}

TEST(Phi, ThetaZeroIsJacobi) {
  Params prm = Params::make(0.3, 0.5, 0.0);
  for (int n = 0; n <= 6; ++n) {
    PhiFunction f(prm, SpectralIndex::make(prm, n));
    double c = theta_zero_constant(n, prm.alpha, prm.beta);
    for (int k = 1; k <= 20; ++k) {
      double x = k / 21.0;
      double ref = c * jacobi_eval(n, prm.alpha, prm.beta, 2.0 * x - 1.0);
      EXPECT_NEAR(f(x), ref, 1e-10 * std::fmax(std::fabs(ref), std::fabs(c))) << "n=" << n << " x=" << x;
    }
    for (double x : {1.001, 1.5, 3.0, 100.0}) EXPECT_EQ(f(x), 0.0) << "n=" << n << " x=" << x;
  }
}

TEST(Phi, NormClosedFormMatchesQuadratureOracle) {
  for (const auto& c : oracle::kPairing) {
    if (c.m != c.n) continue;
    Params prm = Params::make(c.alpha, c.beta, c.theta);
    EXPECT_LT(rel(phi_norm_sq(prm, prm.theta + c.m), c.value), 1e-10) << "n = " << c.n;
  }
}

TEST(Phi, JacobiNormAtThetaZero) {
  // x = (1+y)/2 turns the Jacobi weight into 2^{α+β+1} (1-x)^α x^β
  double a = 0.3, b = 0.5;
  Params prm = Params::make(a, b, 0.0);
  for (int n = 0; n <= 6; ++n) {
    double c = theta_zero_constant(n, a, b);
    double expect = c * c * jacobi_norm_sq(n, a, b) * std::exp2(-a - b - 1.0);
    EXPECT_LT(rel(phi_norm_sq(prm, n), expect), 1e-12) << "n = " << n;
  }
}

TEST(Psi, OracleValues) {
  for (const auto& c : oracle::kPsi) {
    Params prm = Params::make(c.alpha, c.beta, c.theta);
    double v = psi_s(prm, c.s, c.x);
    EXPECT_LT(rel(v, c.value), 1e-9) << "(" << c.alpha << "," << c.beta << "," << c.theta << ") s=" << c.s
                                     << " x=" << c.x;
  }
}

TEST(Psi, RealAndEvenInS) {
  Params prm = Params::make(0.5, -0.3, 0.1);
  for (double x : {0.2, 0.9, 1.1, 4.0}) EXPECT_LT(rel(psi_s(prm, -2.5, x), psi_s(prm, 2.5, x)), 1e-12);
}

TEST(Psi, SmallSIsAPole) {
  Params prm = Params::make(0.3, 0.5, 0.25);
  EXPECT_THROW(PsiFunction(prm, 0.0), PoleError);
  EXPECT_THROW(PsiFunction(prm, 0.5 * kSFloor), PoleError);
  EXPECT_NO_THROW(PsiFunction(prm, 2.0 * kSFloor));
}

TEST(Xi, Definition) {
  EXPECT_DOUBLE_EQ(xi_mu(0.6, 0.25), std::pow(0.75, 0.6));
  EXPECT_EQ(xi_mu(0.6, 1.5), 0.0);
  EXPECT_EQ(xi_mu(-0.3, Abscissa::from_offset(2.0)), 0.0);
  // near x = 1 the offset carries the precision
  EXPECT_DOUBLE_EQ(xi_mu(0.5, Abscissa::from_offset(-1e-12)), std::sqrt(1e-12));
}
