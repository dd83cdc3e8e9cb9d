#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mpfr_oracle.hpp"
#include "oracle_values.hpp"
#include "pwh/errors.hpp"
#include "pwh/hyp2f1.hpp"

using namespace pwh;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::fmax(std::abs(b), 1e-300); }

}  // namespace

TEST(Series, Basics) {
  EXPECT_EQ(f21_series({0.3, 1.7, 2.2}, 0.0), Complex(1.0));
  for (double x : {-0.5, 0.2, 0.9}) {
    Complex v = f21_series({-2.0, 3.0, 1.0}, x);
    EXPECT_NEAR(v.real(), 1.0 - 6.0 * x + 6.0 * x * x, 1e-14);
  }
  EXPECT_NEAR(gauss_sum({1.0, 1.0, 3.0}).real(), 2.0, 1e-14);
}

TEST(Series, UncancelledPoleInC) {
  EXPECT_THROW(f21_series({0.5, 0.5, -2.0}, 0.3), PoleError);
  // terminates before the pole: a = -1, c = -3
  EXPECT_NO_THROW(f21_series({-1.0, 0.5, -3.0}, 0.3));
}

TEST(Euler, Identity) {
  EXPECT_NEAR(euler_transform({0.4, 1.1, 2.3}, 0.0).real(), 1.0, 1e-15);
  Complex lhs = euler_transform({1.0, 1.0, 3.0}, 0.5);
  Complex rhs = f21_series({1.0, 1.0, 3.0}, 0.5);
  EXPECT_LT(rel(lhs, rhs), 1e-12);
  // (1-x)^{1}·F[2,2;3;0.5]
  EXPECT_LT(rel(0.5 * f21_series({2.0, 2.0, 3.0}, 0.5), rhs), 1e-12);
}

TEST(Euler, Involution) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 2.5), ux(-0.9, 0.9);
  for (int i = 0; i < 50; ++i) {
    HypParams hp{u(rng), u(rng), u(rng) + 3.0};
    double x = ux(rng);
    HypParams t{hp.c - hp.a, hp.c - hp.b, hp.c};
    // E(F[c-a,c-b;c]) = (1-x)^{c-a-b}(1-x)^{a+b-c} F[a,b;c] = F[a,b;c]
    Complex twice = std::pow(1.0 - x, hp.c - hp.a - hp.b) * euler_transform(t, x);
    EXPECT_LT(rel(twice, f21_series(hp, x)), 1e-12);
  }
}

TEST(ConnectAt1, AgreesWithSeries) {
  HypParams hp{0.5, 0.7, 1.4};
  EXPECT_LT(rel(connect_at_1(hp, 0.75), f21_series(hp, 0.75)), 1e-11);
  EXPECT_LT(rel(connect_at_1(hp, 0.3), f21_series(hp, 0.3)), 1e-11);
  EXPECT_LT(rel(connect_at_1(hp, 0.0), f21_series(hp, 0.0)), 1e-11);
}

TEST(ConnectAt1, TerminatingPolynomial) {
  Complex v = connect_at_1({-2.0, 3.0, 1.0}, 0.9);
  EXPECT_NEAR(v.real(), 1.0 - 5.4 + 4.86, 1e-13);
}

TEST(ConnectAt1, LogarithmicCase) {
  EXPECT_THROW(connect_at_1({0.5, 0.5, 1.0}, Complex(0.9, 0.1)), LogarithmicCase);
}

TEST(Connect1OverX, Values) {
  HypParams hp{1.0, 1.0, 3.0};
  EXPECT_LT(rel(connect_1_over_x(hp, 2.0), f21_series(hp, 0.5)), 1e-12);
  EXPECT_NEAR(connect_1_over_x({0.3, 0.8, 1.7}, 1e12).real(), 1.0, 1e-12);
  // close to 1 the two-term expansion in (1 - x) is used
  HypParams h2{0.45, 0.8, 1.6};
  double x = 1.01;
  EXPECT_LT(rel(connect_1_over_x(h2, x), oracle::mpfr::hyp2f1(0.45, 0.8, 1.6, 1.0 / x)), 1e-12);
}

TEST(Dispatcher, OracleValues) {
  for (const auto& c : oracle::kHyp2f1) {
    Complex v = f21_eval({c.a, c.b, c.c}, c.x);
    EXPECT_LT(rel(v, c.value), 1e-11) << c.a << " " << c.b << " " << c.c << " x=" << c.x;
  }
}

TEST(Dispatcher, NearOneFinite) {
  Complex v = f21_eval({0.5, 0.7, 1.4}, 0.99);
  EXPECT_TRUE(std::isfinite(v.real()));
  EXPECT_LT(rel(v, oracle::mpfr::hyp2f1(0.5, 0.7, 1.4, 0.99)), 1e-12);
}

// branches agree on the overlap band for random parameters
TEST(Dispatcher, RegionConsistency) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int done = 0;
  while (done < 200) {
    double a = 2.0 * u(rng), b = 2.0 * u(rng), c = 1.5 + u(rng);
    double e = c - a - b;
    if (std::fabs(e - std::nearbyint(e)) < 0.05) continue;
    ++done;
    for (double x : {0.65, 0.68, 0.7, 0.72, 0.75}) {
      Complex s = f21_series({a, b, c}, x);
      Complex k = connect_at_1({a, b, c}, x);
      double want = oracle::mpfr::hyp2f1(a, b, c, x);
      double scale = std::fmax(std::fabs(want), 1.0);
      EXPECT_LT(std::abs(s - k) / scale, 1e-10) << a << " " << b << " " << c << " x=" << x;
      EXPECT_LT(std::abs(f21_eval({a, b, c}, x) - want) / scale, 1e-10);
    }
  }
}

// Reference is the same polynomial summed at 256 bits. The tolerance scale is
// Σ|c_k x^k|: beyond x = 1 the alternating coefficients cancel, and no double
// evaluation of P(x) can beat the rounding of its largest term.
TEST(Dispatcher, TerminatingExactness) {
  const double b = 1.3, c = 2.1;
  for (int n = 0; n <= 20; ++n) {
    for (double x = 0.0; x <= 5.0; x += 0.25) {
      double want = oracle::mpfr::hyp2f1(-static_cast<double>(n), b, c, x);
      double mag = 0.0, t = 1.0;
      for (int k = 0; k <= n; ++k) {
        mag += std::fabs(t);
        t *= (k - n) * (b + k) / ((c + k) * (k + 1.0)) * x;
      }
      double got = f21_eval({-static_cast<double>(n), b, c}, x).real();
      EXPECT_LE(std::fabs(got - want), 1e-13 * std::fmax(1.0, mag)) << "n=" << n << " x=" << x;
    }
  }
}

TEST(Dispatcher, Contiguity) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int i = 0; i < 100; ++i) {
    double a = 1.5 * u(rng), b = 1.5 * u(rng), c = 2.0 + u(rng), x = u(rng);
    Complex v = c * f21_eval({a, b, c}, x) - c * f21_eval({a + 1.0, b, c}, x) + b * x * f21_eval({a + 1.0, b + 1.0, c + 1.0}, x);
    EXPECT_LT(std::abs(v), 1e-10);
  }
}

TEST(Dispatcher, AboveOneRequiresNonIntegerDifference) {
  EXPECT_THROW(f21_eval({0.5, 1.5, 2.2}, 3.0), LogarithmicCase);
}
