#pragma once

#include <string>

namespace pwh {

// (α, β, θ) with the validity domain checked at construction.
struct Params {
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;

  // Throws DomainError naming the violated inequality.
  static Params make(double alpha, double beta, double theta);

  // Empty when valid, otherwise the first violated condition.
  static std::string violation(double alpha, double beta, double theta);

  // (α+β+1)/2 and (β-α+1)/2
  double h() const { return 0.5 * (alpha + beta + 1.0); }
  double h_prime() const { return 0.5 * (beta - alpha + 1.0); }

  bool theta_zero() const { return theta == 0.0; }

  // sin((α+θ)π)/sin(θπ); DomainError at θ = 0.
  double sin_ratio() const;

  // Hermitian product positive definite.
  bool positive() const;

  // β a non-negative integer: some right-branch brackets degenerate.
  bool beta_degenerate() const;
};

// p = θ + n
struct SpectralIndex {
  int n = 0;
  double p = 0.0;

  static SpectralIndex make(const Params& prm, int n);
};

// Least n with 2(θ+n)+α+β+1 > 0 and 1+θ+n+α ≠ 0.
int n_min(const Params& prm);

}  // namespace pwh
