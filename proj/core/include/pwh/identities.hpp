#pragma once

#include "pwh/params.hpp"
#include "pwh/spectral.hpp"

namespace pwh {

struct BetaIdentityParams {
  Params params;
  double mu = 0.0;
  double nu = 0.0;

  // Throws DomainError unless μ, ν > -1/2.
  void validate() const;
};

struct BetaOptions {
  int N = 20;
  double s_max = 40.0;
  double h = 0.05;
  double tol = 1e-9;  // admissible uncertainty of the tail corrections
};

struct BetaLhs {
  double discrete = 0.0;         // Σ_{n_min <= n <= N}
  double continuous = 0.0;       // trapezoid on (0, s_max]
  double discrete_tail = 0.0;    // n > N
  double continuous_tail = 0.0;  // s > s_max
  double tail_uncertainty = 0.0;
  double truncated() const { return discrete + continuous; }
  double value() const { return discrete + continuous + discrete_tail + continuous_tail; }
};

// Both blocks come from the spectral transforms of ξ_μ, ξ_ν through v_product,
// divided by Γ(μ+1)Γ(ν+1)Γ(α+μ+1)Γ(α+ν+1). NoConvergence when the tails
// cannot be bounded by opt.tol.
BetaLhs beta_lhs(const BetaIdentityParams& bp, const BetaOptions& opt = {});
double beta_rhs(const BetaIdentityParams& bp);

// Summands in the printed form: the discrete term at p and the continuous integrand at s.
double beta_discrete_term(const BetaIdentityParams& bp, double p);
double beta_continuous_integrand(const BetaIdentityParams& bp, double s);

struct IdentityCheck {
  double numeric = 0.0;
  double closed = 0.0;
  double residual = 0.0;
  double tail_bound = 0.0;
};

// (1/2π) ∫_0^∞ |Γ(a1+is)Γ(a2+is)Γ(a3+is) / (Γ(2is)Γ(b+is))|² ds
// against Γ(b-a1-a2-a3) ∏Γ(a_k+a_l) / ∏Γ(b-a_k).
IdentityCheck dbw_integral_check(double a1, double a2, double a3, double b, double tol = 1e-12);
double dbw_closed_form(double a1, double a2, double a3, double b);

// Σ_n (α+n) / ∏_j Γ(a_j+α+n)Γ(a_j-α-n) over |n| <= N with a1 = α, against
// sin(2πα)/(2π) Γ(Σa - 3) / ∏_{j<k} Γ(a_j+a_k-1).
IdentityCheck dougall_check(double alpha_d, double a2, double a3, double a4, int N);
// Same sum for four free parameters.
IdentityCheck dougall_general(double alpha_d, const double (&a)[4], int N);

// θ = 0: the discrete block of the beta identity as a Dougall sum,
// α_d = (α+β+1)/2, a = ((1-α-β)/2, (1+α-β)/2, μ+(α+β+3)/2, ν+(α+β+3)/2);
// the sum equals sin(π(α+β)) sin(πβ)/(2π²) times beta_rhs.
IdentityCheck dougall_from_beta(const BetaIdentityParams& bp, int N);

// μ = θ-1: the beta identity reduces to sin(θπ)sin((θ+α)π)/π² times the
// De Branges-Wilson value with a = (h, h', 1-h-θ), b = ν+h+1.
IdentityCheck dbw_from_beta(const Params& prm, double nu, double tol = 1e-12);

}  // namespace pwh
