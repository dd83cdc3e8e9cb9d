#pragma once

#include "pwh/abscissa.hpp"
#include "pwh/params.hpp"
#include "pwh/special.hpp"

namespace pwh {

// f = A u(x) + B |1-x|^{-α} v(x) near x = 1, u and v analytic with u(1) = v(1) = 1.
struct LocalExpansion {
  double A_left = 0.0;
  double B_left = 0.0;
  double A_right = 0.0;
  double B_right = 0.0;
};

double jacobi_eval(int n, double alpha, double beta, double y, int formula = 1);
double jacobi_norm_sq(int n, double alpha, double beta);

// {Φ_p, Φ_p} in closed form.
double phi_norm_sq(const Params& prm, double p);

// Φ_n = c_n P_n^{α,β}(2x-1) on (0,1) when θ = 0.
double theta_zero_constant(int n, double alpha, double beta);

class PhiFunction {
 public:
  PhiFunction(const Params& prm, const SpectralIndex& idx);

  double operator()(const Abscissa& pt) const;
  double operator()(double x) const;

  const LocalExpansion& local() const { return local_; }
  double p() const { return p_; }
  const Params& params() const { return prm_; }

  // Φ_p(x) x^{α+β+p+1} → Γ(1+p+α)/Γ(-p)
  double infinity_coefficient() const { return right_scale_; }

 private:
  double left_direct(double x) const;
  double right_direct(const Abscissa& pt) const;
  double near_one(const Abscissa& pt) const;

  Params prm_;
  double p_;
  double left_scale_;   // Γ(2p+α+β+2)/Γ(β+1)
  double right_scale_;  // Γ(1+p+α)/Γ(-p)
  LocalExpansion local_;
};

double phi_p(const Params& prm, const SpectralIndex& idx, double x);
LocalExpansion phi_p_local(const Params& prm, const SpectralIndex& idx);

inline constexpr double kSFloor = 1e-6;

class PsiFunction {
 public:
  // PoleError for |s| < kSFloor.
  PsiFunction(const Params& prm, double s);

  double operator()(const Abscissa& pt) const;
  double operator()(double x) const;

  // Λ(s,x) for x > 1
  Complex lambda(const Abscissa& pt) const;

  const LocalExpansion& local() const { return local_; }
  double s() const { return s_; }

  // Ψ_s = 2 Re{C Λ(s,x)} on x > 1
  Complex right_coefficient() const { return std::exp(log_c_); }

 private:
  double left_series(double x) const;
  double near_one(const Abscissa& pt) const;

  Params prm_;
  double s_;
  Complex log_c_;
  LocalExpansion local_;
};

double psi_s(const Params& prm, double s, double x);
LocalExpansion psi_s_local(const Params& prm, double s);
Complex lambda_basis(const Params& prm, double s, double x);

double xi_mu(double mu, double x);
double xi_mu(double mu, const Abscissa& pt);

}  // namespace pwh
