#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pwh/abscissa.hpp"
#include "pwh/params.hpp"
#include "pwh/special.hpp"

namespace pwh {

struct Strip {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo < x && x < hi; }
  bool empty() const { return !(lo < hi); }
};

// Γ(shift + sign·s)
struct AffineGamma {
  Complex shift;
  double sign = 1.0;
};

// prefactor · ∏Γ(num)/∏Γ(den) as a function of s, integrated along Re s = contour_re.
struct BarnesKernel {
  Complex prefactor = 1.0;
  std::vector<AffineGamma> numerators;
  std::vector<AffineGamma> denominators;
  double contour_re = 0.0;
  Strip strip;

  Complex operator()(Complex s) const;
  Complex log_value(Complex s) const;
  // StripViolation unless the contour lies inside the strip and separates
  // the pole series of the numerator factors.
  void validate() const;
};

struct ContourSpec {
  double tol = 1e-13;  // relative to ∫|integrand|
  int level_max = 10;
  double bend = 1.0;   // slope of the wedge contour used for x != 1
};

// (1/2πi) ∫ K(s) x^{-s} ds. For x != 1 the line is bent into a wedge toward
// the side where x^{-s} decays; the wedge leaves the real axis only at the
// contour abscissa and never meets a pole of either series.
Complex barnes_integral(const BarnesKernel& k, double x, const ContourSpec& spec = {});

// Kernel of the Barnes-type integral for F[a,b;c;x], contour inside (0, Re a).
BarnesKernel main_integral_kernel(Complex a, Complex b, Complex c);
Complex barnes_main_integral(Complex a, Complex b, Complex c, double x, const ContourSpec& spec = {});
// Right side: F[a,b;c;x] for x < 1, x^{-a} Γ[c,1-b;c-a,1+a-b] F[a,1+a-c;1+a-b;1/x] for x > 1.
Complex main_integral_closed_form(Complex a, Complex b, Complex c, double x);

// (1/2πi) ∫ Γ[a+s, b-s; c+s, d-s] ds and its closed form.
Complex barnes_delta(Complex a, Complex b, Complex c, Complex d, const ContourSpec& spec = {});
Complex barnes_delta_closed_form(Complex a, Complex b, Complex c, Complex d);

struct MellinFunction {
  std::function<double(const Abscissa&)> eval;
  Strip strip;  // absolute convergence strip of the transform
};

Complex mellin_numeric(const MellinFunction& f, Complex s, const ContourSpec& spec = {});

BarnesKernel kernel_M1(const Params& prm, double p);
BarnesKernel kernel_M2(const Params& prm, double q);
double kernel_K1(const Params& prm, double p, const Abscissa& pt);
double kernel_K2(const Params& prm, double q, const Abscissa& pt);
double kernel_K1(const Params& prm, double p, double x);
double kernel_K2(const Params& prm, double q, double x);
MellinFunction mellin_K1(const Params& prm, double p);
MellinFunction mellin_K2(const Params& prm, double q);

struct StripReport {
  Strip strip_K1;
  Strip strip_K2;
  bool k1_nonempty = false;        // 0 < β+p+1
  bool k2_nonempty = false;        // 0 < β+α+q+1
  bool beta_positive = false;      // 0 < β+1
  bool pq_positive = false;        // 0 < p+q+α+β+1
  bool intersection_nonempty = false;
  bool convolution_applicable = false;

  // Name of the first failing inequality, empty when all hold.
  std::string failure() const;
};

StripReport strip_report(const Params& prm, double p, double q);

struct ConvolutionResult {
  double lhs = 0.0;       // ∫ K1(x) K2(1/x) dx/x
  double rhs = 0.0;       // (1/2πi) ∫ 𝓚1 𝓚2 ds
  double residual = 0.0;
  double contour_re = 0.0;
};

ConvolutionResult convolution_check(const Params& prm, double p, double q, const ContourSpec& spec = {});

// Γ[2p+α+β+2, q+1; β+1, -α-q], the factor turning K1*K2(1) into {Φ_p, Φ_q}-form.
double convolution_prefactor(const Params& prm, double p, double q);

// a(p,q) b(p,q) sin((q-p)π)/((q-p)π): value of X + sin((α+q)π)/sin(qπ) Y.
double orthogonality_rhs(const Params& prm, double p, double q);

}  // namespace pwh
