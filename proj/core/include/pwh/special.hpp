#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace pwh {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kPoleTolerance = 1e-9;

// Throws DomainError on a NaN or infinite component.
Complex checked(Complex z);

double sinpi(double x);
double cospi(double x);
Complex sinpi(Complex z);
Complex cospi(Complex z);

// log sin(πz) on some branch; only exp() of it is meaningful.
Complex log_sinpi(Complex z);

// If z is within kPoleTolerance of a non-positive integer, stores -z rounded
// in *m and returns true.
bool at_gamma_pole(Complex z, int* m = nullptr);

// Principal branch of log Γ(z).
Complex log_gamma(Complex z);
Complex gamma(Complex z);

// log Γ(z+a) - log Γ(z+b), stable for large |z| away from the negative axis.
// The branch is unspecified; exp() of the result is exact.
Complex log_gamma_ratio(Complex z, Complex a, Complex b);
Complex rgamma(Complex z);

// Real Γ through the log path, with sign bookkeeping.
double gamma_real(double x);
double rgamma_real(double x);

// Γ[num...; den...] = ∏Γ(num)/∏Γ(den).
struct GammaBracket {
  std::vector<Complex> numerators;
  std::vector<Complex> denominators;
};

Complex gamma_bracket(const GammaBracket& gb);
Complex gamma_bracket(std::initializer_list<Complex> num, std::initializer_list<Complex> den);
double gamma_bracket_real(std::initializer_list<double> num, std::initializer_list<double> den);

// sin((α+θ)π)/sin(θπ)
double sin_ratio(double alpha, double theta);

Complex pochhammer(Complex a, int k);

double beta_fn(double a, double b);

}  // namespace pwh
