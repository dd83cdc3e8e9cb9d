#pragma once

#include <functional>
#include <vector>

#include "pwh/abscissa.hpp"
#include "pwh/ortho.hpp"
#include "pwh/params.hpp"
#include "pwh/quadrature.hpp"
#include "pwh/special.hpp"

namespace pwh {

struct OperatorSample {
  double x = 0.0;
  double f = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double h = 0.0;
};

using RealFunction = std::function<double(const Abscissa&)>;

// Five-point central differences with h = 0.004 min(x, |x-1|), so the stencil
// stays inside the piece containing x.
OperatorSample sample_derivatives(const RealFunction& f, double x);

// x(1-x) f'' + (β+1-(α+β+2)x) f'
double apply_D(const Params& prm, const RealFunction& f, double x);
double apply_D(const Params& prm, const OperatorSample& smp);

// λ = -p(p+α+β+1)
double lambda_of_p(const Params& prm, double p);
Complex lambda_of_p(const Params& prm, Complex p);
// Root with Re p > -(α+β+1)/2, or p = -(α+β+1)/2 + is with s >= 0 when λ >= (α+β+1)²/4.
Complex p_of_lambda(const Params& prm, double lambda);
// (α+β+1)²/4, the bottom of the continuous spectrum
double continuum_threshold(const Params& prm);

// lim {Df,g} - {f,Dg} from the local data at x = 1.
double symmetry_defect(const Params& prm, const LocalExpansion& f, const LocalExpansion& g);

struct GluingDefect {
  double b_gap = 0.0;  // B_left - B_right
  double a_gap = 0.0;  // A_right sin((α+θ)π) - A_left sin(θπ), divided by sin(θπ) when θ != 0
  double scale = 0.0;
};

GluingDefect gluing_defect(const LocalExpansion& le, const Params& prm);
bool boundary_check(const LocalExpansion& le, const Params& prm, double tol = 1e-9);

double plancherel_weight(const Params& prm, double s);

// s_k = k h for k = 1..K with K h = S_max; w vanishes at s = 0.
struct SpectralGrid {
  double h = 0.05;
  double s_max = 40.0;
  std::vector<double> nodes() const;
};

struct SpectralData {
  int n_first = 0;
  std::vector<double> p;       // θ + n
  std::vector<double> coeffs;  // a(p)
  std::vector<double> norms;   // ⟨Φ_p, Φ_p⟩
  SpectralGrid grid;
  std::vector<double> s;
  std::vector<double> F;       // F(s)
  std::vector<double> weight;  // w(s)
};

// Distance from the real axis to the nearest pole of w(s) continued off the axis:
// the Γ factors with h, h', h+θ, 1-h-θ.
double weight_pole_distance(const Params& prm);

// Same s_max, step shrunk so the trapezoid aliasing e^{-2πd/h} is below ~1e-14.
SpectralGrid alias_safe(const Params& prm, const SpectralGrid& grid);

// Ψ_s itself carries ~1e-11 relative noise once s > 70, so transforms ask for 1e-10.
inline constexpr QuadratureSpec kTransformSpec{1e-10};

// a(p) for n_min <= n <= N and F(s) on the grid, by quadrature.
SpectralData forward_transform(const Params& prm, const FunctionHandle& f, int N, const SpectralGrid& grid,
                               const QuadratureSpec& spec = kTransformSpec);

// Skeleton of SpectralData (indices, norms, grid, weights) with empty coefficients.
SpectralData spectral_frame(const Params& prm, int N, const SpectralGrid& grid);

struct VProduct {
  double discrete = 0.0;
  double continuous = 0.0;
  double value() const { return discrete + continuous; }
};

// Σ a b / ⟨Φ_p,Φ_p⟩ + trapezoid ∫ w F G ds
VProduct v_product(const SpectralData& a, const SpectralData& b);

struct ParsevalResult {
  double hilbert = 0.0;  // ⟨f,g⟩
  VProduct v;
  double residual = 0.0;
};

ParsevalResult parseval_check(const Params& prm, const FunctionHandle& f, const FunctionHandle& g, int N,
                              const SpectralGrid& grid, const QuadratureSpec& spec = kTransformSpec);

// Closed forms for ξ_μ = (1-x)^μ on (0,1).
double xi_coefficient(const Params& prm, double mu, double p);
double xi_continuous(const Params& prm, double mu, double s);
double xi_inner(const Params& prm, double mu, double nu);
SpectralData xi_transform(const Params& prm, double mu, int N, const SpectralGrid& grid);

}  // namespace pwh
