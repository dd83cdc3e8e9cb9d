#pragma once

#include <functional>
#include <vector>

#include "pwh/abscissa.hpp"
#include "pwh/ortho.hpp"
#include "pwh/params.hpp"

namespace pwh {

struct QuadratureSpec {
  double tol = 1e-12;   // relative to ∫|integrand|, floor 1e-12 enforced by validate()
  double x_max = 2.0;   // (1, x_max) directly, (x_max, ∞) through x = 1/t
  int level_max = 9;

  void validate() const;
};

struct PairingResult {
  double value = 0.0;
  double est_error = 0.0;
  double tail_bound = 0.0;
  bool positive_definite = false;  // only meaningful for the Hermitian product
};

struct FunctionHandle {
  std::function<double(const Abscissa&)> eval;
  bool vanishes_right = false;  // identically zero on x > 1
};

FunctionHandle handle(const PhiFunction& f);
FunctionHandle handle(const PsiFunction& f);
FunctionHandle xi_handle(double mu);

// ∫_0^1 f g (1-x)^α x^β dx
PairingResult integral_left(const Params& prm, const FunctionHandle& f, const FunctionHandle& g,
                            const QuadratureSpec& spec = {});
// ∫_1^∞ f g (x-1)^α x^β dx
PairingResult integral_right(const Params& prm, const FunctionHandle& f, const FunctionHandle& g,
                             const QuadratureSpec& spec = {});

// {f,g}; at θ = 0 the right half-line is dropped (sin θπ = 0).
PairingResult bilinear_pairing(const Params& prm, const FunctionHandle& f, const FunctionHandle& g,
                               const QuadratureSpec& spec = {});
PairingResult hermitian_pairing(const Params& prm, const FunctionHandle& f, const FunctionHandle& g,
                                const QuadratureSpec& spec = {});

double cross_integral_X(const Params& prm, double p, double q);
double cross_integral_Y(const Params& prm, double p, double q);

struct GramMatrix {
  int n_first = 0;
  int size = 0;
  std::vector<double> values;  // row-major
  std::vector<double> errors;
  double at(int i, int j) const { return values[static_cast<std::size_t>(i * size + j)]; }
};

// {Φ_{θ+m}, Φ_{θ+n}} for n_first <= m, n < n_first + size.
GramMatrix gram_matrix(const Params& prm, int n_first, int size, const QuadratureSpec& spec = {});

}  // namespace pwh
