#pragma once

// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
// half-lines and sinh-sinh on the whole line. Nodes are refined by halving
// the step; each level adds only the odd nodes.

#include <cmath>
#include <complex>
#include <type_traits>

#include "pwh/errors.hpp"

namespace pwh::detail {

inline constexpr double kHalfPi = 1.5707963267948966;
// Nodes closer than this to an endpoint are dropped; for integrable
// algebraic singularities the neglected mass is far below double precision.
inline constexpr double kMinDistance = 1e-300;

template <class T>
struct DeResult {
  T value{};
  double est_error = 0.0;
  double l1 = 0.0;  // h Σ|w f|, the scale the tolerance refers to
  int levels = 0;
  int evaluations = 0;
  bool converged = false;
};

struct DeOptions {
  double tol = 1e-12;     // relative to l1
  int level_max = 8;
  int level_min = 3;
  double abs_floor = 0.0;  // converged once the change is below this
};

inline double magnitude(double v) { return std::fabs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }
inline bool finite_value(double v) { return std::isfinite(v); }
inline bool finite_value(std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// contrib(t) returns w(t) f(x(t)) at the node t.
template <class T, class Contrib>
DeResult<T> de_levels(Contrib&& contrib, double t_lo, double t_hi, const DeOptions& opt) {
  DeResult<T> r;
  T sum{};
  double abs_sum = 0.0;
  T prev{};
  auto add = [&](double t) {
    T c = contrib(t);
    if (!finite_value(c)) throw NoConvergence("double-exponential rule: non-finite integrand");
    sum += c;
    abs_sum += magnitude(c);
    ++r.evaluations;
  };
  for (long j = 0; j <= t_hi; ++j) add(static_cast<double>(j));
  for (long j = -1; j >= t_lo; --j) add(static_cast<double>(j));
  double h = 1.0;
  prev = sum * h;
  for (int level = 1; level <= opt.level_max; ++level) {
    h *= 0.5;
    for (long j = 1; j * h <= t_hi; j += 2) add(j * h);
    for (long j = -1; j * h >= t_lo; j -= 2) add(j * h);
    T cur = sum * h;
    double diff = magnitude(cur - prev);
    r.levels = level;
    r.value = cur;
    r.l1 = abs_sum * h;
    r.est_error = std::fmax(diff, 1e-15 * r.l1);
    if (level >= opt.level_min && (diff <= opt.tol * r.l1 || diff <= opt.abs_floor)) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

// ∫_a^b f; f(dist_from_a, dist_from_b) so endpoint distances keep full precision.
template <class T, class F>
DeResult<T> tanh_sinh(F&& f, double a, double b, const DeOptions& opt) {
  const double half = 0.5 * (b - a);
  auto contrib = [&](double t) -> T {
    double u = kHalfPi * std::sinh(std::fabs(t));
    double e = std::exp(-2.0 * u);
    double near = 2.0 * half * e / (1.0 + e);  // distance to the closer end
    if (near < kMinDistance) return T{};
    double far = 2.0 * half - near;
    double ch = std::cosh(u);
    double w = half * kHalfPi * std::cosh(t) / (ch * ch);
    if (w == 0.0) return T{};
    T v = t >= 0.0 ? f(far, near) : f(near, far);
    return v * w;
  };
  return de_levels<T>(contrib, -6.2, 6.2, opt);
}

// ∫_a^∞ f; f(x - a)
template <class T, class F>
DeResult<T> exp_sinh(F&& f, const DeOptions& opt) {
  auto contrib = [&](double t) -> T {
    double u = kHalfPi * std::sinh(t);
    double d = std::exp(u);
    if (d == 0.0 || !std::isfinite(d)) return T{};
    T v = f(d);
    if (v == T{}) return T{};
    return v * (kHalfPi * std::cosh(t) * d);
  };
  return de_levels<T>(contrib, -6.7, 6.7, opt);
}

// ∫_{-∞}^{∞} f(τ) dτ
template <class T, class F>
DeResult<T> sinh_sinh(F&& f, const DeOptions& opt) {
  auto contrib = [&](double t) -> T {
    double u = kHalfPi * std::sinh(t);
    double tau = std::sinh(u);
    if (!std::isfinite(tau)) return T{};
    T v = f(tau);
    if (v == T{}) return T{};
    return v * (kHalfPi * std::cosh(t) * std::cosh(u));
  };
  return de_levels<T>(contrib, -6.7, 6.7, opt);
}

}  // namespace pwh::detail
