#include "pwh/mellin_barnes.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "pwh/detail/double_exponential.hpp"
#include "pwh/errors.hpp"
#include "pwh/hyp2f1.hpp"

namespace pwh {

namespace {

detail::DeOptions de_options(const ContourSpec& spec) {
  detail::DeOptions o;
  o.tol = spec.tol;
  o.level_max = spec.level_max;
  return o;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Largest admissible wedge slope: the region swept between the straight line
// and the wedge must not contain a pole of the series on that side.
double wedge_slope(const BarnesKernel& k, double dir, double bend) {
  double slope = bend;
  for (const auto& g : k.numerators) {
    if (g.sign * dir > 0.0) continue;  // this series lies on the other side
    // leading pole s0 = -shift/sign; further poles move away from the contour
    Complex s0 = -g.shift / g.sign;
    double im = std::fabs(s0.imag());
    if (im == 0.0) continue;
    double gap = std::fabs(s0.real() - k.contour_re);
    slope = std::fmin(slope, 0.5 * gap / im);
  }
  return slope;
}

// v e^z without intermediate overflow
Complex scaled(double v, Complex z) {
  Complex lz = z + std::log(std::fabs(v));
  if (lz.real() < -745.0) return 0.0;
  return std::copysign(1.0, v) * std::exp(lz);
}

Abscissa inverted(const Abscissa& pt) { return {pt.inv, -pt.xm1 * pt.inv, pt.x}; }

// x^{s-1} f(x) on (0,1) plus t^{-s-1} f(1/t) on (0,1)
Complex mellin_pieces(const MellinFunction& f, Complex s, const ContourSpec& spec, bool* ok) {
  auto point = [](double dlo, double dhi) {
    return dlo < 0.5 ? Abscissa{dlo, dlo - 1.0, 1.0 / dlo} : Abscissa::from_offset(-dhi);
  };
  auto logx = [](double dlo, double dhi) { return dlo < 0.5 ? std::log(dlo) : std::log1p(-dhi); };
  auto left = [&](double dlo, double dhi) -> Complex {
    Abscissa pt = point(dlo, dhi);
    double v = f.eval(pt);
    if (v == 0.0) return 0.0;
    return scaled(v, (s - 1.0) * logx(dlo, dhi));
  };
  auto right = [&](double dlo, double dhi) -> Complex {
    Abscissa t = point(dlo, dhi);
    double v = f.eval(inverted(t));
    if (v == 0.0) return 0.0;
    return scaled(v, (-s - 1.0) * logx(dlo, dhi));
  };
  auto a = detail::tanh_sinh<Complex>(left, 0.0, 1.0, de_options(spec));
  auto b = detail::tanh_sinh<Complex>(right, 0.0, 1.0, de_options(spec));
  *ok = a.converged && b.converged;
  return a.value + b.value;
}

}  // namespace

Complex BarnesKernel::log_value(Complex s) const {
  Complex acc = std::log(prefactor);
  std::size_t n = numerators.size(), d = denominators.size();
  std::vector<bool> used(d, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = numerators[i];
    bool paired = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (used[j] || denominators[j].sign != g.sign) continue;
      used[j] = true;
      acc += log_gamma_ratio(g.sign * s, g.shift, denominators[j].shift);
      paired = true;
      break;
    }
    if (!paired) acc += log_gamma(g.shift + g.sign * s);
  }
  for (std::size_t j = 0; j < d; ++j)
    if (!used[j]) acc -= log_gamma(denominators[j].shift + denominators[j].sign * s);
  return acc;
}

Complex BarnesKernel::operator()(Complex s) const {
  if (prefactor == Complex(0.0)) return 0.0;
  for (const auto& g : denominators)
    if (at_gamma_pole(g.shift + g.sign * s)) return 0.0;
  for (const auto& g : numerators)
    if (at_gamma_pole(g.shift + g.sign * s)) throw PoleError("Barnes kernel: contour meets a pole");
  return std::exp(log_value(s));
}

void BarnesKernel::validate() const {
  if (!std::isfinite(contour_re)) throw StripViolation("Barnes kernel: contour abscissa not finite");
  if (strip.empty()) throw StripViolation("Barnes kernel: empty strip (" + num(strip.lo) + ", " + num(strip.hi) + ")");
  if (!strip.contains(contour_re))
    throw StripViolation("Barnes kernel: Re s = " + num(contour_re) + " outside (" + num(strip.lo) + ", " +
                         num(strip.hi) + ")");
  for (const auto& g : numerators) {
    // poles at s = -(shift + k)/sign; left series for sign > 0, right for sign < 0
    double lead = -g.shift.real() / g.sign;
    bool ok = g.sign > 0.0 ? lead < contour_re : lead > contour_re;
    if (!ok) throw StripViolation("Barnes kernel: contour Re s = " + num(contour_re) + " does not separate pole at " + num(lead));
  }
}

Complex barnes_integral(const BarnesKernel& k, double x, const ContourSpec& spec) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("barnes_integral: x must be positive and finite");
  k.validate();
  const double g = k.contour_re;
  if (x == 1.0) {
    auto f = [&](double tau) -> Complex { return k(Complex(g, tau)); };
    auto r = detail::sinh_sinh<Complex>(f, de_options(spec));
    if (!r.converged) throw NoConvergence("barnes_integral: refinement cap reached");
    return r.value / (2.0 * kPi);
  }
  // x < 1: x^{-s} decays as Re s -> -inf, so the wedge opens to the left
  const double dir = x < 1.0 ? -1.0 : 1.0;
  const double kappa = wedge_slope(k, dir, spec.bend);
  const double lx = std::log(x);
  // the wedge has a corner at τ = 0; each arm is integrated separately
  auto arm = [&](double sg) {
    Complex ds(dir * kappa, sg);
    auto f = [&](double d) -> Complex {
      Complex s(g + dir * kappa * d, sg * d);
      Complex lv = k.log_value(s) - s * lx;
      if (lv.real() < -745.0) return 0.0;
      for (const auto& den : k.denominators)
        if (at_gamma_pole(den.shift + den.sign * s)) return 0.0;
      return std::exp(lv) * ds;
    };
    auto r = detail::exp_sinh<Complex>(f, de_options(spec));
    if (!r.converged) throw NoConvergence("barnes_integral: refinement cap reached");
    return r.value;
  };
  Complex total = arm(1.0) - arm(-1.0);
  // (1/2πi) ∫ ... (ds/dτ) dτ
  return total / Complex(0.0, 2.0 * kPi);
}

BarnesKernel main_integral_kernel(Complex a, Complex b, Complex c) {
  // Γ[c, 1-b; a] Γ[s, a-s; s+1-b, c-s]
  if (!(a.real() > 0.0)) throw StripViolation("main integral: Re a > 0 required for a contour in (0, Re a)");
  BarnesKernel k;
  k.prefactor = gamma_bracket({c, 1.0 - b}, {a});
  k.numerators = {{0.0, 1.0}, {a, -1.0}};
  k.denominators = {{1.0 - b, 1.0}, {c, -1.0}};
  k.strip = {0.0, a.real()};
  k.contour_re = 0.5 * a.real();
  return k;
}

Complex barnes_main_integral(Complex a, Complex b, Complex c, double x, const ContourSpec& spec) {
  return barnes_integral(main_integral_kernel(a, b, c), x, spec);
}

Complex main_integral_closed_form(Complex a, Complex b, Complex c, double x) {
  if (!(x > 0.0) || x == 1.0) throw DomainError("main integral closed form: x in (0,1) or (1,inf) required");
  if (a.imag() != 0.0 || b.imag() != 0.0 || c.imag() != 0.0)
    throw DomainError("main integral closed form: real parameters required");
  HypParams hp{a.real(), b.real(), c.real()};
  if (x < 1.0) return f21_at(hp, Abscissa::at(x));
  HypParams inv{a.real(), 1.0 + a.real() - c.real(), 1.0 + a.real() - b.real()};
  Complex pre = std::pow(x, -a) * gamma_bracket({c, 1.0 - b}, {c - a, 1.0 + a - b});
  return pre * f21_at(inv, Abscissa::at(1.0 / x));
}

Complex barnes_delta(Complex a, Complex b, Complex c, Complex d, const ContourSpec& spec) {
  if (!((c + d - a - b).real() > 1.0))
    throw NoConvergence("Barnes delta integral: Re(c+d-a-b) > 1 required for convergence");
  BarnesKernel k;
  k.numerators = {{a, 1.0}, {b, -1.0}};
  k.denominators = {{c, 1.0}, {d, -1.0}};
  k.strip = {-a.real(), b.real()};
  k.contour_re = 0.5 * (b.real() - a.real());
  return barnes_integral(k, 1.0, spec);
}

Complex barnes_delta_closed_form(Complex a, Complex b, Complex c, Complex d) {
  return gamma_bracket({a + b, c + d - a - b - 1.0}, {c + d - 1.0, c - a, d - b});
}

Complex mellin_numeric(const MellinFunction& f, Complex s, const ContourSpec& spec) {
  if (!f.strip.contains(s.real()))
    throw StripViolation("Mellin transform: Re s = " + num(s.real()) + " outside (" + num(f.strip.lo) + ", " +
                         num(f.strip.hi) + ")");
  bool ok = false;
  Complex v = mellin_pieces(f, s, spec, &ok);
  if (!ok) throw NoConvergence("Mellin transform: refinement cap reached");
  return v;
}

BarnesKernel kernel_M1(const Params& prm, double p) {
  const double a = prm.alpha, b = prm.beta;
  BarnesKernel k;
  k.prefactor = gamma_bracket_real({b + 1.0, p + a + 1.0}, {b + p + 1.0});
  k.numerators = {{0.0, 1.0}, {b + p + 1.0, -1.0}};
  k.denominators = {{p + a + 1.0, 1.0}, {b + 1.0, -1.0}};
  k.strip = {0.0, b + p + 1.0};
  k.contour_re = 0.5 * (k.strip.lo + k.strip.hi);
  return k;
}

BarnesKernel kernel_M2(const Params& prm, double q) {
  const double a = prm.alpha, b = prm.beta;
  BarnesKernel k;
  k.prefactor = gamma_bracket_real({2.0 * q + a + b + 2.0, -a - q}, {q + a + b + 1.0});
  k.numerators = {{a + q, 1.0}, {b + 1.0, -1.0}};
  k.denominators = {{0.0, 1.0}, {q + b + 2.0, -1.0}};
  k.strip = {-a - q, b + 1.0};
  k.contour_re = 0.5 * (k.strip.lo + k.strip.hi);
  return k;
}

double kernel_K1(const Params& prm, double p, const Abscissa& pt) {
  const double a = prm.alpha, b = prm.beta;
  if (pt.xm1 == 0.0) throw SingularPoint("K1: x = 1 is a singular point");
  if (pt.left()) return f21_at({p + b + 1.0, -p - a, b + 1.0}, pt).real();
  double pre = gamma_bracket_real({b + 1.0, p + a + 1.0}, {-p, 2.0 * p + a + b + 2.0});
  if (pre == 0.0) return 0.0;
  double fv = f21_at_inverse({b + p + 1.0, p + 1.0, 2.0 * p + a + b + 2.0}, pt).real();
  return pre * std::pow(pt.inv, b + p + 1.0) * fv;
}

double kernel_K2(const Params& prm, double q, const Abscissa& pt) {
  const double a = prm.alpha, b = prm.beta;
  if (pt.xm1 == 0.0) throw SingularPoint("K2: x = 1 is a singular point");
  if (pt.left())
    return std::pow(pt.x, q + a) * f21_at({q + a + b + 1.0, q + a + 1.0, 2.0 * q + a + b + 2.0}, pt).real();
  double pre = gamma_bracket_real({2.0 * q + a + b + 2.0, -a - q}, {q + 1.0, b + 1.0});
  if (pre == 0.0) return 0.0;
  double fv = f21_at_inverse({q + a + b + 1.0, -q, b + 1.0}, pt).real();
  return pre * std::pow(pt.inv, b + 1.0) * fv;
}

double kernel_K1(const Params& prm, double p, double x) { return kernel_K1(prm, p, Abscissa::at(x)); }
double kernel_K2(const Params& prm, double q, double x) { return kernel_K2(prm, q, Abscissa::at(x)); }

MellinFunction mellin_K1(const Params& prm, double p) {
  return {[prm, p](const Abscissa& pt) { return kernel_K1(prm, p, pt); }, {0.0, prm.beta + p + 1.0}};
}

MellinFunction mellin_K2(const Params& prm, double q) {
  return {[prm, q](const Abscissa& pt) { return kernel_K2(prm, q, pt); }, {-prm.alpha - q, prm.beta + 1.0}};
}

std::string StripReport::failure() const {
  if (!k1_nonempty) return "0 < beta+p+1";
  if (!k2_nonempty) return "0 < beta+alpha+q+1";
  if (!beta_positive) return "0 < beta+1";
  if (!pq_positive) return "0 < p+q+alpha+beta+1";
  return {};
}

StripReport strip_report(const Params& prm, double p, double q) {
  const double a = prm.alpha, b = prm.beta;
  StripReport r;
  r.strip_K1 = {0.0, b + p + 1.0};
  r.strip_K2 = {-a - q, b + 1.0};
  r.k1_nonempty = 0.0 < b + p + 1.0;
  r.k2_nonempty = 0.0 < b + a + q + 1.0;
  r.beta_positive = 0.0 < b + 1.0;
  r.pq_positive = 0.0 < p + q + a + b + 1.0;
  // (0, β+p+1) ∩ (-α-q, β+1) is non-empty exactly when all four hold
  Strip both{std::fmax(r.strip_K1.lo, r.strip_K2.lo), std::fmin(r.strip_K1.hi, r.strip_K2.hi)};
  r.intersection_nonempty = !both.empty();
  r.convolution_applicable = r.k1_nonempty && r.k2_nonempty && r.beta_positive && r.pq_positive;
  return r;
}

ConvolutionResult convolution_check(const Params& prm, double p, double q, const ContourSpec& spec) {
  StripReport rep = strip_report(prm, p, q);
  if (!rep.convolution_applicable)
    throw StripViolation("convolution: inequality " + rep.failure() + " fails");
  BarnesKernel k1 = kernel_M1(prm, p), k2 = kernel_M2(prm, q);
  BarnesKernel k;
  k.prefactor = k1.prefactor * k2.prefactor;
  k.numerators = {k1.numerators[0], k1.numerators[1], k2.numerators[0], k2.numerators[1]};
  k.denominators = {k1.denominators[0], k1.denominators[1], k2.denominators[0], k2.denominators[1]};
  k.strip = {std::fmax(k1.strip.lo, k2.strip.lo), std::fmin(k1.strip.hi, k2.strip.hi)};
  k.contour_re = 0.5 * (k.strip.lo + k.strip.hi);

  ConvolutionResult r;
  r.contour_re = k.contour_re;
  r.rhs = barnes_integral(k, 1.0, spec).real();

  // ∫_0^1 [K1(x) K2(1/x) + K1(1/x) K2(x)] dx/x
  auto integrand = [&](double dlo, double dhi) -> double {
    Abscissa pt = dlo < 0.5 ? Abscissa{dlo, dlo - 1.0, 1.0 / dlo} : Abscissa::from_offset(-dhi);
    Abscissa iv = inverted(pt);
    double u = kernel_K1(prm, p, pt) * kernel_K2(prm, q, iv);
    double v = kernel_K1(prm, p, iv) * kernel_K2(prm, q, pt);
    double s = (std::isfinite(u) ? u : 0.0) + (std::isfinite(v) ? v : 0.0);
    return s * pt.inv;
  };
  auto lhs = detail::tanh_sinh<double>(integrand, 0.0, 1.0, de_options(spec));
  if (!lhs.converged) throw NoConvergence("convolution: x-integral refinement cap reached");
  r.lhs = lhs.value;
  r.residual = std::fabs(r.lhs - r.rhs);
  return r;
}

double convolution_prefactor(const Params& prm, double p, double q) {
  const double a = prm.alpha, b = prm.beta;
  return gamma_bracket_real({2.0 * p + a + b + 2.0, q + 1.0}, {b + 1.0, -a - q});
}

double orthogonality_rhs(const Params& prm, double p, double q) {
  const double a = prm.alpha, b = prm.beta;
  double apq = std::exp(std::lgamma(2.0 * p + a + b + 2.0) + std::lgamma(2.0 * q + a + b + 2.0)) /
               (p + q + a + b + 1.0);
  double bpq = gamma_bracket_real({q + 1.0, p + a + 1.0}, {p + b + 1.0, q + a + b + 1.0});
  double d = q - p;
  double sinc = d == 0.0 ? 1.0 : sinpi(d) / (kPi * d);
  return apq * bpq * sinc;
}

}  // namespace pwh
