#include "pwh/quadrature.hpp"

#include <cmath>
#include <utility>

#include "pwh/detail/double_exponential.hpp"
#include "pwh/errors.hpp"
#include "pwh/parallel.hpp"
#include "pwh/special.hpp"

namespace pwh {

namespace {

// f g d1^e1 d2^e2, falling back to logs when a factor overflows
double weighted(double f, double g, double d1, double e1, double d2, double e2) {
  if (f == 0.0 || g == 0.0) return 0.0;
  double w = std::pow(d1, e1) * std::pow(d2, e2);
  double fg = f * g;
  double r = fg * w;
  if (std::isfinite(r) && std::isfinite(fg) && r != 0.0) return r;
  double l = std::log(std::fabs(f)) + std::log(std::fabs(g)) + e1 * std::log(d1) + e2 * std::log(d2);
  return std::copysign(std::exp(l), fg);
}

detail::DeOptions de_options(const QuadratureSpec& spec) {
  detail::DeOptions o;
  o.tol = spec.tol;
  o.level_max = spec.level_max;
  return o;
}

void check_domain(const Params& prm) {
  std::string v = Params::violation(prm.alpha, prm.beta, prm.theta);
  if (!v.empty()) throw DomainError("pairing: " + v);
}

void require(const detail::DeResult<double>& r, const char* who) {
  if (!r.converged) throw NoConvergence(std::string(who) + ": refinement cap reached");
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(tol >= 1e-12)) throw DomainError("QuadratureSpec: tol >= 1e-12 violated");
  if (!(x_max > 1.0)) throw DomainError("QuadratureSpec: x_max > 1 violated");
  if (level_max < 3 || level_max > 14) throw DomainError("QuadratureSpec: level_max outside [3, 14]");
}

FunctionHandle handle(const PhiFunction& f) {
  FunctionHandle h;
  h.eval = [f](const Abscissa& pt) { return f(pt); };
  h.vanishes_right = f.infinity_coefficient() == 0.0 && f.local().A_right == 0.0 &&
                     f.local().B_right == 0.0;
  return h;
}

FunctionHandle handle(const PsiFunction& f) {
  FunctionHandle h;
  h.eval = [f](const Abscissa& pt) { return f(pt); };
  return h;
}

FunctionHandle xi_handle(double mu) {
  FunctionHandle h;
  h.eval = [mu](const Abscissa& pt) { return xi_mu(mu, pt); };
  h.vanishes_right = true;
  return h;
}

PairingResult integral_left(const Params& prm, const FunctionHandle& f, const FunctionHandle& g,
                            const QuadratureSpec& spec) {
  check_domain(prm);
  spec.validate();
  const double a = prm.alpha, b = prm.beta;
  auto integrand = [&](double dlo, double dhi) -> double {
    Abscissa pt = dlo < 0.5 ? Abscissa{dlo, dlo - 1.0, 1.0 / dlo} : Abscissa::from_offset(-dhi);
    return weighted(f.eval(pt), g.eval(pt), dhi, a, dlo, b);
  };
  auto r = detail::tanh_sinh<double>(integrand, 0.0, 1.0, de_options(spec));
  require(r, "integral_left");
  return {r.value, r.est_error, 0.0, false};
}

PairingResult integral_right(const Params& prm, const FunctionHandle& f, const FunctionHandle& g,
                             const QuadratureSpec& spec) {
  check_domain(prm);
  spec.validate();
  if (f.vanishes_right || g.vanishes_right) return {};
  const double a = prm.alpha, b = prm.beta;
  const double xs = spec.x_max;
  const double span = xs - 1.0;
  auto near = [&](double dlo, double dhi) -> double {
    Abscissa pt = dlo < 0.5 * span ? Abscissa::from_offset(dlo) : Abscissa::at(xs - dhi);
    return weighted(f.eval(pt), g.eval(pt), pt.xm1, a, pt.x, b);
  };
  auto r1 = detail::tanh_sinh<double>(near, 1.0, xs, de_options(spec));
  require(r1, "integral_right");

  // x = 1/t on (0, 1/x_max): (x-1)^α x^β dx = (1-t)^α t^{-α-β-2} dt
  const double tt = 1.0 / xs;
  double t_min = tt, at_t_min = 0.0;
  auto far = [&](double dlo, double dhi) -> double {
    double t = dlo < 0.5 * tt ? dlo : tt - dhi;
    if (t < 1e-300) return 0.0;
    Abscissa pt = Abscissa::from_inverse(t);
    double v = weighted(f.eval(pt), g.eval(pt), 1.0 - t, a, t, -a - b - 2.0);
    if (t < t_min) {
      t_min = t;
      at_t_min = std::fabs(v);
    }
    return v;
  };
  auto r2 = detail::tanh_sinh<double>(far, 0.0, tt, de_options(spec));
  require(r2, "integral_right");
  return {r1.value + r2.value, r1.est_error + r2.est_error, at_t_min * t_min, false};
}

PairingResult bilinear_pairing(const Params& prm, const FunctionHandle& f, const FunctionHandle& g,
                               const QuadratureSpec& spec) {
  PairingResult left = integral_left(prm, f, g, spec);
  if (prm.theta_zero()) return left;
  PairingResult right = integral_right(prm, f, g, spec);
  double r = prm.sin_ratio();
  PairingResult out;
  out.value = left.value + r * right.value;
  out.est_error = left.est_error + std::fabs(r) * right.est_error;
  out.tail_bound = std::fabs(r) * right.tail_bound;
  return out;
}

PairingResult hermitian_pairing(const Params& prm, const FunctionHandle& f, const FunctionHandle& g,
                                const QuadratureSpec& spec) {
  PairingResult out = bilinear_pairing(prm, f, g, spec);
  out.positive_definite = prm.theta_zero() || prm.sin_ratio() > 0.0;
  return out;
}

namespace {

double a_pq(const Params& prm, double p, double q) {
  const double s = prm.alpha + prm.beta;
  return gamma_bracket_real({2.0 * p + s + 2.0, 2.0 * q + s + 2.0}, {}) / (p + q + s + 1.0);
}

double b_pq(const Params& prm, double p, double q) {
  const double a = prm.alpha, b = prm.beta;
  return gamma_bracket_real({q + 1.0, p + a + 1.0}, {p + b + 1.0, q + a + b + 1.0});
}

}  // namespace

double cross_integral_X(const Params& prm, double p, double q) {
  if (p == q) throw DomainError("cross_integral_X: p = q is the removable singularity; use phi_norm_sq");
  const double a = prm.alpha, b = prm.beta;
  double t1 = gamma_bracket_real({}, {p + b + 1.0, q + a + b + 1.0, -q, -p - a});
  double t2 = gamma_bracket_real({}, {q + b + 1.0, p + a + b + 1.0, -p, -q - a});
  return kPi * a_pq(prm, p, q) / ((q - p) * sinpi(a)) * (t1 - t2);
}

double cross_integral_Y(const Params& prm, double p, double q) {
  if (p == q) throw DomainError("cross_integral_Y: p = q is the removable singularity");
  double sp = sinpi(p), sq = sinpi(q);
  if (sp == 0.0 || sq == 0.0) return 0.0;
  return a_pq(prm, p, q) * sp * sq / (kPi * (q - p) * sinpi(prm.alpha)) *
         (b_pq(prm, q, p) - b_pq(prm, p, q));
}

GramMatrix gram_matrix(const Params& prm, int n_first, int size, const QuadratureSpec& spec) {
  check_domain(prm);
  if (size < 0) throw DomainError("gram_matrix: negative size");
  std::vector<PhiFunction> phis;
  std::vector<FunctionHandle> hs;
  for (int i = 0; i < size; ++i) {
    phis.emplace_back(prm, SpectralIndex::make(prm, n_first + i));
    hs.push_back(handle(phis.back()));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) pairs.emplace_back(i, j);

  GramMatrix g;
  g.n_first = n_first;
  g.size = size;
  g.values.assign(static_cast<std::size_t>(size * size), 0.0);
  g.errors.assign(static_cast<std::size_t>(size * size), 0.0);
  parallel_for(pairs.size(), [&](std::size_t k) {
    auto [i, j] = pairs[k];
    PairingResult r = bilinear_pairing(prm, hs[i], hs[j], spec);
    std::size_t ij = static_cast<std::size_t>(i * size + j), ji = static_cast<std::size_t>(j * size + i);
    g.values[ij] = g.values[ji] = r.value;
    g.errors[ij] = g.errors[ji] = r.est_error + r.tail_bound;
  });
  return g;
}

}  // namespace pwh
