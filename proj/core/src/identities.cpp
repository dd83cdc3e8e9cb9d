#include "pwh/identities.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pwh/detail/double_exponential.hpp"
#include "pwh/errors.hpp"
#include "pwh/parallel.hpp"

namespace pwh {

namespace {

// log |Γ(a+is)/Γ(b+is)|², stable for large s
double log_ratio_sq(double a, double b, double s) {
  return 2.0 * log_gamma_ratio(Complex(0.0, s), a, b).real();
}

// |Γ(2is)|² = |Γ(is)|² |Γ(1/2+is)|² / (4π)
constexpr double kLogFourPi = 2.5310242469692907;

bool near_nonpositive_integer(double x) {
  double r = std::nearbyint(x);
  return r <= 0.0 && std::fabs(x - r) < 1e-12;
}

// log|1/Γ(x)| with its sign; false at a pole of Γ
bool log_rgamma(double x, double* lg, int* sign) {
  if (near_nonpositive_integer(x)) return false;
  int sg = 1;
  *lg = -lgamma_r(x, &sg);
  *sign = sg;
  return true;
}

double dougall_term(double al, const double (&a)[4], long n) {
  double v = al + static_cast<double>(n);
  if (v == 0.0) return 0.0;
  double acc = std::log(std::fabs(v));
  int sign = v < 0.0 ? -1 : 1;
  for (double aj : a) {
    double l1, l2;
    int s1, s2;
    if (!log_rgamma(aj + v, &l1, &s1) || !log_rgamma(aj - v, &l2, &s2)) return 0.0;
    acc += l1 + l2;
    sign *= s1 * s2;
  }
  return sign * std::exp(acc);
}

// t·n/(k-1) for terms decaying like n^{-k}, k estimated from the term at m < n
double power_tail(double t_m, double m, double t_n, double n) {
  if (t_n == 0.0) return 0.0;
  if (t_m == 0.0) return std::fabs(t_n) * n;
  double k = std::log(std::fabs(t_m / t_n)) / std::log(n / m);
  if (!(k > 1.0)) return std::numeric_limits<double>::infinity();
  return std::fabs(t_n) * n / (k - 1.0);
}

}  // namespace

void BetaIdentityParams::validate() const {
  std::string v = Params::violation(params.alpha, params.beta, params.theta);
  if (!v.empty()) throw DomainError("beta identity: " + v);
  if (!(mu > -0.5)) throw DomainError("beta identity: mu > -1/2 violated");
  if (!(nu > -0.5)) throw DomainError("beta identity: nu > -1/2 violated");
}

double beta_rhs(const BetaIdentityParams& bp) {
  const double a = bp.params.alpha, b = bp.params.beta, m = bp.mu, n = bp.nu;
  return gamma_bracket_real({b + 1.0, a + m + n + 1.0},
                            {a + b + m + n + 2.0, m + 1.0, n + 1.0, a + m + 1.0, a + n + 1.0});
}

double beta_discrete_term(const BetaIdentityParams& bp, double p) {
  const double a = bp.params.alpha, b = bp.params.beta, th = bp.params.theta, m = bp.mu, n = bp.nu;
  double pre = sinpi(th - m) * sinpi(th - n) / (kPi * kPi);
  if (pre == 0.0) return 0.0;
  return pre * (2.0 * p + a + b + 1.0) *
         gamma_bracket_real({p + a + b + 1.0, p + b + 1.0, p - n, p - m},
                            {p + a + b + m + 2.0, p + a + b + n + 2.0, p + a + 1.0, p + 1.0});
}

double beta_continuous_integrand(const BetaIdentityParams& bp, double s) {
  const Params& prm = bp.params;
  double pre = sinpi(prm.theta) * sinpi(prm.theta + prm.alpha) / (2.0 * kPi * kPi * kPi);
  if (pre == 0.0 || s == 0.0) return 0.0;
  const double h = prm.h(), hp = prm.h_prime(), th = prm.theta;
  double l = kLogFourPi + log_ratio_sq(h, bp.mu + h + 1.0, s) + log_ratio_sq(hp, bp.nu + h + 1.0, s) +
             log_ratio_sq(h + th, 0.0, s) + log_ratio_sq(1.0 - h - th, 0.5, s);
  return pre * std::exp(l);
}

BetaLhs beta_lhs(const BetaIdentityParams& bp, const BetaOptions& opt) {
  bp.validate();
  const Params& prm = bp.params;
  const double a = prm.alpha;
  SpectralGrid grid = alias_safe(prm, SpectralGrid{opt.h, opt.s_max});
  SpectralData fm = xi_transform(prm, bp.mu, opt.N, grid);
  SpectralData fn = xi_transform(prm, bp.nu, opt.N, grid);
  VProduct v = v_product(fm, fn);
  double g = gamma_bracket_real({bp.mu + 1.0, bp.nu + 1.0, a + bp.mu + 1.0, a + bp.nu + 1.0}, {});

  BetaLhs r;
  r.discrete = v.discrete / g;
  r.continuous = v.continuous / g;

  // discrete tail, term ratio updated incrementally. The tail is extrapolated
  // as a power law at every doubling; the change between successive
  // extrapolations is the uncertainty.
  {
    const double b = prm.beta, m = bp.mu, n = bp.nu;
    double p = prm.theta + opt.N + 1;
    double t = beta_discrete_term(bp, p);
    CompensatedSum tail;
    double t_half = t, p_half = p;
    long count = 0, next_mark = 1;
    double est = 0.0, unc = std::numeric_limits<double>::infinity();
    bool have_est = false;
    const long cap = 50000000;
    while (t != 0.0) {
      tail.add(t);
      ++count;
      double q = (2.0 * p + a + b + 3.0) / (2.0 * p + a + b + 1.0) * (p + a + b + 1.0) * (p + b + 1.0) * (p - n) *
                 (p - m) / ((p + a + b + m + 2.0) * (p + a + b + n + 2.0) * (p + a + 1.0) * (p + 1.0));
      t *= q;
      p += 1.0;
      if (count == next_mark) {
        double rest = power_tail(t_half, p_half, t, p);
        if (std::isfinite(rest)) {
          double e = tail.value() + std::copysign(rest, t);
          if (have_est) unc = std::fabs(e - est);
          est = e;
          have_est = true;
          if (rest < 1e-18) unc = std::fmin(unc, rest);
          if (unc < 1e-2 * opt.tol) break;
        }
        t_half = t;
        p_half = p;
        next_mark *= 2;
      }
      if (count >= cap) break;
    }
    if (t == 0.0) {
      est = tail.value();
      unc = 0.0;
    } else if (!have_est) {
      est = tail.value();
    }
    r.discrete_tail = est;
    r.tail_uncertainty += unc;
  }

  if (!prm.theta_zero()) {
    auto f = [&](double d) { return beta_continuous_integrand(bp, opt.s_max + d); };
    detail::DeOptions o;
    o.tol = 1e-12;
    o.level_max = 10;
    auto ct = detail::exp_sinh<double>(f, o);
    r.continuous_tail = ct.value;
    r.tail_uncertainty += ct.est_error;
    if (!ct.converged) r.tail_uncertainty += std::fabs(ct.value);
  }
  if (!(r.tail_uncertainty <= opt.tol))
    throw NoConvergence("beta_lhs: tail estimate above tolerance");
  return r;
}

double dbw_closed_form(double a1, double a2, double a3, double b) {
  return gamma_bracket_real({b - a1 - a2 - a3, a1 + a2, a1 + a3, a2 + a3}, {b - a1, b - a2, b - a3});
}

IdentityCheck dbw_integral_check(double a1, double a2, double a3, double b, double tol) {
  if (!(a1 > 0.0 && a2 > 0.0 && a3 > 0.0)) throw NoConvergence("dbw integral: a_k > 0 required");
  if (!(b > a1 + a2 + a3)) throw NoConvergence("dbw integral: b > a1+a2+a3 required for convergence");
  auto f = [&](double s) {
    if (s < 1e-8) return 0.0;  // integrand is O(s²) at the origin
    double l = kLogFourPi + log_ratio_sq(a1, b, s) + log_ratio_sq(a2, 0.0, s) + log_ratio_sq(a3, 0.5, s);
    return std::exp(l) / (2.0 * kPi);
  };
  detail::DeOptions o;
  o.tol = tol;
  o.level_max = 10;
  auto r = detail::exp_sinh<double>(f, o);
  if (!r.converged) throw NoConvergence("dbw integral: refinement cap reached");
  IdentityCheck c;
  c.numeric = r.value;
  c.closed = dbw_closed_form(a1, a2, a3, b);
  c.residual = std::fabs(c.numeric - c.closed);
  c.tail_bound = r.est_error;
  return c;
}

IdentityCheck dougall_general(double alpha_d, const double (&a)[4], int N) {
  double sa = a[0] + a[1] + a[2] + a[3];
  if (!(sa > 3.0)) throw NoConvergence("dougall: a1+a2+a3+a4 > 3 required for convergence");
  if (N < 2) throw DomainError("dougall: N >= 2 required");
  // n and -n paired
  CompensatedSum sum;
  sum.add(dougall_term(alpha_d, a, 0));
  for (long n = 1; n <= N; ++n) sum.add(dougall_term(alpha_d, a, n) + dougall_term(alpha_d, a, -n));
  double up = power_tail(dougall_term(alpha_d, a, N / 2), N / 2, dougall_term(alpha_d, a, N), N);
  double down = power_tail(dougall_term(alpha_d, a, -N / 2), N / 2, dougall_term(alpha_d, a, -N), N);

  IdentityCheck c;
  c.numeric = sum.value();
  double closed = std::sin(2.0 * kPi * alpha_d) / (2.0 * kPi) * gamma_real(sa - 3.0);
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) closed *= rgamma_real(a[j] + a[k] - 1.0);
  c.closed = closed;
  c.residual = std::fabs(c.numeric - c.closed);
  c.tail_bound = up + down;
  return c;
}

IdentityCheck dougall_check(double alpha_d, double a2, double a3, double a4, int N) {
  double a[4] = {alpha_d, a2, a3, a4};
  return dougall_general(alpha_d, a, N);
}

IdentityCheck dougall_from_beta(const BetaIdentityParams& bp, int N) {
  const Params& prm = bp.params;
  if (!prm.theta_zero()) throw DomainError("dougall_from_beta: theta = 0 required");
  const double al = prm.alpha, be = prm.beta;
  double ad = 0.5 * (al + be + 1.0);
  double a[4] = {0.5 * (1.0 - al - be), 0.5 * (1.0 + al - be), bp.mu + 0.5 * (al + be + 3.0),
                 bp.nu + 0.5 * (al + be + 3.0)};
  IdentityCheck c = dougall_general(ad, a, N);
  c.closed = sinpi(al + be) * sinpi(be) / (2.0 * kPi * kPi) * beta_rhs(bp);
  c.residual = std::fabs(c.numeric - c.closed);
  return c;
}

IdentityCheck dbw_from_beta(const Params& prm, double nu, double tol) {
  const double h = prm.h(), hp = prm.h_prime(), th = prm.theta;
  if (!(1.0 - h - th > 0.0)) throw DomainError("dbw_from_beta: (1-alpha-beta)/2 - theta > 0 required");
  IdentityCheck c = dbw_integral_check(h, hp, 1.0 - h - th, nu + h + 1.0, tol);
  double k = sinpi(th) * sinpi(th + prm.alpha) / (kPi * kPi);
  c.numeric *= k;
  c.tail_bound *= std::fabs(k);
  BetaIdentityParams bp{prm, th - 1.0, nu};
  c.closed = beta_rhs(bp);
  c.residual = std::fabs(c.numeric - c.closed);
  return c;
}

}  // namespace pwh
