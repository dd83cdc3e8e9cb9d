#include "pwh/ortho.hpp"

#include <cmath>
#include <string>

#include "pwh/errors.hpp"
#include "pwh/hyp2f1.hpp"

namespace pwh {

namespace {

constexpr double kNearOne = 0.3;
constexpr double kCondRetry = 1e4;
// Above this p the left series cancels badly; G_p comes from the recurrence in p instead.
constexpr double kRecurrenceFrom = 4.0;

struct RealSum {
  double value;
  double abs_sum;
};

RealSum real_series(double a, double b, double c, double x) {
  SeriesSum s = f21_series_sum({a, b, c}, x);
  return {s.value.real(), s.abs_sum};
}

// F[h+is, h-is; c; x]: the numerator of each term ratio is (h+k)^2 + s^2.
RealSum conj_series(double h, double s, double c, double x) {
  double term = 1.0, sum = 1.0, abs_sum = 1.0;
  double s2 = s * s;
  int small = 0;
  for (int k = 0; k < 1000000; ++k) {
    double hk = h + k;
    double ratio = (hk * hk + s2) / ((c + k) * (k + 1.0)) * x;
    term *= ratio;
    sum += term;
    abs_sum += std::fabs(term);
    if (std::fabs(term) <= 1e-16 * std::fabs(sum) && std::fabs(ratio) < 1.0) {
      if (++small >= 3) return {sum, abs_sum};
    } else {
      small = 0;
    }
  }
  throw NoConvergence("conj_series: term limit exceeded");
}

// F[-n, b; c; x] by Horner in extended precision; the alternating terms of
// a high-degree Jacobi series lose log10(Σ|t_k|/|F|) digits.
double terminating_series(int n, double b, double c, double x) {
  long double acc = 1.0L;
  for (int k = n; k >= 1; --k) {
    long double km1 = k - 1;
    acc = 1.0L + acc * (km1 - n) * (b + km1) / ((c + km1) * static_cast<long double>(k)) * x;
  }
  return static_cast<double>(acc);
}

// F[a, b; c; x] for 0 <= x <= 0.7, same precision argument.
double extended_series(double a, double b, double c, double x) {
  long double term = 1.0L, sum = 1.0L;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + static_cast<long double>(k)) * (b + k) / ((c + static_cast<long double>(k)) * (k + 1)) * x;
    sum += term;
    if (term == 0.0L || (std::fabs(term) < 1e-21L * std::fabs(sum) && k > a - b)) return static_cast<double>(sum);
  }
  throw NoConvergence("extended_series: term limit exceeded");
}

double cond(double value, double mag) { return value == 0.0 ? 1.0 : mag / std::fabs(value); }

void require_point(const Abscissa& pt, const char* who) {
  if (!(pt.x > 0.0) || !std::isfinite(pt.x))
    throw DomainError(std::string(who) + ": x must be positive and finite");
  if (pt.xm1 == 0.0) throw SingularPoint(std::string(who) + ": x = 1");
}

}  // namespace

double jacobi_eval(int n, double alpha, double beta, double y, int formula) {
  if (n < 0) throw DomainError("jacobi_eval: n must be non-negative");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("jacobi_eval: alpha, beta > -1 required");
  if (!(y >= -1.0 && y <= 1.0)) throw DomainError("jacobi_eval: y outside [-1, 1]");
  double nn = n;
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  switch (formula) {
    case 1: {
      double k = gamma_bracket_real({nn + alpha + 1.0}, {alpha + 1.0, nn + 1.0});
      return k * terminating_series(n, nn + alpha + beta + 1.0, alpha + 1.0, 0.5 * (1.0 - y));
    }
    case 2: {
      double k = sign * gamma_bracket_real({nn + beta + 1.0}, {beta + 1.0, nn + 1.0});
      return k * terminating_series(n, nn + alpha + beta + 1.0, beta + 1.0, 0.5 * (1.0 + y));
    }
    case 3: {
      if (y == 1.0) throw DomainError("jacobi_eval: formula 3 is singular at y = 1");
      double k = sign * gamma_bracket_real({nn + beta + 1.0}, {beta + 1.0, nn + 1.0});
      double w = 0.5 * (1.0 - y);
      double x = 0.5 * (1.0 + y);
      double f;
      if (x <= 0.7) {
        f = extended_series(nn + beta + 1.0, -alpha - nn, beta + 1.0, x);
      } else {
        Abscissa pt{x, -w, 2.0 / (1.0 + y)};
        f = f21_at({nn + beta + 1.0, -alpha - nn, beta + 1.0}, pt).real();
      }
      return k * std::pow(w, -alpha) * f;
    }
    default:
      throw DomainError("jacobi_eval: formula must be 1, 2 or 3");
  }
}

double jacobi_norm_sq(int n, double alpha, double beta) {
  double nn = n;
  return std::exp2(alpha + beta + 1.0) *
         gamma_bracket_real({nn + alpha + 1.0, nn + beta + 1.0}, {nn + 1.0, nn + alpha + beta + 1.0}) /
         (2.0 * nn + alpha + beta + 1.0);
}

double phi_norm_sq(const Params& prm, double p) {
  const double a = prm.alpha, b = prm.beta;
  double g = 2.0 * p + a + b + 2.0;
  return gamma_bracket_real({g, g, 1.0 + p + a, p + 1.0}, {p + b + 1.0, p + a + b + 1.0}) /
         (2.0 * p + a + b + 1.0);
}

double theta_zero_constant(int n, double alpha, double beta) {
  double nn = n;
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * gamma_bracket_real({2.0 * nn + alpha + beta + 2.0, nn + 1.0}, {nn + beta + 1.0});
}

// ---------------------------------------------------------------- Φ_p

PhiFunction::PhiFunction(const Params& prm, const SpectralIndex& idx) : prm_(prm), p_(idx.p) {
  const double a = prm.alpha, b = prm.beta, p = p_;
  const double g = 2.0 * p + a + b + 2.0;
  left_scale_ = gamma_bracket_real({g}, {b + 1.0});
  right_scale_ = gamma_bracket_real({1.0 + p + a}, {-p});
  local_.A_left = gamma_bracket_real({g, -a}, {p + b + 1.0, -p - a});
  local_.B_left = gamma_bracket_real({g, a}, {-p, p + a + b + 1.0});
  local_.A_right = gamma_bracket_real({p + a + 1.0, g, -a}, {-p, p + 1.0, p + b + 1.0});
  local_.B_right = gamma_bracket_real({p + a + 1.0, g, a}, {-p, p + a + b + 1.0, p + a + 1.0});
}

double PhiFunction::left_direct(double x) const {
  const double a = prm_.alpha, b = prm_.beta;
  if (p_ <= kRecurrenceFrom) return left_scale_ * real_series(-p_, p_ + a + b + 1.0, b + 1.0, x).value;
  // G_ν = F[-ν, ν+α+β+1; β+1; x] from the Jacobi recurrence, started in [2, 3)
  int steps = static_cast<int>(std::floor(p_ - 2.0));
  double nu = p_ - steps;
  double g0 = real_series(-(nu - 1.0), nu + a + b, b + 1.0, x).value;
  double g1 = real_series(-nu, nu + a + b + 1.0, b + 1.0, x).value;
  const double y = 1.0 - 2.0 * x, d = b * b - a * a;
  for (int k = 0; k < steps; ++k) {
    double t = 2.0 * nu + a + b;
    double g2 = ((t + 1.0) * ((t + 2.0) * t * y + d) * g1 - 2.0 * nu * (nu + a) * (t + 2.0) * g0) /
                (2.0 * (nu + a + b + 1.0) * t * (nu + b + 1.0));
    g0 = g1;
    g1 = g2;
    nu += 1.0;
  }
  return left_scale_ * g1;
}

double PhiFunction::right_direct(const Abscissa& pt) const {
  if (right_scale_ == 0.0) return 0.0;
  const double a = prm_.alpha, b = prm_.beta, p = p_;
  double f = real_series(p + a + 1.0, p + a + b + 1.0, 2.0 * p + a + b + 2.0, pt.inv).value;
  return right_scale_ * f * std::exp(-(a + b + p + 1.0) * std::log1p(pt.xm1));
}

double PhiFunction::near_one(const Abscissa& pt) const {
  const double a = prm_.alpha, b = prm_.beta, p = p_;
  const bool left = pt.left();
  const double A = left ? local_.A_left : local_.A_right;
  const double B = left ? local_.B_left : local_.B_right;
  const double y = -pt.xm1;
  RealSum u{0.0, 0.0}, v{0.0, 0.0};
  if (A != 0.0) u = real_series(-p, p + a + b + 1.0, a + 1.0, y);
  double sing = 0.0;
  if (B != 0.0) {
    v = real_series(p + b + 1.0, -p - a, 1.0 - a, y);
    sing = B * std::pow(std::fabs(y), -a);
  }
  double value = A * u.value + sing * v.value;
  double c = cond(value, std::fabs(A) * u.abs_sum + std::fabs(sing) * v.abs_sum);
  if (c > kCondRetry && std::fabs(y) > 1e-3) return left ? left_direct(pt.x) : right_direct(pt);
  return value;
}

double PhiFunction::operator()(const Abscissa& pt) const {
  require_point(pt, "phi_p");
  if (std::fabs(pt.xm1) < kNearOne) return near_one(pt);
  return pt.left() ? left_direct(pt.x) : right_direct(pt);
}

double PhiFunction::operator()(double x) const { return (*this)(Abscissa::at(x)); }

double phi_p(const Params& prm, const SpectralIndex& idx, double x) { return PhiFunction(prm, idx)(x); }

LocalExpansion phi_p_local(const Params& prm, const SpectralIndex& idx) {
  return PhiFunction(prm, idx).local();
}

// ---------------------------------------------------------------- Ψ_s

PsiFunction::PsiFunction(const Params& prm, double s) : prm_(prm), s_(std::fabs(s)) {
  if (s_ < kSFloor) throw PoleError("psi_s: s below s_floor (Γ(-2is) pole at s = 0)");
  const double a = prm.alpha, b = prm.beta, th = prm.theta;
  const double h = prm.h(), hp = prm.h_prime();
  const Complex is(0.0, s_);

  Complex lg_b1 = log_gamma(b + 1.0);
  log_c_ = lg_b1 - std::log(Complex(sinpi(th + a))) + log_gamma(-2.0 * is) +
           log_sinpi(Complex(0.5 * (a + b) + th + 0.5, s_)) - log_gamma(h - is) - log_gamma(hp - is);

  double lgm = lg_b1.real();
  local_.A_left = gamma_real(-a) * std::exp(lgm - 2.0 * log_gamma(hp + is).real());
  local_.B_left = gamma_real(a) * std::exp(lgm - 2.0 * log_gamma(h + is).real());

  Complex lg_c = log_gamma(1.0 + 2.0 * is);
  Complex log_a_lam = lg_c + log_gamma(Complex(-a)) - log_gamma(1.0 - h + is) - log_gamma(hp + is);
  Complex log_b_lam = lg_c + log_gamma(Complex(a)) - log_gamma(h + is) - log_gamma(0.5 * (a - b + 1.0) + is);
  local_.A_right = 2.0 * std::exp(log_c_ + log_a_lam).real();
  local_.B_right = 2.0 * std::exp(log_c_ + log_b_lam).real();
}

double PsiFunction::left_series(double x) const {
  return conj_series(prm_.h(), s_, prm_.beta + 1.0, x).value;
}

Complex PsiFunction::lambda(const Abscissa& pt) const {
  if (!(pt.xm1 > 0.0)) throw DomainError("lambda_basis: requires x > 1");
  const double a = prm_.alpha, b = prm_.beta, h = prm_.h();
  const Complex is(0.0, s_);
  HypParams hp{h + is, 0.5 * (a - b + 1.0) + is, 1.0 + 2.0 * is};
  return f21_at_inverse(hp, pt) * std::exp(-(h + is) * std::log1p(pt.xm1));
}

double PsiFunction::near_one(const Abscissa& pt) const {
  const bool left = pt.left();
  const double a = prm_.alpha;
  const double A = left ? local_.A_left : local_.A_right;
  const double B = left ? local_.B_left : local_.B_right;
  const double y = -pt.xm1;
  RealSum u = conj_series(prm_.h(), s_, a + 1.0, y);
  RealSum v = conj_series(prm_.h_prime(), s_, 1.0 - a, y);
  double sing = B * std::pow(std::fabs(y), -a);
  double value = A * u.value + sing * v.value;
  double c = cond(value, std::fabs(A) * u.abs_sum + std::fabs(sing) * v.abs_sum);
  if (c <= kCondRetry || std::fabs(y) <= 1e-3) return value;
  if (left) return left_series(pt.x);
  // far form with its own cancellation estimate
  const double b = prm_.beta, h = prm_.h();
  const Complex is(0.0, s_);
  SeriesSum f = f21_series_sum({h + is, 0.5 * (a - b + 1.0) + is, 1.0 + 2.0 * is}, pt.inv);
  Complex k = std::exp(log_c_ - (h + is) * std::log1p(pt.xm1));
  double far = 2.0 * (k * f.value).real();
  double cf = cond(far, 2.0 * std::abs(k) * f.abs_sum);
  return cf < c ? far : value;
}

double PsiFunction::operator()(const Abscissa& pt) const {
  require_point(pt, "psi_s");
  // the left series has positive terms; it is only slow very close to 1
  if (pt.left() && pt.xm1 < -1e-3) return left_series(pt.x);
  if (std::fabs(pt.xm1) < kNearOne) return near_one(pt);
  if (pt.left()) return left_series(pt.x);
  const double a = prm_.alpha, b = prm_.beta, h = prm_.h();
  const Complex is(0.0, s_);
  Complex f = f21_series({h + is, 0.5 * (a - b + 1.0) + is, 1.0 + 2.0 * is}, pt.inv);
  return 2.0 * (std::exp(log_c_ - (h + is) * std::log1p(pt.xm1)) * f).real();
}

double PsiFunction::operator()(double x) const { return (*this)(Abscissa::at(x)); }

double psi_s(const Params& prm, double s, double x) { return PsiFunction(prm, s)(x); }

LocalExpansion psi_s_local(const Params& prm, double s) { return PsiFunction(prm, s).local(); }

Complex lambda_basis(const Params& prm, double s, double x) {
  if (!(x > 1.0)) throw DomainError("lambda_basis: requires x > 1");
  if (s == 0.0) {
    const double a = prm.alpha, b = prm.beta, h = prm.h();
    HypParams hp{h, 0.5 * (a - b + 1.0), 1.0};
    return f21_at_inverse(hp, Abscissa::at(x)) * std::pow(x, -h);
  }
  Complex v = PsiFunction(prm, std::fabs(s)).lambda(Abscissa::at(x));
  return s > 0 ? v : std::conj(v);
}

double xi_mu(double mu, double x) { return xi_mu(mu, Abscissa::at(x)); }

double xi_mu(double mu, const Abscissa& pt) {
  if (!pt.left()) return 0.0;
  if (mu == 0.0) return 1.0;
  return std::pow(-pt.xm1, mu);
}

}  // namespace pwh
