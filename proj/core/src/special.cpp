#include "pwh/special.hpp"

#include <cmath>
#include <string>

#include "pwh/errors.hpp"

namespace pwh {

namespace {

const double kHalfLog2Pi = 0.91893853320467274178032973640562;
const double kLogPi = 1.14472988584940017414342735135305;

// B_2k / (2k(2k-1))
const double kStirling[] = {
    1.0 / 12.0,         -1.0 / 360.0,        1.0 / 1260.0,    -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0,   1.0 / 156.0,     -3617.0 / 122400.0,
};

Complex stirling(Complex w) {
  Complex inv = 1.0 / w;
  Complex inv2 = inv * inv;
  Complex series = 0.0;
  for (int k = 7; k >= 0; --k) series = series * inv2 + kStirling[k];
  return (w - 0.5) * std::log(w) - w + kHalfLog2Pi + series * inv;
}

double lgamma_signed(double x, int* sign) {
  int s = 1;
  double v = ::lgamma_r(x, &s);
  *sign = s;
  return v;
}

std::string describe(Complex z) {
  return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

// mantissa/exponent accumulator so long Γ products never overflow
struct ScaledProduct {
  double mant = 1.0;
  long expo = 0;
  void mul(double v) {
    int e = 0;
    double m = std::frexp(v, &e);
    mant *= m;
    expo += e;
    int e2 = 0;
    mant = std::frexp(mant, &e2);
    expo += e2;
  }
  void div(double v) {
    int e = 0;
    double m = std::frexp(v, &e);
    mant /= m;
    expo -= e;
    int e2 = 0;
    mant = std::frexp(mant, &e2);
    expo += e2;
  }
  double value() const {
    if (expo > 2000) return mant * HUGE_VAL;
    if (expo < -2000) return 0.0 * mant;
    return std::ldexp(mant, static_cast<int>(expo));
  }
};

}  // namespace

Complex checked(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("non-finite complex scalar " + describe(z));
  return z;
}

double sinpi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cospi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  double a = std::fabs(x - 2.0 * std::round(0.5 * x));  // a in [0, 1]
  if (a > 0.5) return -std::sin(kPi * (a - 0.5));
  return std::sin(kPi * (0.5 - a));
}

Complex sinpi(Complex z) {
  double y = kPi * z.imag();
  return {sinpi(z.real()) * std::cosh(y), cospi(z.real()) * std::sinh(y)};
}

Complex cospi(Complex z) {
  double y = kPi * z.imag();
  return {cospi(z.real()) * std::cosh(y), -sinpi(z.real()) * std::sinh(y)};
}

Complex log_sinpi(Complex z) {
  double y = z.imag();
  if (std::fabs(y) < 10.0) return std::log(sinpi(z));
  // sin πz = (i/2) e^{-iπz} (1 - e^{2iπz}) for y > 0; mirror for y < 0
  if (y > 0) {
    Complex e = std::exp(Complex(0.0, 2.0 * kPi) * z);
    return std::log(Complex(0.0, 0.5)) - Complex(0.0, kPi) * z + std::log(1.0 - e);
  }
  return std::conj(log_sinpi(std::conj(z)));
}

bool at_gamma_pole(Complex z, int* m) {
  if (std::fabs(z.imag()) > kPoleTolerance) return false;
  double x = z.real();
  if (x > kPoleTolerance) return false;
  double n = std::round(x);
  if (std::fabs(x - n) > kPoleTolerance) return false;
  if (m) *m = static_cast<int>(-n);
  return true;
}

Complex log_gamma(Complex z) {
  checked(z);
  if (at_gamma_pole(z)) throw PoleError("log_gamma: pole at " + describe(z));
  if (z.imag() == 0.0) {
    int sign = 1;
    double v = lgamma_signed(z.real(), &sign);
    double im = z.real() < 0 ? kPi * std::ceil(-z.real()) : 0.0;
    return {v, im};
  }
  // lnΓ(z) = lnΓ(z+N) - Σ Log(z+k); each Log has its cut inside (-∞,0],
  // so the sum stays on the principal branch.
  Complex w = z;
  double mag = 1.0, logmag = 0.0, args = 0.0;
  while (w.real() < 0.5 || std::abs(w) < 15.0) {
    mag *= std::abs(w);
    args += std::arg(w);
    if (mag > 1e250 || mag < 1e-250) {
      logmag += std::log(mag);
      mag = 1.0;
    }
    w += 1.0;
  }
  logmag += std::log(mag);
  return stirling(w) - Complex(logmag, args);
}

namespace {

// Bernoulli polynomials B_2..B_5
Complex bern2(Complex a) { return a * a - a + 1.0 / 6.0; }
Complex bern3(Complex a) { return a * (a * (a - 1.5) + 0.5); }
Complex bern4(Complex a) { return a * a * (a * (a - 2.0) + 1.0) - 1.0 / 30.0; }
Complex bern5(Complex a) { return a * (a * a * (a * (a - 2.5) + 5.0 / 3.0) - 1.0 / 6.0); }

}  // namespace

Complex log_gamma_ratio(Complex z, Complex a, Complex b) {
  double scale = 1.0 + std::abs(a) + std::abs(b);
  if (std::abs(z) < 1e3 * scale * scale || z.real() < -0.9 * std::abs(z))
    return log_gamma(z + a) - log_gamma(z + b);
  // lnΓ(z+a) ~ (z+a-1/2) ln z - z + ln√(2π) + Σ (-1)^{k+1} B_{k+1}(a) / (k(k+1) z^k)
  Complex inv = 1.0 / z;
  Complex series = inv * ((bern2(a) - bern2(b)) / 2.0 +
                          inv * (-(bern3(a) - bern3(b)) / 6.0 +
                                 inv * ((bern4(a) - bern4(b)) / 12.0 + inv * (-(bern5(a) - bern5(b)) / 20.0))));
  return (a - b) * std::log(z) + series;
}

Complex gamma(Complex z) {
  if (z.imag() == 0.0) return gamma_real(z.real());
  return std::exp(log_gamma(z));
}

Complex rgamma(Complex z) {
  if (at_gamma_pole(z)) return 0.0;
  if (z.imag() == 0.0) return rgamma_real(z.real());
  return std::exp(-log_gamma(z));
}

double gamma_real(double x) {
  checked(x);
  if (at_gamma_pole(x)) throw PoleError("gamma: pole at " + std::to_string(x));
  if (std::fabs(x) < 170.0) return std::tgamma(x);
  int sign = 1;
  double v = lgamma_signed(x, &sign);
  return sign * std::exp(v);
}

double rgamma_real(double x) {
  if (at_gamma_pole(x)) return 0.0;
  if (std::fabs(x) < 170.0) return 1.0 / std::tgamma(x);
  int sign = 1;
  double v = lgamma_signed(x, &sign);
  return sign * std::exp(-v);
}

namespace {

bool all_real(const std::vector<Complex>& v) {
  for (const auto& z : v)
    if (z.imag() != 0.0) return false;
  return true;
}

// Residue of Γ at -m is (-1)^m / m!; returns log m! and the sign.
double log_residue(int m, int* sign) {
  *sign = (m % 2 == 0) ? 1 : -1;
  return std::lgamma(static_cast<double>(m) + 1.0);
}

}  // namespace

Complex gamma_bracket(const GammaBracket& gb) {
  int num_poles = 0, den_poles = 0;
  for (const auto& z : gb.numerators) {
    checked(z);
    if (at_gamma_pole(z)) ++num_poles;
  }
  for (const auto& z : gb.denominators) {
    checked(z);
    if (at_gamma_pole(z)) ++den_poles;
  }
  if (den_poles > num_poles) return 0.0;
  if (num_poles > den_poles) throw PoleError("gamma_bracket: uncancelled numerator pole");

  if (all_real(gb.numerators) && all_real(gb.denominators)) {
    bool small = true;
    for (const auto& z : gb.numerators) small = small && std::fabs(z.real()) < 160.0;
    for (const auto& z : gb.denominators) small = small && std::fabs(z.real()) < 160.0;
    if (small) {
      ScaledProduct acc;
      for (const auto& z : gb.numerators) {
        int m = 0;
        if (at_gamma_pole(z, &m)) {
          acc.mul(((m % 2 == 0) ? 1.0 : -1.0) / std::tgamma(m + 1.0));
        } else {
          acc.mul(std::tgamma(z.real()));
        }
      }
      for (const auto& z : gb.denominators) {
        int m = 0;
        if (at_gamma_pole(z, &m)) {
          acc.div(((m % 2 == 0) ? 1.0 : -1.0) / std::tgamma(m + 1.0));
        } else {
          acc.div(std::tgamma(z.real()));
        }
      }
      return acc.value();
    }
  }

  Complex sum = 0.0;
  int sign = 1;
  for (const auto& z : gb.numerators) {
    int m = 0;
    if (at_gamma_pole(z, &m)) {
      int s = 1;
      sum -= log_residue(m, &s);
      sign *= s;
    } else {
      sum += log_gamma(z);
    }
  }
  for (const auto& z : gb.denominators) {
    int m = 0;
    if (at_gamma_pole(z, &m)) {
      int s = 1;
      sum += log_residue(m, &s);
      sign *= s;
    } else {
      sum -= log_gamma(z);
    }
  }
  return static_cast<double>(sign) * std::exp(sum);
}

Complex gamma_bracket(std::initializer_list<Complex> num, std::initializer_list<Complex> den) {
  return gamma_bracket(GammaBracket{std::vector<Complex>(num), std::vector<Complex>(den)});
}

double gamma_bracket_real(std::initializer_list<double> num, std::initializer_list<double> den) {
  GammaBracket gb;
  for (double x : num) gb.numerators.emplace_back(x, 0.0);
  for (double x : den) gb.denominators.emplace_back(x, 0.0);
  return gamma_bracket(gb).real();
}

double sin_ratio(double alpha, double theta) {
  double t = theta - std::floor(theta);
  if (t < 1e-12 || 1.0 - t < 1e-12) {
    double a = std::round(alpha);
    if (std::fabs(alpha - a) < 1e-12) return (static_cast<long>(a) % 2 == 0) ? 1.0 : -1.0;
    throw DomainError("sin_ratio: sin(theta*pi) = 0 with non-integer alpha");
  }
  return sinpi(alpha + t) / sinpi(t);
}

Complex pochhammer(Complex a, int k) {
  Complex r = 1.0;
  for (int j = 0; j < k; ++j) r *= a + static_cast<double>(j);
  return r;
}

double beta_fn(double a, double b) { return gamma_bracket_real({a, b}, {a + b}); }

}  // namespace pwh
