#include "pwh/hyp2f1.hpp"

#include <cmath>

#include "pwh/errors.hpp"

namespace pwh {

namespace {

constexpr int kMaxTerms = 1000000;
constexpr double kSeriesTol = 1e-16;
// Above this estimated cancellation factor a second method is tried.
constexpr double kCondRetry = 1e4;

Complex snap(Complex z) {
  int m = 0;
  if (at_gamma_pole(z, &m)) return Complex(-static_cast<double>(m), 0.0);
  return z;
}

HypParams snapped(const HypParams& hp) { return {snap(hp.a), snap(hp.b), snap(hp.c)}; }

bool is_real(const HypParams& hp) {
  return hp.a.imag() == 0.0 && hp.b.imag() == 0.0 && hp.c.imag() == 0.0;
}

template <class T>
SeriesSum run_series(T a, T b, T c, T z) {
  T term = 1.0, sum = 1.0;
  double abs_sum = 1.0;
  int small = 0;
  int k = 0;
  for (;; ++k) {
    if (k >= kMaxTerms) throw NoConvergence("f21_series: term limit exceeded");
    T num = (a + static_cast<double>(k)) * (b + static_cast<double>(k));
    if (num == T(0.0)) break;
    T cp = c + static_cast<double>(k);
    if (cp == T(0.0)) throw PoleError("f21_series: c is a pole of the series");
    T ratio = num / (cp * static_cast<double>(k + 1)) * z;
    term *= ratio;
    sum += term;
    double at = std::abs(term);
    abs_sum += at;
    if (at <= kSeriesTol * std::abs(sum) && std::abs(ratio) < 1.0) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
    if (!std::isfinite(abs_sum)) throw NoConvergence("f21_series: overflow");
  }
  return {Complex(sum), abs_sum, k + 1};
}

SeriesSum series_any(const HypParams& h, Complex z) {
  if (is_real(h) && z.imag() == 0.0)
    return run_series<double>(h.a.real(), h.b.real(), h.c.real(), z.real());
  return run_series<Complex>(h.a, h.b, h.c, z);
}

bool near_integer(Complex z) {
  return std::fabs(z.imag()) < kPoleTolerance &&
         std::fabs(z.real() - std::round(z.real())) < kPoleTolerance;
}

// w^e for real w > 0
Complex real_pow(double logw, Complex e) { return std::exp(e * logw); }

struct Weighted {
  Complex value;
  double cond;
};

// F at argument 1 inside the connection formulas: the Gauss sum.
SeriesSum inner_series(const HypParams& h, double w) {
  if (w < 1.0) return series_any(h, w);
  Complex v = gauss_sum(h);
  return {v, std::abs(v), 0};
}

Weighted kummer_at_1(const HypParams& h, double w) {
  Complex e = h.c - h.a - h.b;
  if (near_integer(e)) throw LogarithmicCase("connect_at_1: c - a - b is an integer");
  Complex g1 = gamma_bracket({h.c, e}, {h.c - h.a, h.c - h.b});
  Complex g2 = gamma_bracket({h.c, -e}, {h.a, h.b});
  SeriesSum s1{0.0, 0.0, 0}, s2{0.0, 0.0, 0};
  if (g1 != 0.0) s1 = inner_series({h.a, h.b, 1.0 - e}, w);
  Complex p2 = 0.0;
  if (g2 != 0.0) {
    s2 = inner_series({h.c - h.a, h.c - h.b, 1.0 + e}, w);
    p2 = g2 * real_pow(std::log(w), e);
  }
  Complex v = g1 * s1.value + p2 * s2.value;
  double mag = std::abs(g1) * s1.abs_sum + std::abs(p2) * s2.abs_sum;
  return {v, v == 0.0 ? 1.0 : mag / std::abs(v)};
}

// F[a,b;c;1/x] = x^a Γ[c,c-a-b;c-a,c-b] F[a,a+1-c;a+b+1-c;1-x]
//             + x^a (x-1)^{c-a-b} Γ[c,a+b-c;a,b] F[c-b,1-b;c+1-a-b;1-x]
Weighted kummer_inverse(const HypParams& h, const Abscissa& pt) {
  Complex e = h.c - h.a - h.b;
  if (near_integer(e)) throw LogarithmicCase("connect_1_over_x: c - a - b is an integer");
  double logx = std::log1p(pt.xm1);
  Complex xa = std::exp(h.a * logx);
  Complex g1 = gamma_bracket({h.c, e}, {h.c - h.a, h.c - h.b});
  Complex g2 = gamma_bracket({h.c, -e}, {h.a, h.b});
  double y = -pt.xm1;
  SeriesSum s1{0.0, 0.0, 0}, s2{0.0, 0.0, 0};
  Complex p1 = g1 * xa, p2 = 0.0;
  if (g1 != 0.0) s1 = series_any({h.a, h.a + 1.0 - h.c, 1.0 - e}, y);
  if (g2 != 0.0) {
    s2 = series_any({h.c - h.b, 1.0 - h.b, 1.0 + e}, y);
    p2 = g2 * xa * real_pow(std::log(pt.xm1), e);
  }
  Complex v = p1 * s1.value + p2 * s2.value;
  double mag = std::abs(p1) * s1.abs_sum + std::abs(p2) * s2.abs_sum;
  return {v, v == 0.0 ? 1.0 : mag / std::abs(v)};
}

double cond_of(const SeriesSum& s) {
  double m = std::abs(s.value);
  return m == 0.0 ? 1.0 : s.abs_sum / m;
}

}  // namespace

bool is_terminating(const HypParams& hp, int* degree) {
  int m = 0;
  int best = -1;
  if (at_gamma_pole(hp.a, &m)) best = m;
  if (at_gamma_pole(hp.b, &m) && (best < 0 || m < best)) best = m;
  if (best < 0) return false;
  if (degree) *degree = best;
  return true;
}

SeriesSum f21_series_sum(const HypParams& hp, Complex x) {
  checked(x);
  HypParams h = snapped(hp);
  if (!is_terminating(h) && std::abs(x) >= 1.0)
    throw DomainError("f21_series: |x| >= 1 for a non-terminating series");
  return series_any(h, x);
}

Complex f21_series(const HypParams& hp, Complex x) { return f21_series_sum(hp, x).value; }

Complex euler_transform(const HypParams& hp, Complex x) {
  HypParams t{hp.c - hp.a, hp.c - hp.b, hp.c};
  Complex e = hp.c - hp.a - hp.b;
  if (x.imag() == 0.0 && x.real() < 1.0) {
    Abscissa pt = Abscissa::at(x.real());
    return real_pow(std::log1p(-x.real()), e) * f21_at(t, pt);
  }
  return std::pow(1.0 - x, e) * f21_series(t, x);
}

Complex connect_at_1(const HypParams& hp, Complex z) { return connect_at_1_offset(hp, 1.0 - z); }

Complex connect_at_1_offset(const HypParams& hp, Complex w) {
  HypParams h = snapped(hp);
  // a polynomial needs no connection; at z = 0 both w-series sit on their circle of convergence
  if (is_terminating(h)) return series_any(h, 1.0 - w).value;
  if (w == 1.0) return 1.0;
  if (w.imag() == 0.0 && w.real() > 0.0 && w.real() < 1.0) return kummer_at_1(h, w.real()).value;
  if (std::abs(w) >= 1.0) throw DomainError("connect_at_1: |1 - z| >= 1");
  Complex e = h.c - h.a - h.b;
  if (near_integer(e)) throw LogarithmicCase("connect_at_1: c - a - b is an integer");
  Complex g1 = gamma_bracket({h.c, e}, {h.c - h.a, h.c - h.b});
  Complex g2 = gamma_bracket({h.c, -e}, {h.a, h.b});
  Complex v = 0.0;
  if (g1 != 0.0) v += g1 * series_any({h.a, h.b, 1.0 - e}, w).value;
  if (g2 != 0.0) v += g2 * std::pow(w, e) * series_any({h.c - h.a, h.c - h.b, 1.0 + e}, w).value;
  return v;
}

Complex connect_1_over_x(const HypParams& hp, double x) {
  if (!(x > 1.0)) throw DomainError("connect_1_over_x: x must exceed 1");
  return connect_1_over_x(hp, Abscissa::at(x));
}

Complex connect_1_over_x(const HypParams& hp, const Abscissa& pt) {
  if (!(pt.xm1 > 0.0)) throw DomainError("connect_1_over_x: x must exceed 1");
  HypParams h = snapped(hp);
  // Outside |1 - x| < 0.5 the argument 1/x is small enough for the plain series.
  if (pt.xm1 >= 0.5 || is_terminating(h)) return series_any(h, pt.inv).value;
  return kummer_inverse(h, pt).value;
}

Complex gauss_sum(const HypParams& hp) {
  HypParams h = snapped(hp);
  if (is_terminating(h)) return series_any(h, 1.0).value;
  Complex e = h.c - h.a - h.b;
  if (!(e.real() > 0.0)) throw DomainError("gauss_sum: requires Re(c - a - b) > 0");
  return gamma_bracket({h.c, e}, {h.c - h.a, h.c - h.b});
}

Complex f21_at(const HypParams& hp, const Abscissa& pt) {
  HypParams h = snapped(hp);
  double z = pt.x;
  double w = pt.one_minus_x();
  if (!(w > 0.0)) throw DomainError("f21_at: requires x < 1");
  if (is_terminating(h) || std::fabs(z) <= 0.7) return series_any(h, z).value;
  if (z < -0.7) {
    // Pfaff: (1-z)^{-a} F[a, c-b; c; z/(z-1)]
    Abscissa q{-z / w, -1.0 / w, 0.0};
    q.inv = 1.0 / q.x;
    return real_pow(std::log(w), -h.a) * f21_at({h.a, h.c - h.b, h.c}, q);
  }
  Complex e = h.c - h.a - h.b;
  if (near_integer(e)) {
    if (w < 1e-6) throw LogarithmicCase("f21_at: c - a - b is an integer and x is too close to 1");
    return series_any(h, z).value;
  }
  Weighted k = kummer_at_1(h, w);
  if (k.cond <= kCondRetry || w < 1e-4) return k.value;
  SeriesSum s = series_any(h, z);
  return cond_of(s) < k.cond ? s.value : k.value;
}

Complex f21_at_inverse(const HypParams& hp, const Abscissa& pt) {
  HypParams h = snapped(hp);
  double t = pt.inv;
  if (!(pt.xm1 > 0.0)) throw DomainError("f21_at_inverse: requires x > 1");
  if (is_terminating(h) || t <= 0.7) return series_any(h, t).value;
  Complex e = h.c - h.a - h.b;
  if (near_integer(e)) {
    if (pt.xm1 < 1e-6) throw LogarithmicCase("f21_at_inverse: c - a - b is an integer and x is too close to 1");
    return series_any(h, t).value;
  }
  Weighted k = kummer_inverse(h, pt);
  if (k.cond <= kCondRetry || pt.xm1 < 1e-4) return k.value;
  SeriesSum s = series_any(h, t);
  return cond_of(s) < k.cond ? s.value : k.value;
}

Complex f21_eval(const HypParams& hp, double x) {
  checked(x);
  HypParams h = snapped(hp);
  if (x < 1.0) return f21_at(h, Abscissa::at(x));
  if (x == 1.0) return gauss_sum(h);
  if (is_terminating(h)) return series_any(h, x).value;
  // F(x - i0) = Γ[c,b-a;b,c-a] (-x)^{-a} F[a,a-c+1;a-b+1;1/x] + (a <-> b),
  // with (-x)^{-a} = x^{-a} e^{-iπa} on this side of the cut.
  Complex d = h.b - h.a;
  if (near_integer(d)) throw LogarithmicCase("f21_eval: a - b is an integer for x > 1");
  double logx = std::log(x);
  Abscissa inv = Abscissa::at(1.0 / x);
  inv.xm1 = -(x - 1.0) / x;
  Complex ipi(0.0, kPi);
  Complex t1 = gamma_bracket({h.c, d}, {h.b, h.c - h.a}) * std::exp(-h.a * (logx + ipi)) *
               f21_at({h.a, h.a - h.c + 1.0, 1.0 - d}, inv);
  Complex t2 = gamma_bracket({h.c, -d}, {h.a, h.c - h.b}) * std::exp(-h.b * (logx + ipi)) *
               f21_at({h.b, h.b - h.c + 1.0, 1.0 + d}, inv);
  return t1 + t2;
}

}  // namespace pwh
