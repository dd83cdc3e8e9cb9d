#include "pwh/spectral.hpp"

#include <cmath>
#include <limits>

#include "pwh/errors.hpp"
#include "pwh/parallel.hpp"

namespace pwh {

namespace {

Abscissa shifted(double x, double d) {
  // keep x - 1 exact for points close to 1
  if (std::fabs(x - 1.0) < 0.5) return Abscissa::from_offset((x - 1.0) + d);
  return Abscissa::at(x + d);
}

// log sinh(x), x > 0
double log_sinh(double x) {
  if (x < 20.0) return std::log(std::sinh(x));
  return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
}

// log(cos²a + sinh²b) = log |cos(a - ib)|²
double log_abs_cos_sq(double a, double b) {
  double c = std::cos(a);
  double sb = std::fabs(b);
  if (sb < 20.0) {
    double sh = std::sinh(sb);
    return std::log(c * c + sh * sh);
  }
  return 2.0 * log_sinh(sb) + std::log1p(c * c * std::exp(-2.0 * log_sinh(sb)));
}

}  // namespace

OperatorSample sample_derivatives(const RealFunction& f, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("apply_D: x must be positive and finite");
  if (x == 1.0) throw SingularPoint("apply_D: x = 1 is a singular point");
  OperatorSample smp;
  smp.x = x;
  smp.h = 0.004 * std::fmin(x, std::fabs(x - 1.0));
  const double h = smp.h;
  double fm2 = f(shifted(x, -2.0 * h)), fm1 = f(shifted(x, -h)), f0 = f(shifted(x, 0.0));
  double fp1 = f(shifted(x, h)), fp2 = f(shifted(x, 2.0 * h));
  smp.f = f0;
  smp.f1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  smp.f2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  return smp;
}

double apply_D(const Params& prm, const OperatorSample& smp) {
  const double x = smp.x;
  return x * (1.0 - x) * smp.f2 + (prm.beta + 1.0 - (prm.alpha + prm.beta + 2.0) * x) * smp.f1;
}

double apply_D(const Params& prm, const RealFunction& f, double x) {
  return apply_D(prm, sample_derivatives(f, x));
}

double lambda_of_p(const Params& prm, double p) { return -p * (p + prm.alpha + prm.beta + 1.0); }

Complex lambda_of_p(const Params& prm, Complex p) { return -p * (p + prm.alpha + prm.beta + 1.0); }

double continuum_threshold(const Params& prm) { return prm.h() * prm.h(); }

Complex p_of_lambda(const Params& prm, double lambda) {
  // λ = h² - (p+h)²
  const double h = prm.h();
  double d = h * h - lambda;
  if (d >= 0.0) return -h + std::sqrt(d);
  return Complex(-h, std::sqrt(-d));
}

double symmetry_defect(const Params& prm, const LocalExpansion& f, const LocalExpansion& g) {
  double left = f.B_left * g.A_left - f.A_left * g.B_left;
  double right = 0.0;
  if (!prm.theta_zero()) right = prm.sin_ratio() * (f.B_right * g.A_right - f.A_right * g.B_right);
  return prm.alpha * (left - right);
}

GluingDefect gluing_defect(const LocalExpansion& le, const Params& prm) {
  GluingDefect d;
  d.b_gap = le.B_left - le.B_right;
  if (prm.theta_zero()) d.a_gap = le.A_right * sinpi(prm.alpha);
  else d.a_gap = le.A_right * prm.sin_ratio() - le.A_left;
  d.scale = std::fmax(std::fmax(std::fabs(le.A_left), std::fabs(le.A_right)),
                      std::fmax(std::fabs(le.B_left), std::fabs(le.B_right)));
  return d;
}

bool boundary_check(const LocalExpansion& le, const Params& prm, double tol) {
  GluingDefect d = gluing_defect(le, prm);
  double scale = d.scale > 0.0 ? d.scale : 1.0;
  return std::fabs(d.b_gap) < tol * scale && std::fabs(d.a_gap) < tol * scale;
}

double plancherel_weight(const Params& prm, double s) {
  if (!(s >= kSFloor)) throw PoleError("plancherel_weight: s below the floor");
  const double a = prm.alpha, b = prm.beta, t = prm.theta;
  double pre = sinpi(t) * sinpi(t + a) / (2.0 * kPi * std::pow(gamma_real(b + 1.0), 2));
  if (pre == 0.0) return 0.0;
  Complex is(0.0, s);
  double lg = 2.0 * log_gamma(prm.h() - is).real() + 2.0 * log_gamma(prm.h_prime() - is).real();
  // 1/|Γ(2is)|² = 2s sinh(2πs)/π
  double lrg = std::log(2.0 * s / kPi) + log_sinh(2.0 * kPi * s);
  double lc = log_abs_cos_sq(kPi * (0.5 * (a + b) + t), kPi * s);
  return pre * std::exp(lg + lrg - lc);
}

std::vector<double> SpectralGrid::nodes() const {
  if (!(h > 0.0) || !(s_max >= h)) throw DomainError("SpectralGrid: 0 < h <= s_max required");
  auto k = static_cast<long>(std::llround(s_max / h));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  for (long i = 1; i <= k; ++i) out.push_back(static_cast<double>(i) * h);
  return out;
}

double weight_pole_distance(const Params& prm) {
  double d = std::numeric_limits<double>::infinity();
  for (double c : {prm.h(), prm.h_prime(), prm.h() + prm.theta, 1.0 - prm.h() - prm.theta}) {
    // poles at s = ±i(c+k), k >= 0
    double dc = c > 0.0 ? c : std::fabs(c - std::nearbyint(c));
    d = std::fmin(d, dc);
  }
  return d;
}

SpectralGrid alias_safe(const Params& prm, const SpectralGrid& grid) {
  double d = std::fmax(weight_pole_distance(prm), 1e-3);
  double h = std::fmin(grid.h, 2.0 * kPi * d / 32.0);
  if (h == grid.h) return grid;
  double k = std::ceil(grid.s_max / h);
  return SpectralGrid{grid.s_max / k, grid.s_max};
}

SpectralData spectral_frame(const Params& prm, int N, const SpectralGrid& grid) {
  SpectralData d;
  d.n_first = n_min(prm);
  for (int n = d.n_first; n <= N; ++n) {
    double p = prm.theta + n;
    d.p.push_back(p);
    d.norms.push_back(phi_norm_sq(prm, p));
  }
  d.grid = grid;
  if (!prm.theta_zero()) {
    d.s = grid.nodes();
    for (double s : d.s) d.weight.push_back(plancherel_weight(prm, s));
  }
  return d;
}

SpectralData forward_transform(const Params& prm, const FunctionHandle& f, int N, const SpectralGrid& grid,
                               const QuadratureSpec& spec) {
  SpectralData d = spectral_frame(prm, N, grid);
  d.coeffs.assign(d.p.size(), 0.0);
  d.F.assign(d.s.size(), 0.0);
  std::size_t nd = d.p.size();
  parallel_for(nd + d.s.size(), [&](std::size_t k) {
    if (k < nd) {
      PhiFunction phi(prm, SpectralIndex::make(prm, d.n_first + static_cast<int>(k)));
      d.coeffs[k] = hermitian_pairing(prm, f, handle(phi), spec).value;
    } else {
      PsiFunction psi(prm, d.s[k - nd]);
      d.F[k - nd] = hermitian_pairing(prm, f, handle(psi), spec).value;
    }
  });
  return d;
}

VProduct v_product(const SpectralData& a, const SpectralData& b) {
  if (a.p.size() != b.p.size() || a.s.size() != b.s.size() || a.n_first != b.n_first)
    throw DomainError("v_product: spectral data on different frames");
  VProduct v;
  CompensatedSum disc;
  for (std::size_t i = 0; i < a.p.size(); ++i) disc.add(a.coeffs[i] * b.coeffs[i] / a.norms[i]);
  v.discrete = disc.value();
  // trapezoid from s = 0, where w F G vanishes
  CompensatedSum cont;
  std::size_t k = a.s.size();
  for (std::size_t i = 0; i < k; ++i) {
    double term = a.weight[i] * a.F[i] * b.F[i];
    cont.add(i + 1 == k ? 0.5 * term : term);
  }
  v.continuous = cont.value() * a.grid.h;
  return v;
}

ParsevalResult parseval_check(const Params& prm, const FunctionHandle& f, const FunctionHandle& g, int N,
                              const SpectralGrid& grid, const QuadratureSpec& spec) {
  ParsevalResult r;
  r.hilbert = hermitian_pairing(prm, f, g, spec).value;
  SpectralData uf = forward_transform(prm, f, N, grid, spec);
  SpectralData ug = forward_transform(prm, g, N, grid, spec);
  r.v = v_product(uf, ug);
  r.residual = std::fabs(r.hilbert - r.v.value());
  return r;
}

double xi_coefficient(const Params& prm, double mu, double p) {
  const double a = prm.alpha, b = prm.beta;
  return gamma_bracket_real({2.0 * p + a + b + 2.0, mu + a + 1.0, mu + 1.0}, {p + a + b + mu + 2.0, mu + 1.0 - p});
}

double xi_continuous(const Params& prm, double mu, double s) {
  const double a = prm.alpha, b = prm.beta;
  double num = gamma_bracket_real({b + 1.0, mu + a + 1.0, mu + 1.0}, {});
  double lden = 2.0 * log_gamma(Complex(mu + 0.5 * (a + b + 3.0), -s)).real();
  return num * std::exp(-lden);
}

double xi_inner(const Params& prm, double mu, double nu) {
  const double a = prm.alpha, b = prm.beta;
  return gamma_bracket_real({b + 1.0, mu + nu + a + 1.0}, {mu + nu + a + b + 2.0});
}

SpectralData xi_transform(const Params& prm, double mu, int N, const SpectralGrid& grid) {
  SpectralData d = spectral_frame(prm, N, grid);
  for (double p : d.p) d.coeffs.push_back(xi_coefficient(prm, mu, p));
  for (double s : d.s) d.F.push_back(xi_continuous(prm, mu, s));
  return d;
}

}  // namespace pwh
