// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "pwh/errors.hpp"
#include "pwh/identities.hpp"
#include "pwh/mellin_barnes.hpp"
#include "pwh/ortho.hpp"
#include "pwh/quadrature.hpp"
#include "pwh/spectral.hpp"

using namespace pwh;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  // records the worst ratio residual/tolerance seen
  double worst = 0.0;
  std::string worst_where;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
  void bound(double residual, double tol, const std::string& where) {
    double r = residual / tol;
    if (!(r < 1.0)) require(false, where + ": " + std::to_string(residual) + " >= " + std::to_string(tol));
    if (r > worst || std::isnan(r)) {
      worst = r;
      worst_where = where;
    }
  }
};

const std::vector<Params>& points() {
  static const std::vector<Params> p{Params::make(0.3, 0.5, 0.25), Params::make(-0.4, 0.7, 0.6),
                                     Params::make(0.5, -0.3, 0.1)};
  return p;
}

std::string tag(const Params& prm) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%g,%g,%g)", prm.alpha, prm.beta, prm.theta);
  return buf;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

Outcome orthogonality() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (const Params& prm : points()) {
    GramMatrix g = gram_matrix(prm, n_min(prm), 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (i != j)
          o.bound(std::fabs(g.at(i, j)), 1e-7 * std::sqrt(std::fabs(g.at(i, i) * g.at(j, j))),
                  tag(prm) + " G[" + std::to_string(i) + "," + std::to_string(j) + "]");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "worst %.2g of tolerance at %s, Gram time %.2f s", o.worst, o.worst_where.c_str(), secs);
    o.detail = buf;
  }
  return o;
}

Outcome norms() {
  Outcome o;
  for (const Params& prm : points()) {
    int n0 = n_min(prm);
    GramMatrix g = gram_matrix(prm, n0, 6);
    for (int i = 0; i < 6; ++i)
      o.bound(rel(g.at(i, i), phi_norm_sq(prm, prm.theta + n0 + i)), 1e-8,
              tag(prm) + " n=" + std::to_string(n0 + i));
  }
  return o;
}

Outcome theta_zero() {
  Outcome o;
  for (auto [a, b] : {std::pair{0.3, 0.5}, std::pair{-0.4, 0.7}, std::pair{0.5, -0.3}}) {
    Params prm = Params::make(a, b, 0.0);
    for (int n = 0; n <= 6; ++n) {
      PhiFunction f(prm, SpectralIndex::make(prm, n));
      double c = theta_zero_constant(n, a, b);
      for (int k = 1; k <= 20; ++k) {
        double x = k / 21.0;
        double ref = c * jacobi_eval(n, a, b, 2.0 * x - 1.0);
        o.bound(rel(f(x), ref), 1e-10, tag(prm) + " n=" + std::to_string(n) + " x=" + std::to_string(x));
      }
      for (double x : {1.0 + 1e-9, 1.01, 1.5, 3.0, 1e3})
        o.require(f(x) == 0.0, tag(prm) + " n=" + std::to_string(n) + " nonzero at x=" + std::to_string(x));
    }
  }
  return o;
}

Outcome eigen_equation() {
  Outcome o;
  const double xs[12] = {0.1, 0.25, 0.4, 0.6, 0.75, 0.9, 1.2, 1.5, 2.0, 3.0, 5.0, 10.0};
  for (const Params& prm : points()) {
    for (int n = n_min(prm); n <= 6; ++n) {
      PhiFunction f(prm, SpectralIndex::make(prm, n));
      RealFunction fn = [&f](const Abscissa& pt) { return f(pt); };
      double lam = lambda_of_p(prm, f.p());
      for (double x : xs) {
        double v = f(x);
        o.bound(std::fabs(apply_D(prm, fn, x) - lam * v), 1e-5 * (1.0 + std::fabs(v)),
                tag(prm) + " n=" + std::to_string(n) + " x=" + std::to_string(x));
      }
    }
  }
  return o;
}

Outcome gluing() {
  Outcome o;
  for (const Params& prm : points()) {
    for (int n = n_min(prm); n <= 6; ++n) {
      LocalExpansion le = phi_p_local(prm, SpectralIndex::make(prm, n));
      o.require(boundary_check(le, prm, 1e-9), tag(prm) + " Phi n=" + std::to_string(n) + " not glued");
    }
    for (double s : {0.3, 1.0, 4.0, 15.0})
      o.require(boundary_check(psi_s_local(prm, s), prm, 1e-9), tag(prm) + " Psi s=" + std::to_string(s) + " not glued");

    // off the lattice the A-gluing fails by A_r sin(απ) sin((p-θ)π)/(sin(pπ) sin(θπ))
    for (double shift : {0.5, 1.35}) {
      double p = prm.theta + shift;
      LocalExpansion le = PhiFunction(prm, SpectralIndex{0, p}).local();
      o.require(!boundary_check(le, prm, 1e-9), tag(prm) + " off-lattice p=" + std::to_string(p) + " passed");
      double predicted = le.A_right * sinpi(prm.alpha) * sinpi(p - prm.theta) / (sinpi(p) * sinpi(prm.theta));
      o.bound(rel(gluing_defect(le, prm).a_gap, predicted), 1e-6, tag(prm) + " off-lattice p=" + std::to_string(p));
    }

    // scaling A_right leaves the symmetry defect α r A_r^f B_r^g
    int n0 = n_min(prm);
    LocalExpansion f = phi_p_local(prm, SpectralIndex::make(prm, n0 + 1));
    LocalExpansion g = phi_p_local(prm, SpectralIndex::make(prm, n0 + 2));
    LocalExpansion f2 = f;
    f2.A_right *= 2.0;
    o.require(!boundary_check(f2, prm, 1e-9), tag(prm) + " perturbed data passed");
    double predicted = prm.alpha * prm.sin_ratio() * f.A_right * g.B_right;
    o.bound(rel(symmetry_defect(prm, f2, g), predicted), 1e-6, tag(prm) + " perturbed symmetry defect");
  }
  return o;
}

Outcome cross_integrals() {
  Outcome o;
  Params a = points()[0], b = points()[1];
  // three lattice pairs, two off-lattice
  for (auto [prm, p, q] : {std::tuple{a, 0.25, 1.25}, std::tuple{a, -0.75, 2.25}, std::tuple{b, -0.4, 1.6},
                           std::tuple{a, 0.25, 1.6}, std::tuple{b, 0.6, 1.1}}) {
    PhiFunction f(prm, SpectralIndex{0, p}), g(prm, SpectralIndex{0, q});
    std::string where = tag(prm) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
    o.bound(rel(cross_integral_X(prm, p, q), integral_left(prm, handle(f), handle(g)).value), 1e-8, where + " X");
    o.bound(rel(cross_integral_Y(prm, p, q), integral_right(prm, handle(f), handle(g)).value), 1e-8, where + " Y");
  }
  return o;
}

Outcome mellin_barnes() {
  Outcome o;
  for (double x : {0.5, 2.0}) {
    Complex c = main_integral_closed_form(0.7, 0.4, 1.6, x);
    o.bound(std::abs(barnes_main_integral(0.7, 0.4, 1.6, x) - c) / std::abs(c), 1e-7,
            "main integral x=" + std::to_string(x));
  }
  for (const Params& prm : points()) {
    for (int m : {0, 1}) {
      for (int n : {0, 1, 2}) {
        double p = prm.theta + m, q = prm.theta + n;
        std::string where = tag(prm) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
        ConvolutionResult r = convolution_check(prm, p, q);
        o.bound(r.residual, 1e-6, where + " convolution");
        if (m == n) continue;
        // the delta factor sin((q-p)π) kills the pairing
        double scale = std::sqrt(phi_norm_sq(prm, p) * phi_norm_sq(prm, q));
        o.bound(std::fabs(convolution_prefactor(prm, p, q) * r.rhs), 1e-8 * scale, where + " delta vanishing");
      }
    }
  }
  for (auto [a, b, c, d] : {std::tuple{1.0, 1.0, 2.0, 2.0}, std::tuple{0.7, 0.4, 1.3, 1.9}, std::tuple{0.35, 1.2, 0.8, 2.6}}) {
    Complex f = barnes_delta_closed_form(a, b, c, d);
    o.bound(std::abs(barnes_delta(a, b, c, d) - f) / std::abs(f), 1e-7, "delta closed form");
  }
  // c - a ∈ {0, -1, -2}
  for (auto [a, c] : {std::pair{0.6, 0.6}, std::pair{1.2, 0.2}, std::pair{2.3, 0.3}})
    o.bound(std::abs(barnes_delta(a, 0.7, c, 4.5)), 1e-8, "delta zero c-a=" + std::to_string(c - a));
  return o;
}

Outcome parseval() {
  Outcome o;
  Params prm = points()[0];
  ParsevalResult r1 = parseval_check(prm, xi_handle(0.6), xi_handle(0.6), 20, SpectralGrid{0.05, 40.0});
  ParsevalResult r2 = parseval_check(prm, xi_handle(0.6), xi_handle(0.6), 40, SpectralGrid{0.05, 80.0});
  o.bound(r1.residual, 1e-4, "N=20 S_max=40");
  o.require(r2.residual < r1.residual, "residual grew from " + std::to_string(r1.residual) + " to " +
                                           std::to_string(r2.residual));
  char buf[96];
  std::snprintf(buf, sizeof buf, "residual %.3g -> %.3g", r1.residual, r2.residual);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome beta_identity() {
  Outcome o;
  for (const Params& prm : {points()[0], points()[1]}) {
    for (double mu : {-0.2, 0.3, 1.0}) {
      for (double nu : {-0.2, 0.3, 1.0}) {
        BetaIdentityParams bp{prm, mu, nu};
        o.bound(rel(beta_lhs(bp).value(), beta_rhs(bp)), 1e-5,
                tag(prm) + " beta mu=" + std::to_string(mu) + " nu=" + std::to_string(nu));
      }
    }
  }
  o.bound(dbw_integral_check(0.3, 0.4, 0.5, 2.0).residual, 1e-6, "DBW");
  o.bound(dougall_check(0.2, 1.3, 1.4, 1.5, 200).residual, 1e-8, "Dougall");

  // μ = θ-1: every discrete term vanishes and the identity becomes DBW
  Params deg = Params::make(0.2, -0.6, 0.6);
  BetaIdentityParams bp{deg, deg.theta - 1.0, 0.3};
  BetaLhs l = beta_lhs(bp);
  o.require(l.discrete == 0.0 && l.discrete_tail == 0.0, "mu=theta-1 discrete sum " + std::to_string(l.discrete));
  o.bound(rel(l.value(), beta_rhs(bp)), 1e-5, "mu=theta-1 beta");
  IdentityCheck d = dbw_from_beta(deg, 0.3);
  o.bound(d.residual / std::fabs(d.closed), 1e-6, "mu=theta-1 DBW");

  // θ → 0: the integral block is O(θ) and the discrete block tends to the Dougall sum
  double prev = INFINITY;
  for (double t : {1e-2, 1e-3, 1e-4}) {
    BetaLhs lt = beta_lhs(BetaIdentityParams{Params::make(0.3, 0.5, t), 0.1, 0.2});
    double c = std::fabs(lt.continuous);
    o.require(c < prev && c < 0.5 * t, "theta=" + std::to_string(t) + " integral block " + std::to_string(c));
    prev = c;
  }
  for (auto [a, b] : {std::pair{0.3, 0.5}, std::pair{-0.4, 0.7}}) {
    IdentityCheck dz = dougall_from_beta(BetaIdentityParams{Params::make(a, b, 0.0), 0.1, 0.2}, 20000);
    o.bound(dz.residual / std::fabs(dz.closed), 1e-8, "theta=0 Dougall (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return o;
}

Outcome dichotomy() {
  Outcome o;
  for (const Params& prm : points()) {
    double thr = continuum_threshold(prm);
    double c = -0.5 * (prm.alpha + prm.beta + 1.0);
    double top = -INFINITY, bottom = INFINITY;
    for (int n = n_min(prm); n <= 200; ++n) top = std::fmax(top, lambda_of_p(prm, prm.theta + n));
    for (double s : SpectralGrid{0.05, 80.0}.nodes()) bottom = std::fmin(bottom, lambda_of_p(prm, Complex(c, s)).real());
    o.require(top < thr, tag(prm) + " discrete lambda " + std::to_string(top) + " >= threshold");
    o.require(bottom >= thr - 1e-12 * std::fmax(1.0, thr), tag(prm) + " continuous lambda below threshold");
  }
  if (o.pass) o.detail = "n_min <= n <= 200 and 0 < s <= 80 at three points";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"orthogonality", orthogonality},   {"norms", norms},
      {"theta=0 Jacobi", theta_zero},     {"eigen-equation", eigen_equation},
      {"boundary gluing", gluing},        {"cross-integrals", cross_integrals},
      {"Mellin/Barnes", mellin_barnes},   {"Parseval", parseval},
      {"beta integral", beta_identity},   {"spectrum dichotomy", dichotomy},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string info = o.detail;
    if (info.empty() && !o.worst_where.empty()) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "worst %.2g of tolerance at %s", o.worst, o.worst_where.c_str());
      info = buf;
    }
    std::printf("criterion %2zu %-20s %s  [%.1f s] %s\n", k + 1, criteria[k].first, o.pass ? "PASS" : "FAIL", secs,
                info.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
