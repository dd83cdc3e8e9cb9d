#include "commands.hpp"

#include <cmath>
#include <string>

#include "pwh/errors.hpp"
#include "pwh/identities.hpp"
#include "pwh/mellin_barnes.hpp"
#include "pwh/ortho.hpp"
#include "pwh/quadrature.hpp"
#include "pwh/spectral.hpp"

namespace pwhcli {

using namespace pwh;

namespace {

std::string label(const std::string& base, int n) { return base + " n=" + std::to_string(n); }

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double tol_or(const RunConfig& cfg, double dflt) { return cfg.tol ? *cfg.tol : dflt; }

Check make_check(std::string name, double lhs, double rhs, double tol, double scale = 0.0) {
  Check c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  double d = std::fabs(lhs - rhs);
  c.residual = scale > 0.0 ? d / scale : d;
  c.tol = tol;
  return c;
}

bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.pass()) return false;
  return true;
}

Outcome suite_outcome(const std::string& name, const std::vector<Check>& cs) {
  Outcome o;
  o.results.push_back(suite_json(name, cs));
  o.table = suite_table(cs);
  o.failed = !all_pass(cs);
  return o;
}

// ---------------------------------------------------------------- eval

Outcome cmd_eval(const RunConfig& cfg) {
  Params prm = cfg.params();
  Grid grid = parse_grid(cfg.grid);
  std::function<double(double)> f;
  if (cfg.function == "phi") {
    auto phi = std::make_shared<PhiFunction>(prm, SpectralIndex::make(prm, cfg.n));
    f = [phi](double x) { return (*phi)(x); };
  } else if (cfg.function == "psi") {
    if (!(std::fabs(cfg.s) >= kSFloor)) throw DomainError("eval: |s| >= 1e-6 required for psi");
    auto psi = std::make_shared<PsiFunction>(prm, cfg.s);
    f = [psi](double x) { return (*psi)(x); };
  } else if (cfg.function == "xi") {
    double mu = cfg.mu;
    f = [mu](double x) { return xi_mu(mu, x); };
  } else {
    throw ConfigError{"eval: function must be phi, psi or xi"};
  }
  Outcome o;
  o.table.columns = {"x", "value", "status"};
  for (double x : grid.points()) {
    try {
      if (!(x > 0.0)) throw DomainError("x must be positive");
      o.table.add({x, f(x), std::string("ok")});
    } catch (const Error& e) {
      o.table.add({x, std::monostate{}, std::string(e.what())});
    }
  }
  o.results = o.table.to_json();
  return o;
}

// ---------------------------------------------------------------- gram, norms

Outcome cmd_gram(const RunConfig& cfg) {
  Params prm = cfg.params();
  if (cfg.size < 1) throw ConfigError{"gram: size >= 1 required"};
  GramMatrix g = gram_matrix(prm, cfg.n_first, cfg.size);
  const int sz = g.size;

  Json matrix = Json::array(), errors = Json::array(), closed = Json::array();
  Outcome o;
  o.table.columns = {"m", "n", "value", "est_error", "closed"};
  std::vector<Check> checks;
  double worst = 0.0;
  for (int i = 0; i < sz; ++i) {
    Json row = Json::array(), erow = Json::array();
    double p = prm.theta + cfg.n_first + i;
    double nc = phi_norm_sq(prm, p);
    closed.push_back(nc);
    for (int j = 0; j < sz; ++j) {
      row.push_back(g.at(i, j));
      erow.push_back(g.errors[static_cast<std::size_t>(i * sz + j)]);
      Cell cc = i == j ? Cell{nc} : Cell{};
      o.table.add({static_cast<long>(cfg.n_first + i), static_cast<long>(cfg.n_first + j), g.at(i, j),
                   g.errors[static_cast<std::size_t>(i * sz + j)], cc});
    }
    matrix.push_back(row);
    errors.push_back(erow);
  }
  for (int i = 0; i < sz; ++i) {
    int n = cfg.n_first + i;
    checks.push_back(make_check(label("norm", n), g.at(i, i), phi_norm_sq(prm, prm.theta + n), tol_or(cfg, 1e-8),
                                std::fabs(phi_norm_sq(prm, prm.theta + n))));
    if (prm.theta_zero() && n >= 0) {
      double c = theta_zero_constant(n, prm.alpha, prm.beta);
      double jac = c * c * std::pow(2.0, -(prm.alpha + prm.beta + 1.0)) * jacobi_norm_sq(n, prm.alpha, prm.beta);
      checks.push_back(make_check(label("jacobi norm", n), g.at(i, i), jac, tol_or(cfg, 1e-8), std::fabs(jac)));
    }
    for (int j = i + 1; j < sz; ++j) {
      double scale = std::sqrt(std::fabs(g.at(i, i) * g.at(j, j)));
      worst = std::fmax(worst, std::fabs(g.at(i, j)) / scale);
      checks.push_back(make_check("offdiag m=" + std::to_string(n) + " n=" + std::to_string(cfg.n_first + j),
                                  g.at(i, j), 0.0, tol_or(cfg, 1e-7), scale));
    }
  }
  Json summary = Json::object();
  summary["n_first"] = cfg.n_first;
  summary["size"] = sz;
  summary["matrix"] = matrix;
  summary["est_error"] = errors;
  summary["closed_diagonal"] = closed;
  summary["max_offdiag_ratio"] = worst;
  o.results.push_back(summary);
  o.results.push_back(suite_json("gram", checks));
  o.failed = !all_pass(checks);
  return o;
}

Outcome cmd_norms(const RunConfig& cfg) {
  Params prm = cfg.params();
  if (cfg.size < 1) throw ConfigError{"norms: size >= 1 required"};
  Outcome o;
  o.table.columns = {"n", "p", "closed", "numeric", "est_error", "rel_error", "jacobi"};
  const double tol = tol_or(cfg, 1e-8);
  for (int i = 0; i < cfg.size; ++i) {
    int n = cfg.n_first + i;
    PhiFunction phi(prm, SpectralIndex::make(prm, n));
    PairingResult r = bilinear_pairing(prm, handle(phi), handle(phi));
    double closed = phi_norm_sq(prm, phi.p());
    double rel = std::fabs(r.value - closed) / std::fabs(closed);
    Cell jac;
    if (prm.theta_zero() && n >= 0) {
      double c = theta_zero_constant(n, prm.alpha, prm.beta);
      jac = c * c * std::pow(2.0, -(prm.alpha + prm.beta + 1.0)) * jacobi_norm_sq(n, prm.alpha, prm.beta);
    }
    o.table.add({static_cast<long>(n), phi.p(), closed, r.value, r.est_error + r.tail_bound, rel, jac});
    if (!(rel < tol)) o.failed = true;
  }
  o.results = o.table.to_json();
  return o;
}

// ---------------------------------------------------------------- spectral

Outcome cmd_spectral(const RunConfig& cfg) {
  Params prm = cfg.params();
  SpectralGrid grid{cfg.h, cfg.s_max};
  SpectralData d;
  if (cfg.function == "xi") {
    if (!(cfg.mu > -0.5)) throw DomainError("spectral: mu > -1/2 violated");
    d = cfg.closed_form ? xi_transform(prm, cfg.mu, cfg.N, grid) : forward_transform(prm, xi_handle(cfg.mu), cfg.N, grid);
  } else if (cfg.function == "phi") {
    PhiFunction phi(prm, SpectralIndex::make(prm, cfg.n));
    d = forward_transform(prm, handle(phi), cfg.N, grid);
  } else {
    throw ConfigError{"spectral: function must be xi or phi"};
  }

  const double thr = continuum_threshold(prm);
  double max_disc = -INFINITY, min_cont = INFINITY;
  Outcome o;
  o.table.columns = {"kind", "n", "p", "s", "lambda", "value", "norm", "weight"};
  for (std::size_t i = 0; i < d.p.size(); ++i) {
    double lam = lambda_of_p(prm, d.p[i]);
    max_disc = std::fmax(max_disc, lam);
    o.table.add({std::string("discrete"), static_cast<long>(d.n_first + static_cast<int>(i)), d.p[i], Cell{}, lam,
                 d.coeffs[i], d.norms[i], Cell{}});
  }
  for (std::size_t i = 0; i < d.s.size(); ++i) {
    double lam = thr + d.s[i] * d.s[i];
    min_cont = std::fmin(min_cont, lam);
    o.table.add({std::string("continuous"), Cell{}, Cell{}, d.s[i], lam, d.F[i], Cell{}, d.weight[i]});
  }
  bool dich = max_disc < thr && (d.s.empty() || thr <= min_cont);
  Json summary = Json::object();
  summary["threshold"] = thr;
  summary["max_discrete_lambda"] = d.p.empty() ? Json(nullptr) : Json(max_disc);
  summary["min_continuous_lambda"] = d.s.empty() ? Json(nullptr) : Json(min_cont);
  summary["dichotomy"] = dich;
  o.results.push_back(summary);
  o.results.push_back(o.table.to_json());
  o.failed = !dich;
  return o;
}

// ---------------------------------------------------------------- suites

Outcome cmd_parseval(const RunConfig& cfg) {
  Params prm = cfg.params();
  std::vector<Check> cs;
  SpectralGrid grid{cfg.h, cfg.s_max}, grid2{cfg.h, 2.0 * cfg.s_max};
  if (!(cfg.mu > -0.5) || !(cfg.nu > -0.5)) throw DomainError("parseval: mu, nu > -1/2 violated");

  const std::string mu = fmt_short(cfg.mu), nu = fmt_short(cfg.nu);
  ParsevalResult r = parseval_check(prm, xi_handle(cfg.mu), xi_handle(cfg.mu), cfg.N, grid);
  cs.push_back(make_check("<xi_" + mu + ",xi_" + mu + "> vs [U xi, U xi]", r.hilbert, r.v.value(), tol_or(cfg, 1e-4)));
  ParsevalResult r2 = parseval_check(prm, xi_handle(cfg.mu), xi_handle(cfg.mu), 2 * cfg.N, grid2);
  Check dbl;
  dbl.name = "residual after doubling N and S_max";
  dbl.lhs = r2.residual;
  dbl.rhs = r.residual;
  dbl.residual = r.residual > 0.0 ? r2.residual / r.residual : 0.0;
  dbl.tol = 1.0;
  cs.push_back(dbl);

  VProduct vc = v_product(xi_transform(prm, cfg.mu, cfg.N, grid), xi_transform(prm, cfg.nu, cfg.N, grid));
  cs.push_back(make_check("<xi_" + mu + ",xi_" + nu + "> closed-form transforms", xi_inner(prm, cfg.mu, cfg.nu),
                          vc.value(), tol_or(cfg, 1e-4)));

  // ξ_{θ-1}: discrete block is zero when n = -1 is outside the spectrum
  double m1 = prm.theta - 1.0;
  if (m1 > -0.5 && n_min(prm) >= 0) {
    VProduct vm = v_product(xi_transform(prm, m1, cfg.N, grid), xi_transform(prm, cfg.nu, cfg.N, grid));
    cs.push_back(make_check("discrete part for xi_{theta-1}", vm.discrete, 0.0, tol_or(cfg, 1e-12)));
  }
  return suite_outcome("parseval", cs);
}

Outcome cmd_identities(const RunConfig& cfg) {
  Params prm = cfg.params();
  std::vector<Check> cs;
  BetaIdentityParams bp{prm, cfg.mu, cfg.nu};
  BetaOptions opt;
  opt.N = cfg.N;
  opt.s_max = cfg.s_max;
  opt.h = cfg.h;
  BetaLhs bl = beta_lhs(bp, opt);
  double rhs = beta_rhs(bp);
  cs.push_back(make_check("beta integral mu=" + fmt_short(cfg.mu) + " nu=" + fmt_short(cfg.nu), bl.value(), rhs,
                          tol_or(cfg, 1e-5)));

  IdentityCheck dbw = dbw_integral_check(0.3, 0.4, 0.5, 2.0);
  cs.push_back(make_check("De Branges-Wilson (0.3,0.4,0.5; 2)", dbw.numeric, dbw.closed, tol_or(cfg, 1e-6)));
  IdentityCheck dg = dougall_check(0.2, 1.3, 1.4, 1.5, cfg.dougall_terms);
  cs.push_back(make_check("Dougall (0.2; 1.3,1.4,1.5) N=" + std::to_string(cfg.dougall_terms), dg.numeric, dg.closed,
                          tol_or(cfg, 1e-8)));

  Params p0 = Params::make(prm.alpha, prm.beta, 0.0);
  // terms decay slowly when a1+..+a4 is close to 3; the n^{-k} tail is ~1e-11 here
  IdentityCheck df = dougall_from_beta({p0, cfg.mu, cfg.nu}, std::max(cfg.dougall_terms, 20000));
  cs.push_back(make_check("beta at theta=0 as a Dougall sum", df.numeric, df.closed, tol_or(cfg, 1e-8),
                          std::fabs(df.closed)));
  if (!prm.theta_zero() && 1.0 - prm.h() - prm.theta > 0.0) {
    IdentityCheck dw = dbw_from_beta(prm, cfg.nu);
    cs.push_back(make_check("beta at mu=theta-1 as De Branges-Wilson", dw.numeric, dw.closed, tol_or(cfg, 1e-8),
                            std::fabs(dw.closed)));
  }
  return suite_outcome("identities", cs);
}

Outcome cmd_mellin(const RunConfig& cfg) {
  Params prm = cfg.params();
  std::vector<Check> cs;
  const double tol = tol_or(cfg, 1e-7);
  for (double x : {0.5, 2.0}) {
    Complex n = barnes_main_integral(0.7, 0.4, 1.6, x);
    Complex c = main_integral_closed_form(0.7, 0.4, 1.6, x);
    Check ch = make_check("Barnes main integral (0.7,0.4,1.6) x=" + fmt_short(x), n.real(), c.real(), tol);
    ch.residual = std::abs(n - c);
    cs.push_back(ch);
  }
  {
    Complex n = barnes_delta(1.0, 1.0, 2.0, 2.0);
    Complex c = barnes_delta_closed_form(1.0, 1.0, 2.0, 2.0);
    Check ch = make_check("Barnes delta (1,1,2,2)", n.real(), c.real(), tol);
    ch.residual = std::abs(n - c);
    cs.push_back(ch);
  }
  double p = prm.theta + cfg.m, q = prm.theta + cfg.k;
  std::string pq = " m=" + std::to_string(cfg.m) + " n=" + std::to_string(cfg.k);
  StripReport sr = strip_report(prm, p, q);
  if (!sr.convolution_applicable) throw StripViolation("convolution: " + sr.failure());
  ConvolutionResult cr = convolution_check(prm, p, q);
  cs.push_back(make_check("convolution theorem" + pq, cr.lhs, cr.rhs, tol_or(cfg, 1e-6)));
  double u = convolution_prefactor(prm, p, q);
  cs.push_back(make_check("contour integral vs delta closed form" + pq, u * cr.rhs, orthogonality_rhs(prm, p, q),
                          tol_or(cfg, 1e-8)));
  return suite_outcome("mellin", cs);
}

void gluing_checks(std::vector<Check>& cs, const std::string& name, LocalExpansion le, const Params& prm,
                   double perturb, double tol) {
  le.A_right *= perturb;
  GluingDefect d = gluing_defect(le, prm);
  double scale = d.scale > 0.0 ? d.scale : 1.0;
  double lhs = prm.theta_zero() ? 0.0 : le.A_left;
  double rhs = prm.theta_zero() ? d.a_gap : le.A_left + d.a_gap;
  Check a = make_check(name + " A gluing", lhs, rhs, tol);
  a.residual = std::fabs(d.a_gap) / scale;
  cs.push_back(a);
  Check b = make_check(name + " B gluing", le.B_left, le.B_right, tol);
  b.residual = std::fabs(d.b_gap) / scale;
  cs.push_back(b);
}

Outcome cmd_boundary(const RunConfig& cfg) {
  Params prm = cfg.params();
  std::vector<Check> cs;
  const double tol = tol_or(cfg, 1e-9);
  int n0 = std::max(cfg.n_first, n_min(prm));
  std::vector<LocalExpansion> locals;
  for (int n = n0; n < cfg.n_first + cfg.size; ++n) {
    LocalExpansion le = phi_p_local(prm, SpectralIndex::make(prm, n));
    gluing_checks(cs, label("Phi", n), le, prm, cfg.perturb, tol);
    le.A_right *= cfg.perturb;
    locals.push_back(le);
  }
  if (!prm.theta_zero()) {
    for (double s : {0.3, 1.0, 3.0}) gluing_checks(cs, "Psi s=" + fmt_short(s), psi_s_local(prm, s), prm, cfg.perturb, tol);
  }
  for (std::size_t i = 0; i + 1 < locals.size(); ++i) {
    int n = n0 + static_cast<int>(i);
    const LocalExpansion &f = locals[i], &g = locals[i + 1];
    // size of the individual boundary products
    double scale = std::fabs(prm.alpha) * (std::fabs(f.B_left * g.A_left) + std::fabs(f.A_left * g.B_left));
    cs.push_back(make_check("symmetry defect m=" + std::to_string(n) + " n=" + std::to_string(n + 1),
                            symmetry_defect(prm, f, g), 0.0, tol_or(cfg, 1e-7), scale));
  }
  // off the lattice p - θ ∈ ℤ the gluing fails by a known amount
  if (!prm.theta_zero()) {
    double p = prm.theta + n0 + 0.5;
    LocalExpansion le = PhiFunction(prm, SpectralIndex{n0, p}).local();
    double predicted = le.A_right * sinpi(prm.alpha) * sinpi(p - prm.theta) / (sinpi(p) * sinpi(prm.theta));
    GluingDefect d = gluing_defect(le, prm);
    cs.push_back(make_check("off-lattice p=theta+" + fmt_short(n0 + 0.5) + " A defect vs prediction", d.a_gap,
                            predicted, tol_or(cfg, 1e-6), std::fabs(predicted)));
  }
  return suite_outcome("boundary", cs);
}

}  // namespace

Outcome run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::eval: return cmd_eval(cfg);
    case Command::gram: return cmd_gram(cfg);
    case Command::norms: return cmd_norms(cfg);
    case Command::spectral: return cmd_spectral(cfg);
    case Command::parseval: return cmd_parseval(cfg);
    case Command::identities: return cmd_identities(cfg);
    case Command::mellin: return cmd_mellin(cfg);
    case Command::boundary: return cmd_boundary(cfg);
  }
  throw ConfigError{"unknown command"};
}

}  // namespace pwhcli
