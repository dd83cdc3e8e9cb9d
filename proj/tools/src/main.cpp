#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "pwh/errors.hpp"

#ifndef PWH_VERSION
#define PWH_VERSION "0.0.0"
#endif

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

void add_options(CLI::App& app, pwhcli::RunConfig& c) {
  auto* g = app.add_option_group("Parameters");
  g->add_option("--alpha", c.alpha, "alpha in (-1,1), nonzero")->capture_default_str();
  g->add_option("--beta", c.beta, "beta > -1")->capture_default_str();
  g->add_option("--theta", c.theta, "theta in [0,1)")->capture_default_str();
  g->add_option("--tol", c.tol, "override every check tolerance");

  auto* o = app.add_option_group("Output");
  o->add_option("--format", c.format, "json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, pwhcli::Format>{{"json", pwhcli::Format::json}, {"csv", pwhcli::Format::csv}}));
  o->add_option("-o,--output", c.output, "output file (default stdout)");

  auto* f = app.add_option_group("Functions");
  f->add_option("--function", c.function, "phi, psi or xi")->check(CLI::IsMember({"phi", "psi", "xi"}));
  f->add_flag_callback("--phi", [&c] { c.function = "phi"; }, "same as --function phi");
  f->add_flag_callback("--psi", [&c] { c.function = "psi"; }, "same as --function psi");
  f->add_flag_callback("--xi", [&c] { c.function = "xi"; }, "same as --function xi");
  f->add_option("--n", c.n, "index n of p = theta + n")->capture_default_str();
  f->add_option("--s", c.s, "continuous spectral parameter")->capture_default_str();
  f->add_option("--mu", c.mu, "exponent of xi_mu")->capture_default_str();
  f->add_option("--nu", c.nu, "second exponent for parseval/identities")->capture_default_str();
  f->add_option("--grid", c.grid, "sample grid lo:hi:step")->capture_default_str();

  auto* s = app.add_option_group("Spectral");
  s->add_option("--n-first", c.n_first, "first index of gram/norms/boundary")->capture_default_str();
  s->add_option("--size", c.size, "number of indices")->capture_default_str();
  s->add_option("--N", c.N, "discrete cutoff")->capture_default_str();
  s->add_option("--s-max", c.s_max, "continuous cutoff")->capture_default_str();
  s->add_option("--s-step", c.h, "continuous grid step")->capture_default_str();
  s->add_flag("--closed-form", c.closed_form, "xi transforms from closed forms");
  s->add_option("--dougall-terms", c.dougall_terms, "Dougall truncation |n| <= N")->capture_default_str();
  s->add_option("--m", c.m, "mellin: p = theta + m")->capture_default_str();
  s->add_option("--k", c.k, "mellin: q = theta + k")->capture_default_str();
  s->add_option("--perturb", c.perturb, "boundary: factor applied to A_right")->capture_default_str();
}

pwhcli::Json meta_json(const pwhcli::RunConfig& c) {
  pwhcli::Json m = pwhcli::Json::object();
  m["command"] = pwhcli::command_name(c.command);
  m["params"] = pwhcli::Json{{"alpha", c.alpha}, {"beta", c.beta}, {"theta", c.theta}};
  m["tol"] = c.tol ? pwhcli::Json(*c.tol) : pwhcli::Json(nullptr);
  m["version"] = PWH_VERSION;
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  pwhcli::RunConfig cfg;
  CLI::App app{"Piecewise hypergeometric orthogonal system: evaluation and verification suites", "pwh"};
  app.set_version_flag("--version", PWH_VERSION);
  app.set_config("--config", "", "key=value file; command line flags take precedence");
  app.require_subcommand(1, 1);
  add_options(app, cfg);

  const std::pair<const char*, pwhcli::Command> cmds[] = {
      {"eval", pwhcli::Command::eval},         {"gram", pwhcli::Command::gram},
      {"norms", pwhcli::Command::norms},       {"spectral", pwhcli::Command::spectral},
      {"parseval", pwhcli::Command::parseval}, {"identities", pwhcli::Command::identities},
      {"mellin", pwhcli::Command::mellin},     {"boundary", pwhcli::Command::boundary}};
  const char* help[] = {"sample Phi_p, Psi_s or xi_mu on a grid",
                        "Gram matrix of Phi_{theta+n} with closed-form diagonal",
                        "norms by quadrature against the closed form",
                        "spectral data (a(p), F(s), w(s)) of xi_mu or Phi_p",
                        "Parseval suite",
                        "beta integral, De Branges-Wilson and Dougall suite",
                        "Mellin-Barnes suite",
                        "gluing and symmetry suite at x = 1"};
  for (std::size_t i = 0; i < std::size(cmds); ++i) {
    auto* sub = app.add_subcommand(cmds[i].first, help[i]);
    sub->fallthrough();
    pwhcli::Command c = cmds[i].second;
    sub->parse_complete_callback([&cfg, c] { cfg.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  std::ostringstream body;
  int code = 0;
  try {
    pwhcli::Outcome out = pwhcli::run(cfg);
    if (cfg.format == pwhcli::Format::csv) {
      pwhcli::write_csv(body, out.table);
    } else {
      pwhcli::Json doc = pwhcli::Json::object();
      doc["meta"] = meta_json(cfg);
      doc["results"] = std::move(out.results);
      pwhcli::write_json(body, doc);
    }
    if (out.failed) code = kExitNumeric;
  } catch (const pwhcli::ConfigError& e) {
    std::cerr << "pwh: " << e.what << "\n";
    return kExitConfig;
  } catch (const pwh::DomainError& e) {
    std::cerr << "pwh: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pwh::StripViolation& e) {
    std::cerr << "pwh: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pwh::Error& e) {
    std::cerr << "pwh: " << e.what() << "\n";
    return kExitNumeric;
  }

  if (cfg.output.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      std::cerr << "pwh: cannot open " << cfg.output << "\n";
      return kExitConfig;
    }
    f << body.str();
  }
  return code;
}
