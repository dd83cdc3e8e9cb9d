#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwh/params.hpp"

namespace pwhcli {

enum class Command { eval, gram, norms, spectral, parseval, identities, mellin, boundary };
enum class Format { json, csv };

const char* command_name(Command c);

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  // lo, lo+step, ... up to hi; empty when the spec string is empty or lo > hi.
  std::vector<double> points() const;
};

// Parses "lo:hi:step". Throws ConfigError.
Grid parse_grid(const std::string& spec);

struct ConfigError {
  std::string what;
};

struct RunConfig {
  Command command = Command::eval;
  double alpha = 0.3;
  double beta = 0.5;
  double theta = 0.25;
  std::optional<double> tol;  // overrides every check tolerance when set
  Format format = Format::json;
  std::string output;  // empty: stdout

  // eval
  std::string function = "phi";  // phi | psi | xi
  int n = 0;
  double s = 1.0;
  double mu = 0.6;
  std::string grid = "0.05:3:0.05";

  // gram / norms / boundary
  int n_first = 0;
  int size = 6;

  // spectral / parseval / identities
  int N = 20;
  double s_max = 40.0;
  double h = 0.05;
  double nu = 0.2;
  bool closed_form = false;
  int dougall_terms = 200;

  // mellin
  int m = 0;
  int k = 1;

  // boundary
  double perturb = 1.0;  // factor applied to A_right before the gluing check

  pwh::Params params() const { return pwh::Params::make(alpha, beta, theta); }
};

}  // namespace pwhcli
