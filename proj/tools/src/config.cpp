#include "config.hpp"

#include <cmath>
#include <cstdlib>

namespace pwhcli {

const char* command_name(Command c) {
  switch (c) {
    case Command::eval: return "eval";
    case Command::gram: return "gram";
    case Command::norms: return "norms";
    case Command::spectral: return "spectral";
    case Command::parseval: return "parseval";
    case Command::identities: return "identities";
    case Command::mellin: return "mellin";
    case Command::boundary: return "boundary";
  }
  return "?";
}

namespace {

double parse_number(const std::string& s, const std::string& spec) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
    throw ConfigError{"grid: cannot parse '" + spec + "' as lo:hi:step"};
  return v;
}

}  // namespace

Grid parse_grid(const std::string& spec) {
  Grid g;
  if (spec.empty()) return g;
  auto c1 = spec.find(':');
  auto c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ConfigError{"grid: expected lo:hi:step, got '" + spec + "'"};
  g.lo = parse_number(spec.substr(0, c1), spec);
  g.hi = parse_number(spec.substr(c1 + 1, c2 - c1 - 1), spec);
  g.step = parse_number(spec.substr(c2 + 1), spec);
  if (!(g.step > 0.0)) throw ConfigError{"grid: step > 0 violated"};
  return g;
}

std::vector<double> Grid::points() const {
  std::vector<double> out;
  if (!(step > 0.0) || lo > hi) return out;
  // points as lo + k*step so the sequence does not drift
  auto count = static_cast<long>(std::floor((hi - lo) / step * (1.0 + 1e-12))) + 1;
  for (long k = 0; k < count; ++k) out.push_back(lo + static_cast<double>(k) * step);
  return out;
}

}  // namespace pwhcli
