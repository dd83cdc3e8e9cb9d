#include "pwh/params.hpp"

#include <cmath>
#include <sstream>

#include "pwh/errors.hpp"
#include "pwh/special.hpp"

namespace pwh {

std::string Params::violation(double alpha, double beta, double theta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(theta))
    return "alpha, beta, theta must be finite";
  if (!(alpha > -1.0 && alpha < 1.0)) return "-1 < alpha < 1 violated";
  if (std::fabs(alpha) < 1e-12) return "alpha != 0 violated";
  if (!(beta > -1.0)) return "beta > -1 violated";
  if (!(theta >= 0.0 && theta < 1.0)) return "0 <= theta < 1 violated";
  if (theta > 0.0 && std::fabs(sinpi(alpha + theta)) < 1e-12)
    return "sin((alpha+theta)*pi) != 0 violated";
  return {};
}

Params Params::make(double alpha, double beta, double theta) {
  std::string v = violation(alpha, beta, theta);
  if (!v.empty()) throw DomainError("Params: " + v);
  return Params{alpha, beta, theta};
}

double Params::sin_ratio() const { return pwh::sin_ratio(alpha, theta); }

bool Params::positive() const { return theta > 0.0 && sin_ratio() > 0.0; }

bool Params::beta_degenerate() const {
  double r = std::round(beta);
  return r >= 0.0 && std::fabs(beta - r) < kPoleTolerance;
}

int n_min(const Params& prm) {
  int n = static_cast<int>(std::floor(-(prm.alpha + prm.beta + 1.0) * 0.5 - prm.theta)) - 1;
  for (;; ++n) {
    double p = prm.theta + n;
    if (!(2.0 * p + prm.alpha + prm.beta + 1.0 > 0.0)) continue;
    if (std::fabs(1.0 + p + prm.alpha) < kPoleTolerance) continue;
    return n;
  }
}

SpectralIndex SpectralIndex::make(const Params& prm, int n) {
  double p = prm.theta + n;
  if (!(2.0 * p + prm.alpha + prm.beta + 1.0 > 0.0)) {
    std::ostringstream os;
    os << "SpectralIndex: 2p+alpha+beta+1 > 0 violated at n=" << n;
    throw DomainError(os.str());
  }
  if (std::fabs(1.0 + p + prm.alpha) < kPoleTolerance)
    throw DomainError("SpectralIndex: 1+p+alpha != 0 violated");
  return SpectralIndex{n, p};
}

}  // namespace pwh
