#include "qgame/factorize.hpp"

#include <algorithm>
#include <cmath>

namespace qgame {

double FactorizationResult::max_residual() const {
  return std::max({residuals[0], residuals[1], residuals[2], residuals[3]});
}

MixedProfile marginals(const ProbVector4& eps) {
  return {std::clamp(eps.eps1 + eps.eps2, 0.0, 1.0),
          std::clamp(eps.eps1 + eps.eps3, 0.0, 1.0)};
}

ProbVector4 make_factorizable(const MixedProfile& profile) {
  const double p = profile.p;
  const double q = profile.q;
  return {p * q, p * (1.0 - q), (1.0 - p) * q, (1.0 - p) * (1.0 - q)};
}

FactorizationResult check_factorizable(const ProbVector4& eps, double tol) {
  const MixedProfile witness = marginals(eps);
  const ProbVector4 rebuilt = make_factorizable(witness);

  FactorizationResult result;
  const auto given = eps.as_array();
  const auto recon = rebuilt.as_array();
  for (int i = 0; i < 4; ++i) {
    result.residuals[i] = std::abs(given[i] - recon[i]);
  }
  result.factorizable = result.max_residual() <= tol;
  if (result.factorizable) result.witness = witness;
  return result;
}

}  // namespace qgame
