#include "qgame/nonfactorizable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgame {

KParam::KParam(double value) : k(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error("k must lie in [0, 1]");
  }
}

Eps1Param::Eps1Param(double value) : eps1(value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("eps1 must be finite");
  }
}

ProbVector4 approach1_distribution(const MixedProfile& profile, KParam k) {
  const double p = profile.p;
  const double q = profile.q;
  const double kk = k.k;
  const double m = 2.0 * kk - 1.0;
  return {m * m * p * q,
          (1.0 - kk) * p * (1.0 - q) + kk * q * (1.0 - p),
          (1.0 - kk) * q * (1.0 - p) + kk * p * (1.0 - q),
          4.0 * kk * (1.0 - kk) * p * q + (1.0 - p) * (1.0 - q)};
}

PayoffPair approach1_payoffs(const GameMatrix& game,
                             const MixedProfile& profile, KParam k) {
  return quantum_payoffs(game, approach1_distribution(profile, k));
}

NashReport approach1_nash(const GameMatrix& game, KParam k) {
  const double kk = k.k;
  const double m = 1.0 - 2.0 * kk;
  const double coeff = game.alpha * m * m - game.beta - game.gamma_pay +
                       game.theta_pay * (1.0 + 4.0 * kk * (1.0 - kk));
  const double constant =
      (game.beta - game.theta_pay) - kk * (game.beta - game.gamma_pay);
  const PayoffFn payoffs = [k](const GameMatrix& g, const MixedProfile& s) {
    return approach1_payoffs(g, s, k);
  };
  return solve_affine_nash(game, coeff, constant, payoffs);
}

PayoffPair approach2_payoffs(const GameMatrix& game,
                             const MixedProfile& profile, Eps1Param eps1) {
  const double mix =
      game.alpha - game.beta - game.gamma_pay + game.theta_pay;
  const double pi_a = eps1.eps1 * mix + (game.beta - game.theta_pay) * profile.p +
                      (game.gamma_pay - game.theta_pay) * profile.q +
                      game.theta_pay;
  const double pi_b = eps1.eps1 * mix +
                      (game.gamma_pay - game.theta_pay) * profile.p +
                      (game.beta - game.theta_pay) * profile.q +
                      game.theta_pay;
  return {pi_a, pi_b};
}

NashReport approach2_nash(const GameMatrix& game, Eps1Param eps1) {
  const PayoffFn payoffs = [eps1](const GameMatrix& g,
                                  const MixedProfile& s) {
    return approach2_payoffs(g, s, eps1);
  };
  return solve_affine_nash(game, 0.0, game.beta - game.theta_pay, payoffs);
}

Eps1Admissibility approach2_admissibility(const MixedProfile& profile,
                                          Eps1Param eps1) {
  const double p = profile.p;
  const double q = profile.q;
  const double e1 = eps1.eps1;

  Eps1Admissibility result;
  result.eps = {e1, p - e1, q - e1, 1.0 - (p + q) + e1};
  for (int i = 0; i < 4; ++i) result.negative[i] = result.eps[i] < 0.0;
  result.admissible =
      e1 >= std::max(0.0, p + q - 1.0) && e1 <= std::min(p, q);
  return result;
}

}  // namespace qgame
