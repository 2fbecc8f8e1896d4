#include "qgame/game.hpp"

#include <cmath>
#include <stdexcept>

namespace qgame {

namespace {

// Interior roots this close to 0 or 1 collapse into the pure analysis.
constexpr double kInteriorMargin = 1e-12;

}  // namespace

bool is_valid(const GameMatrix& game) {
  return std::isfinite(game.alpha) && std::isfinite(game.beta) &&
         std::isfinite(game.gamma_pay) && std::isfinite(game.theta_pay);
}

bool is_valid(const MixedProfile& profile) {
  return profile.p >= 0.0 && profile.p <= 1.0 && profile.q >= 0.0 &&
         profile.q <= 1.0;
}

const char* to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::pure:
      return "pure";
    case EquilibriumKind::mixed:
      return "mixed";
    case EquilibriumKind::continuum:
      return "continuum";
  }
  return "unknown";
}

PayoffPair classical_payoffs(const GameMatrix& game,
                             const MixedProfile& profile) {
  const double p = profile.p;
  const double q = profile.q;
  const double pi_a = game.alpha * p * q + game.beta * p * (1.0 - q) +
                      game.gamma_pay * (1.0 - p) * q +
                      game.theta_pay * (1.0 - p) * (1.0 - q);
  const double pi_b = game.alpha * p * q + game.gamma_pay * p * (1.0 - q) +
                      game.beta * (1.0 - p) * q +
                      game.theta_pay * (1.0 - p) * (1.0 - q);
  return {pi_a, pi_b};
}

NashReport solve_affine_nash(const GameMatrix& game, double coeff,
                             double constant, const PayoffFn& payoffs) {
  NashReport report;
  const auto add = [&](EquilibriumKind kind, double p, double q) {
    const MixedProfile profile{p, q};
    report.equilibria.push_back({kind, profile, payoffs(game, profile)});
  };

  if (coeff == 0.0 && constant == 0.0) {
    report.continuum = true;
    add(EquilibriumKind::continuum, 0.0, 0.0);
    return report;
  }

  // A corner is an equilibrium when the bracket coeff*other + constant has
  // the sign that keeps the player pinned there.
  if (constant <= 0.0) add(EquilibriumKind::pure, 0.0, 0.0);
  if (coeff + constant >= 0.0) add(EquilibriumKind::pure, 1.0, 1.0);
  if (coeff + constant <= 0.0 && constant >= 0.0) {
    add(EquilibriumKind::pure, 0.0, 1.0);
    add(EquilibriumKind::pure, 1.0, 0.0);
  }

  if (coeff != 0.0) {
    const double root = -constant / coeff;
    if (root >= kInteriorMargin && root <= 1.0 - kInteriorMargin) {
      add(EquilibriumKind::mixed, root, root);
    }
  }
  return report;
}

NashReport classical_nash(const GameMatrix& game) {
  const double coeff =
      game.alpha - game.beta - game.gamma_pay + game.theta_pay;
  const double constant = game.beta - game.theta_pay;
  return solve_affine_nash(game, coeff, constant, classical_payoffs);
}

bool verify_nash(const GameMatrix& game, const MixedProfile& profile,
                 const PayoffFn& payoffs, double tol, int grid_steps) {
  if (grid_steps < 1) {
    throw std::domain_error("verify_nash: grid_steps must be >= 1");
  }
  const PayoffPair base = payoffs(game, profile);
  for (int i = 0; i <= grid_steps; ++i) {
    const double x = static_cast<double>(i) / grid_steps;
    if (payoffs(game, {x, profile.q}).pi_a > base.pi_a + tol) return false;
    if (payoffs(game, {profile.p, x}).pi_b > base.pi_b + tol) return false;
  }
  return true;
}

}  // namespace qgame
