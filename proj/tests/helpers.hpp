#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qgame/game.hpp"
#include "qgame/quantum.hpp"

// Shared fixtures and brute-force oracles.  The oracles only touch payoff
// functions and raw arithmetic, never the solvers they certify.

namespace qgame::test {

inline constexpr GameMatrix kPD{3.0, 0.0, 5.0, 1.0};

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline MixedProfile random_profile(std::mt19937& rng) {
  return {uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0)};
}

inline GameMatrix random_game(std::mt19937& rng) {
  return {uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0),
          uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
}

inline ProbVector4 random_prob_vector(std::mt19937& rng) {
  double x1 = uniform(rng, 0.0, 1.0);
  double x2 = uniform(rng, 0.0, 1.0);
  double x3 = uniform(rng, 0.0, 1.0);
  double x4 = uniform(rng, 0.0, 1.0);
  const double total = x1 + x2 + x3 + x4;
  return {x1 / total, x2 / total, x3 / total, x4 / total};
}

// All profiles on an n x n grid over [0,1]^2 from which no player can gain
// more than tol by deviating to another grid point.
inline std::vector<MixedProfile> grid_nash_oracle(const GameMatrix& game,
                                                  const PayoffFn& payoffs,
                                                  int n, double tol) {
  const int points = n + 1;
  std::vector<double> pi_a(points * points);
  std::vector<double> pi_b(points * points);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const PayoffPair pay = payoffs(
          game, {static_cast<double>(i) / n, static_cast<double>(j) / n});
      pi_a[i * points + j] = pay.pi_a;
      pi_b[i * points + j] = pay.pi_b;
    }
  }

  std::vector<double> col_max_a(points, -1e300);
  std::vector<double> row_max_b(points, -1e300);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      col_max_a[j] = std::max(col_max_a[j], pi_a[i * points + j]);
      row_max_b[i] = std::max(row_max_b[i], pi_b[i * points + j]);
    }
  }

  std::vector<MixedProfile> found;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (col_max_a[j] - pi_a[i * points + j] <= tol &&
          row_max_b[i] - pi_b[i * points + j] <= tol) {
        found.push_back(
            {static_cast<double>(i) / n, static_cast<double>(j) / n});
      }
    }
  }
  return found;
}

// Smallest max-residual reachable by any product distribution on an
// (n+1) x (n+1) witness grid; large values certify non-factorizability.
inline double factorization_grid_min_residual(const ProbVector4& eps,
                                              int n = 1000) {
  const double e1 = eps.eps1;
  const double e2 = eps.eps2;
  const double e3 = eps.eps3;
  const double e4 = eps.eps4;
  double best = 1e300;
  for (int i = 0; i <= n; ++i) {
    const double p = static_cast<double>(i) / n;
    for (int j = 0; j <= n; ++j) {
      const double q = static_cast<double>(j) / n;
      const double r1 = std::abs(e1 - p * q);
      const double r2 = std::abs(e2 - p * (1.0 - q));
      const double r3 = std::abs(e3 - (1.0 - p) * q);
      const double r4 = std::abs(e4 - (1.0 - p) * (1.0 - q));
      const double worst = std::max(std::max(r1, r2), std::max(r3, r4));
      best = std::min(best, worst);
    }
  }
  return best;
}

}  // namespace qgame::test
