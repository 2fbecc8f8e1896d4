#pragma once

#include <array>

#include "qgame/game.hpp"
#include "qgame/quantum.hpp"

namespace qgame {

// Mixing weight of the first non-factorizable model; in [0, 1].
struct KParam {
  double k = 0.0;

  explicit KParam(double value);
};

// Constant first outcome probability of the second model.  Only finiteness is
// required here; whether the value is admissible as a probability at a given
// profile is reported by approach2_admissibility, not enforced.
struct Eps1Param {
  double eps1 = 0.0;

  explicit Eps1Param(double value);
};

// Joint distribution of the first model:
//   eps1 = (2k-1)^2 pq
//   eps2 = (1-k) p(1-q) + k q(1-p)
//   eps3 = (1-k) q(1-p) + k p(1-q)
//   eps4 = 4k(1-k) pq + (1-p)(1-q)
// Normalized for every (p, q, k); reduces to the product distribution at
// k = 0.
ProbVector4 approach1_distribution(const MixedProfile& profile, KParam k);

/// quantum_payoffs evaluated on approach1_distribution.
PayoffPair approach1_payoffs(const GameMatrix& game,
                             const MixedProfile& profile, KParam k);

// Equilibria of the first model via the same sign analysis as
// classical_nash, with coefficient
//   alpha (1-2k)^2 - beta - gamma + theta (1 + 4k(1-k))
// and constant (beta - theta) - k (beta - gamma).
NashReport approach1_nash(const GameMatrix& game, KParam k);

// Payoffs of the reduced game with eps1 held constant:
//   Pi_A = eps1 (a - b - g + t) + (b - t) p + (g - t) q + t
// and Pi_B with the roles of b and g swapped.  Evaluated as a formal affine
// function even where the implied eps2..eps4 would be negative.
PayoffPair approach2_payoffs(const GameMatrix& game,
                             const MixedProfile& profile, Eps1Param eps1);

// (1,1) when beta > theta, (0,0) when beta < theta, the full continuum when
// they coincide.  Payoffs are taken from approach2_payoffs at the given eps1.
NashReport approach2_nash(const GameMatrix& game, Eps1Param eps1);

struct Eps1Admissibility {
  // eps1 as given, then eps2 = p - eps1, eps3 = q - eps1,
  // eps4 = 1 - (p + q) + eps1.  Entries may fall outside [0, 1].
  std::array<double, 4> eps{};
  std::array<bool, 4> negative{};  // flags entries < 0
  bool admissible = false;         // max(0, p+q-1) <= eps1 <= min(p, q)
};

/// Diagnoses whether the constant eps1 yields a genuine distribution at
/// the given profile.
Eps1Admissibility approach2_admissibility(const MixedProfile& profile,
                                          Eps1Param eps1);

}  // namespace qgame
