#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qgame {

// Payoff entries of the symmetric 2x2 bimatrix
//
//               S1'                 S2'
//   S1   (alpha, alpha)     (beta, gamma_pay)
//   S2   (gamma_pay, beta)  (theta_pay, theta_pay)
//
// gamma_pay / theta_pay are named to keep them apart from the entanglement
// parameter gamma_ent and the strategy angle theta used elsewhere.
struct GameMatrix {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma_pay = 0.0;
  double theta_pay = 0.0;
};

/// All four entries finite.
bool is_valid(const GameMatrix& game);

// Probabilities with which each player picks their first pure strategy.
struct MixedProfile {
  double p = 0.0;
  double q = 0.0;
};

/// Both components in [0, 1].
bool is_valid(const MixedProfile& profile);

struct PayoffPair {
  double pi_a = 0.0;
  double pi_b = 0.0;
};

enum class EquilibriumKind { pure, mixed, continuum };

const char* to_string(EquilibriumKind kind);

struct Equilibrium {
  EquilibriumKind kind = EquilibriumKind::pure;
  MixedProfile profile;  // representative point when kind == continuum
  PayoffPair payoffs;
};

struct NashReport {
  std::vector<Equilibrium> equilibria;
  bool continuum = false;  // every profile in [0,1]^2 is an equilibrium
  std::string method = "analytic";
};

// Payoff model evaluated at a mixed profile; must be total on [0,1]^2.
using PayoffFn =
    std::function<PayoffPair(const GameMatrix&, const MixedProfile&)>;

/// Expected payoffs (Pi_A, Pi_B) for independent mixing (p, q).
PayoffPair classical_payoffs(const GameMatrix& game,
                             const MixedProfile& profile);

// Equilibria of a game whose best-response condition is
//   [coeff * q* + constant] (p* - p) >= 0    for all p in [0,1],
// plus the twin condition with the roles of p and q swapped.  Corners are
// classified by the sign of the bracket, the symmetric interior root
// -constant/coeff is reported when it lies in [1e-12, 1 - 1e-12], and a
// vanishing coeff and constant yield the full continuum.  Payoffs are filled
// in through `payoffs`.
NashReport solve_affine_nash(const GameMatrix& game, double coeff,
                             double constant, const PayoffFn& payoffs);

/// Nash equilibria of the classical mixed-strategy game.
NashReport classical_nash(const GameMatrix& game);

// True iff no unilateral deviation on the grid {i/grid_steps} improves the
// deviator's payoff by more than tol.  Exact for payoffs affine in each
// player's own probability; grid pitch 1/100 by default.
bool verify_nash(const GameMatrix& game, const MixedProfile& profile,
                 const PayoffFn& payoffs, double tol, int grid_steps = 100);

}  // namespace qgame
