#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgame/game.hpp"
#include "qgame/quantum.hpp"

namespace qgame {

// Strategy grid over the box [0, pi] x [0, pi/2].  A count of 1 degenerates
// that axis to the single point 0.
struct GridSpec {
  int theta_steps = 101;
  int phi_steps = 51;

  double theta_at(int i) const;
  double phi_at(int j) const;
  int size() const { return theta_steps * phi_steps; }
};

/// Throws std::domain_error unless both counts are >= 1.
void validate(const GridSpec& grid);

enum class Player { a, b };

struct BestResponse {
  Unitary2 strategy;  // lowest (theta, phi) index among the maximizers
  double payoff = 0.0;
  // All grid indices whose payoff ties the maximum within 1e-12 relative.
  std::vector<std::pair<int, int>> ties;
};

/// Grid point maximizing the responder's payoff against a fixed opponent,
/// evaluated through evolve -> measure_probs -> quantum_payoffs.
BestResponse best_response(const GameMatrix& game, const Unitary2& opponent,
                           EntanglementParam gamma, const GridSpec& grid,
                           Player responder);

struct ApproxNE {
  Unitary2 ua;
  Unitary2 ub;
  PayoffPair payoffs;
  double max_improvement = 0.0;  // re-certified against the full grid
  GridSpec grid;
  int cluster_size = 1;  // grid pairs merged into this entry
};

// Largest payoff gain either player can reach by deviating to a grid point,
// the pair's own payoff included as a candidate (so the result is >= 0).
double max_unilateral_improvement(const GameMatrix& game, const Unitary2& ua,
                                  const Unitary2& ub, EntanglementParam gamma,
                                  const GridSpec& grid);

// All strategy pairs on the grid where neither player can improve by more
// than tol.  Symmetric pairs are scanned at full density; asymmetric pairs
// are audited on a quarter-density sublattice (endpoints kept).  Hits within
// one lattice step of each other are clustered and reported once, with the
// representative chosen by lowest improvement then lowest index, and each
// representative is re-certified by an independent second pass.  An empty
// result is a valid outcome.  workers = 0 picks the hardware concurrency;
// results are identical for every worker count.
std::vector<ApproxNE> find_quantum_ne(const GameMatrix& game,
                                      EntanglementParam gamma,
                                      const GridSpec& grid, double tol,
                                      int workers = 1);

struct SweepEntry {
  double gamma_ent = 0.0;
  std::vector<ApproxNE> equilibria;
};

/// find_quantum_ne at `samples` evenly spaced entanglement values in
/// [gamma_from, gamma_to]; rows ordered by gamma_ent.
std::vector<SweepEntry> entanglement_sweep(const GameMatrix& game,
                                           double gamma_from, double gamma_to,
                                           int samples, const GridSpec& grid,
                                           double tol, int workers = 1);

/// CSV with header gamma_ent,theta_a,phi_a,theta_b,phi_b,pi_a,pi_b,
/// max_improvement and one row per (sample, equilibrium).
std::string sweep_to_csv(const std::vector<SweepEntry>& table);

}  // namespace qgame
