#pragma once

#include <array>
#include <complex>

#include "qgame/game.hpp"

namespace qgame {

using Complex = std::complex<double>;

// Fixed-size complex matrices, row-major.  Two-qubit objects use the basis
// order |S1 S1'>, |S1 S2'>, |S2 S1'>, |S2 S2'>.
using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;

struct State4 {
  std::array<Complex, 4> amp{};
};

// A player's strategy U(theta, phi) with theta in [0, pi], phi in [0, pi/2]:
//
//   [  e^{i phi} cos(theta/2)   sin(theta/2)            ]
//   [ -sin(theta/2)             e^{-i phi} cos(theta/2) ]
struct Unitary2 {
  double theta = 0.0;
  double phi = 0.0;
  Mat2 matrix{};
};

// Entanglement measure of the initial state; 0 is a product game, pi/2 a
// maximally entangled one.
struct EntanglementParam {
  double gamma_ent = 0.0;

  explicit EntanglementParam(double gamma);
};

// Joint outcome probabilities (eps1..eps4) on the measurement basis.
struct ProbVector4 {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps3 = 0.0;
  double eps4 = 0.0;

  double sum() const { return eps1 + eps2 + eps3 + eps4; }
  std::array<double, 4> as_array() const { return {eps1, eps2, eps3, eps4}; }
};

/// Entries in [0,1] and sum equal to 1, both within tol.
bool is_valid(const ProbVector4& eps, double tol = 1e-12);

/// Strategy unitary for (theta, phi); throws std::domain_error out of range.
Unitary2 build_unitary(double theta, double phi);

// Entangling gate J = cos(gamma/2) I + i sin(gamma/2) (F x F), where
// F = [[0,1],[-1,0]] is the matrix of the theta = pi strategy.  J is unitary,
// reduces to the identity at gamma = 0, and maps |S1 S1'> to the maximally
// entangled (|S1 S1'> + i |S2 S2'>)/sqrt(2) at gamma = pi/2.
Mat4 build_j_gate(EntanglementParam gamma);

/// Final state J^dagger (U_A x U_B) J |S1 S1'>.
State4 evolve(const Unitary2& ua, const Unitary2& ub, EntanglementParam gamma);

// Outcome probabilities |amp_i|^2.  States whose norm deviates from 1 by
// more than 1e-9 are rejected with std::domain_error; the result is
// renormalized so the four entries sum to 1 exactly up to rounding.
ProbVector4 measure_probs(const State4& state);

/// Pi_A = a.e1 + b.e2 + g.e3 + t.e4; Pi_B swaps the roles of b and g.
PayoffPair quantum_payoffs(const GameMatrix& game, const ProbVector4& eps);

// Small dense helpers used by the gate tests and the CLI.
Mat2 matmul(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& m);
Mat4 matmul(const Mat4& a, const Mat4& b);
Mat4 adjoint(const Mat4& m);
Mat4 kron(const Mat2& a, const Mat2& b);
Mat4 identity4();
State4 apply_gate(const Mat4& m, const State4& v);
double state_norm(const State4& v);

}  // namespace qgame
