#pragma once

#include <array>
#include <optional>

#include "qgame/game.hpp"
#include "qgame/quantum.hpp"

namespace qgame {

inline constexpr double kFactorizeTol = 1e-9;

struct FactorizationResult {
  bool factorizable = false;
  std::optional<MixedProfile> witness;  // present iff factorizable
  std::array<double, 4> residuals{};    // |eps_i - reconstructed_i|

  double max_residual() const;
};

/// Marginal probabilities (eps1 + eps2, eps1 + eps3), clamped to [0,1].
MixedProfile marginals(const ProbVector4& eps);

/// Product distribution (pq, p(1-q), (1-p)q, (1-p)(1-q)).
ProbVector4 make_factorizable(const MixedProfile& profile);

// Rebuilds the product distribution from the marginal pair and compares; the
// vector is factorizable iff the largest residual is at most tol, in which
// case the marginal pair is the witness.
FactorizationResult check_factorizable(const ProbVector4& eps,
                                       double tol = kFactorizeTol);

}  // namespace qgame
