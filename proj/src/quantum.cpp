#include "qgame/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgame {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNormTol = 1e-9;

}  // namespace

EntanglementParam::EntanglementParam(double gamma) : gamma_ent(gamma) {
  if (!(gamma >= 0.0 && gamma <= kPi / 2.0)) {
    throw std::domain_error("gamma_ent must lie in [0, pi/2]");
  }
}

bool is_valid(const ProbVector4& eps, double tol) {
  for (double e : eps.as_array()) {
    if (!(e >= -tol && e <= 1.0 + tol)) return false;
  }
  return std::abs(eps.sum() - 1.0) <= tol;
}

Unitary2 build_unitary(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::domain_error("build_unitary: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi <= kPi / 2.0)) {
    throw std::domain_error("build_unitary: phi must lie in [0, pi/2]");
  }
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex phase(std::cos(phi), std::sin(phi));

  Unitary2 u;
  u.theta = theta;
  u.phi = phi;
  u.matrix[0][0] = phase * c;
  u.matrix[0][1] = Complex(s, 0.0);
  u.matrix[1][0] = Complex(-s, 0.0);
  u.matrix[1][1] = std::conj(phase) * c;
  return u;
}

Mat4 build_j_gate(EntanglementParam gamma) {
  const double c = std::cos(gamma.gamma_ent / 2.0);
  const Complex is(0.0, std::sin(gamma.gamma_ent / 2.0));

  // F x F has the anti-diagonal +1, -1, -1, +1.
  Mat4 j{};
  for (int i = 0; i < 4; ++i) j[i][i] = Complex(c, 0.0);
  j[0][3] += is;
  j[1][2] -= is;
  j[2][1] -= is;
  j[3][0] += is;
  return j;
}

State4 evolve(const Unitary2& ua, const Unitary2& ub,
              EntanglementParam gamma) {
  const double c = std::cos(gamma.gamma_ent / 2.0);
  const double s = std::sin(gamma.gamma_ent / 2.0);
  const Complex is(0.0, s);

  // (U_A x U_B) J |S1 S1'> = c (a0 x b0) + i s (a1 x b1), with a0/a1 the
  // columns of U_A and likewise for U_B.
  const Mat2& a = ua.matrix;
  const Mat2& b = ub.matrix;
  std::array<Complex, 4> mid;
  for (int r = 0; r < 2; ++r) {
    for (int rp = 0; rp < 2; ++rp) {
      mid[2 * r + rp] = c * (a[r][0] * b[rp][0]) + is * (a[r][1] * b[rp][1]);
    }
  }

  // J^dagger = c I - i s (F x F); (F x F) psi = (psi3, -psi2, -psi1, psi0).
  State4 out;
  out.amp[0] = c * mid[0] - is * mid[3];
  out.amp[1] = c * mid[1] + is * mid[2];
  out.amp[2] = c * mid[2] + is * mid[1];
  out.amp[3] = c * mid[3] - is * mid[0];
  return out;
}

ProbVector4 measure_probs(const State4& state) {
  const double n2 = std::norm(state.amp[0]) + std::norm(state.amp[1]) +
                    std::norm(state.amp[2]) + std::norm(state.amp[3]);
  if (std::abs(std::sqrt(n2) - 1.0) > kNormTol) {
    throw std::domain_error(
        "measure_probs: state norm deviates from 1 by more than 1e-9");
  }
  return {std::norm(state.amp[0]) / n2, std::norm(state.amp[1]) / n2,
          std::norm(state.amp[2]) / n2, std::norm(state.amp[3]) / n2};
}

PayoffPair quantum_payoffs(const GameMatrix& game, const ProbVector4& eps) {
  const double pi_a = game.alpha * eps.eps1 + game.beta * eps.eps2 +
                      game.gamma_pay * eps.eps3 + game.theta_pay * eps.eps4;
  const double pi_b = game.alpha * eps.eps1 + game.gamma_pay * eps.eps2 +
                      game.beta * eps.eps3 + game.theta_pay * eps.eps4;
  return {pi_a, pi_b};
}

Mat2 matmul(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Mat2 adjoint(const Mat2& m) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = std::conj(m[j][i]);
  }
  return out;
}

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Mat4 adjoint(const Mat4& m) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = std::conj(m[j][i]);
  }
  return out;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
        }
      }
    }
  }
  return out;
}

Mat4 identity4() {
  Mat4 out{};
  for (int i = 0; i < 4; ++i) out[i][i] = Complex(1.0, 0.0);
  return out;
}

State4 apply_gate(const Mat4& m, const State4& v) {
  State4 out;
  for (int i = 0; i < 4; ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < 4; ++j) acc += m[i][j] * v.amp[j];
    out.amp[i] = acc;
  }
  return out;
}

double state_norm(const State4& v) {
  return std::sqrt(std::norm(v.amp[0]) + std::norm(v.amp[1]) +
                   std::norm(v.amp[2]) + std::norm(v.amp[3]));
}

}  // namespace qgame
