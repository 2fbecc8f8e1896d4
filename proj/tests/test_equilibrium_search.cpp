#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "qgame/search.hpp"

using namespace qgame;
using test::kPD;

namespace {

constexpr double kPi = std::numbers::pi;

const Unitary2 kQhat = build_unitary(0.0, kPi / 2.0);

bool same_pair(const ApproxNE& ne, double ta, double pa, double tb, double pb,
               double tol = 1e-12) {
  return std::abs(ne.ua.theta - ta) <= tol && std::abs(ne.ua.phi - pa) <= tol &&
         std::abs(ne.ub.theta - tb) <= tol && std::abs(ne.ub.phi - pb) <= tol;
}

}  // namespace

TEST_CASE("grid spec lays points over the strategy box") {
  const GridSpec grid{101, 51};
  CHECK(grid.theta_at(0) == 0.0);
  CHECK(grid.theta_at(100) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(grid.phi_at(0) == 0.0);
  CHECK(grid.phi_at(50) == doctest::Approx(kPi / 2.0).epsilon(1e-15));

  const GridSpec degenerate{3, 1};
  CHECK(degenerate.phi_at(0) == 0.0);

  CHECK_THROWS_AS(validate(GridSpec{0, 5}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{5, 0}), std::domain_error);
}

TEST_CASE("best response to the Q strategy is the Q strategy") {
  const BestResponse reply = best_response(
      kPD, kQhat, EntanglementParam(kPi / 2.0), GridSpec{101, 51}, Player::a);
  CHECK(reply.payoff <= 3.0 + 1e-9);
  CHECK(reply.strategy.theta == 0.0);
  CHECK(reply.strategy.phi == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  REQUIRE(reply.ties.size() == 1);
  CHECK(reply.ties[0].first == 0);
  CHECK(reply.ties[0].second == 50);
}

TEST_CASE("best response to full defection at zero entanglement is defection") {
  const Unitary2 defect = build_unitary(kPi, 0.0);
  const GridSpec grid{21, 5};
  const BestResponse reply =
      best_response(kPD, defect, EntanglementParam(0.0), grid, Player::a);
  CHECK(reply.strategy.theta == doctest::Approx(kPi).epsilon(1e-15));
  // phi is payoff-irrelevant at gamma = 0, so the whole phi axis ties and the
  // lowest index wins.
  CHECK(reply.strategy.phi == 0.0);
  CHECK(reply.ties.size() == 5);
  for (const auto& [i, j] : reply.ties) CHECK(i == 20);
}

TEST_CASE("constant games tie everywhere") {
  const GameMatrix flat{2.0, 2.0, 2.0, 2.0};
  const GridSpec grid{5, 3};
  const BestResponse reply = best_response(
      flat, build_unitary(1.0, 0.5), EntanglementParam(1.0), grid, Player::b);
  CHECK(static_cast<int>(reply.ties.size()) == grid.size());
  CHECK(reply.strategy.theta == 0.0);
  CHECK(reply.strategy.phi == 0.0);
}

TEST_CASE("find_quantum_ne certifies the fully entangled cooperative pair") {
  const GridSpec grid{21, 11};
  const std::vector<ApproxNE> found =
      find_quantum_ne(kPD, EntanglementParam(kPi / 2.0), grid, 1e-6);
  REQUIRE_FALSE(found.empty());

  const auto q_pair =
      std::find_if(found.begin(), found.end(), [&](const ApproxNE& ne) {
        return same_pair(ne, 0.0, kPi / 2.0, 0.0, kPi / 2.0, 1e-12);
      });
  REQUIRE(q_pair != found.end());
  CHECK(q_pair->payoffs.pi_a == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(q_pair->payoffs.pi_b == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(q_pair->max_improvement <= 1e-6);

  for (const ApproxNE& ne : found) {
    CHECK(max_unilateral_improvement(kPD, ne.ua, ne.ub,
                                     EntanglementParam(kPi / 2.0),
                                     grid) <= 1e-6);
  }
}

TEST_CASE("zero entanglement with phi pinned to zero recovers the classical NE") {
  const GridSpec grid{21, 1};
  const std::vector<ApproxNE> found =
      find_quantum_ne(kPD, EntanglementParam(0.0), grid, 1e-6);
  REQUIRE(found.size() == 1);
  CHECK(same_pair(found[0], kPi, 0.0, kPi, 0.0, 1e-12));
  // theta = pi maps to the classical defect probability p = cos^2(pi/2) = 0.
  CHECK(found[0].payoffs.pi_a == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(found[0].payoffs.pi_b == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("zero-entanglement equilibria map onto classical ones") {
  const GameMatrix coordination{2.0, 0.0, 0.0, 1.0};
  const GridSpec grid{21, 1};
  const std::vector<ApproxNE> found =
      find_quantum_ne(coordination, EntanglementParam(0.0), grid, 1e-6);
  const NashReport classical = classical_nash(coordination);
  REQUIRE_FALSE(found.empty());

  const double step = 1.0 / (grid.theta_steps - 1);
  for (const ApproxNE& ne : found) {
    const double p = std::cos(ne.ua.theta / 2.0) * std::cos(ne.ua.theta / 2.0);
    const double q = std::cos(ne.ub.theta / 2.0) * std::cos(ne.ub.theta / 2.0);
    const bool matches_classical = std::any_of(
        classical.equilibria.begin(), classical.equilibria.end(),
        [&](const Equilibrium& eq) {
          return std::abs(eq.profile.p - p) <= step &&
                 std::abs(eq.profile.q - q) <= step;
        });
    CHECK(matches_classical);
  }
  // Both pure classical equilibria appear on the grid.
  CHECK(std::any_of(found.begin(), found.end(), [&](const ApproxNE& ne) {
    return same_pair(ne, 0.0, 0.0, 0.0, 0.0, 1e-12);
  }));
  CHECK(std::any_of(found.begin(), found.end(), [&](const ApproxNE& ne) {
    return same_pair(ne, kPi, 0.0, kPi, 0.0, 1e-12);
  }));
}

TEST_CASE("every examined pair of a constant game qualifies and clusters once") {
  const GameMatrix flat{2.0, 2.0, 2.0, 2.0};
  const GridSpec grid{5, 3};
  const std::vector<ApproxNE> found =
      find_quantum_ne(flat, EntanglementParam(0.7), grid, 1e-6);
  REQUIRE(found.size() == 1);
  // 15 symmetric pairs plus 4*3 ordered pairs from the 2x2 audit lattice.
  CHECK(found[0].cluster_size == 27);
  CHECK(found[0].max_improvement <= 1e-12);
}

TEST_CASE("worker count does not change the result") {
  const GridSpec grid{17, 9};
  const std::vector<ApproxNE> one =
      find_quantum_ne(kPD, EntanglementParam(1.1), grid, 1e-6, 1);
  const std::vector<ApproxNE> three =
      find_quantum_ne(kPD, EntanglementParam(1.1), grid, 1e-6, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].ua.theta == three[i].ua.theta);
    CHECK(one[i].ua.phi == three[i].ua.phi);
    CHECK(one[i].ub.theta == three[i].ub.theta);
    CHECK(one[i].ub.phi == three[i].ub.phi);
    CHECK(one[i].max_improvement == three[i].max_improvement);
    CHECK(one[i].payoffs.pi_a == three[i].payoffs.pi_a);
  }
}

TEST_CASE("doubling the grid density respects the Lipschitz refinement bound") {
  const GridSpec coarse{13, 7};
  const GridSpec fine{25, 13};
  const double max_entry = 5.0;
  const double pitch = kPi / 12.0 + (kPi / 2.0) / 6.0;
  const double bound = 2.0 * max_entry * pitch;

  for (double gamma : {0.0, kPi / 4.0, kPi / 2.0}) {
    const std::vector<ApproxNE> found =
        find_quantum_ne(kPD, EntanglementParam(gamma), coarse, 1e-6);
    for (const ApproxNE& ne : found) {
      const double refined = max_unilateral_improvement(
          kPD, ne.ua, ne.ub, EntanglementParam(gamma), fine);
      CHECK(refined <= ne.max_improvement + bound);
    }
  }
}

TEST_CASE("entanglement sweep endpoints match single runs") {
  const GridSpec grid{13, 7};
  const double tol = 1e-6;

  const std::vector<SweepEntry> single_high =
      entanglement_sweep(kPD, kPi / 2.0, kPi / 2.0, 1, grid, tol);
  REQUIRE(single_high.size() == 1);
  const std::vector<ApproxNE> direct_high =
      find_quantum_ne(kPD, EntanglementParam(kPi / 2.0), grid, tol);
  REQUIRE(single_high[0].equilibria.size() == direct_high.size());
  for (std::size_t i = 0; i < direct_high.size(); ++i) {
    CHECK(single_high[0].equilibria[i].ua.theta == direct_high[i].ua.theta);
    CHECK(single_high[0].equilibria[i].payoffs.pi_a == direct_high[i].payoffs.pi_a);
  }

  const std::vector<SweepEntry> single_low =
      entanglement_sweep(kPD, 0.0, 0.0, 1, grid, tol);
  REQUIRE(single_low.size() == 1);

  const std::vector<SweepEntry> table =
      entanglement_sweep(kPD, 0.0, kPi / 2.0, 5, grid, tol);
  REQUIRE(table.size() == 5);
  CHECK(std::is_sorted(table.begin(), table.end(),
                       [](const SweepEntry& a, const SweepEntry& b) {
                         return a.gamma_ent < b.gamma_ent;
                       }));
  CHECK(table.front().gamma_ent == 0.0);
  CHECK(table.back().gamma_ent == kPi / 2.0);
  REQUIRE(table.front().equilibria.size() == single_low[0].equilibria.size());
  for (std::size_t i = 0; i < single_low[0].equilibria.size(); ++i) {
    CHECK(table.front().equilibria[i].ua.theta ==
          single_low[0].equilibria[i].ua.theta);
    CHECK(table.front().equilibria[i].payoffs.pi_a ==
          single_low[0].equilibria[i].payoffs.pi_a);
  }
  REQUIRE(table.back().equilibria.size() == single_high[0].equilibria.size());
  for (std::size_t i = 0; i < single_high[0].equilibria.size(); ++i) {
    CHECK(table.back().equilibria[i].ua.theta ==
          single_high[0].equilibria[i].ua.theta);
    CHECK(table.back().equilibria[i].max_improvement ==
          single_high[0].equilibria[i].max_improvement);
  }

  const std::string csv = sweep_to_csv(table);
  CHECK(csv.rfind("gamma_ent,theta_a,phi_a,theta_b,phi_b,pi_a,pi_b,max_improvement\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 2);

  CHECK_THROWS_AS(entanglement_sweep(kPD, 0.0, kPi / 2.0, 0, grid, tol),
                  std::domain_error);
  CHECK_THROWS_AS(entanglement_sweep(kPD, -0.5, kPi / 2.0, 3, grid, tol),
                  std::domain_error);
}
