#include "qgame/serialize.hpp"

#include <cmath>

namespace qgame {

using nlohmann::json;

void to_json(json& j, const GameMatrix& game) {
  j = json{{"alpha", game.alpha},
           {"beta", game.beta},
           {"gamma_pay", game.gamma_pay},
           {"theta_pay", game.theta_pay}};
}

void from_json(const json& j, GameMatrix& game) {
  j.at("alpha").get_to(game.alpha);
  j.at("beta").get_to(game.beta);
  j.at("gamma_pay").get_to(game.gamma_pay);
  j.at("theta_pay").get_to(game.theta_pay);
}

void to_json(json& j, const MixedProfile& profile) {
  j = json{{"p", profile.p}, {"q", profile.q}};
}

void from_json(const json& j, MixedProfile& profile) {
  j.at("p").get_to(profile.p);
  j.at("q").get_to(profile.q);
}

void to_json(json& j, const PayoffPair& payoffs) {
  j = json{{"pi_a", payoffs.pi_a}, {"pi_b", payoffs.pi_b}};
}

void to_json(json& j, const ProbVector4& eps) {
  j = json::array({eps.eps1, eps.eps2, eps.eps3, eps.eps4});
}

void from_json(const json& j, ProbVector4& eps) {
  if (!j.is_array() || j.size() != 4) {
    throw json::type_error::create(302, "probability vector must have four entries", &j);
  }
  eps.eps1 = j[0].get<double>();
  eps.eps2 = j[1].get<double>();
  eps.eps3 = j[2].get<double>();
  eps.eps4 = j[3].get<double>();
}

void to_json(json& j, const State4& state) {
  j = json::array();
  for (const Complex& a : state.amp) {
    j.push_back(json::array({a.real(), a.imag()}));
  }
}

void to_json(json& j, const Equilibrium& eq) {
  j = json{{"kind", to_string(eq.kind)},
           {"p", eq.profile.p},
           {"q", eq.profile.q},
           {"pi_a", eq.payoffs.pi_a},
           {"pi_b", eq.payoffs.pi_b}};
}

void to_json(json& j, const NashReport& report) {
  j = json{{"method", report.method},
           {"continuum", report.continuum},
           {"equilibria", report.equilibria}};
}

void to_json(json& j, const FactorizationResult& result) {
  j = json{{"factorizable", result.factorizable},
           {"residuals", result.residuals},
           {"max_residual", result.max_residual()}};
  if (result.witness) j["witness"] = *result.witness;
}

void to_json(json& j, const Eps1Admissibility& adm) {
  j = json{{"eps", adm.eps},
           {"negative", adm.negative},
           {"admissible", adm.admissible}};
}

void to_json(json& j, const GridSpec& grid) {
  j = json{{"theta_steps", grid.theta_steps}, {"phi_steps", grid.phi_steps}};
}

void from_json(const json& j, GridSpec& grid) {
  j.at("theta_steps").get_to(grid.theta_steps);
  j.at("phi_steps").get_to(grid.phi_steps);
}

void to_json(json& j, const Unitary2& u) {
  j = json{{"theta", u.theta}, {"phi", u.phi}};
}

void to_json(json& j, const ApproxNE& ne) {
  j = json{{"theta_a", ne.ua.theta},
           {"phi_a", ne.ua.phi},
           {"theta_b", ne.ub.theta},
           {"phi_b", ne.ub.phi},
           {"pi_a", ne.payoffs.pi_a},
           {"pi_b", ne.payoffs.pi_b},
           {"max_improvement", ne.max_improvement},
           {"grid", ne.grid},
           {"cluster_size", ne.cluster_size}};
}

}  // namespace qgame
