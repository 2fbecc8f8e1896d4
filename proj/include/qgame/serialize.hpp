#pragma once

#include "json.hpp"
#include "qgame/factorize.hpp"
#include "qgame/game.hpp"
#include "qgame/nonfactorizable.hpp"
#include "qgame/quantum.hpp"
#include "qgame/search.hpp"

// JSON adapters.  Game matrices use the shared schema with keys
// "alpha", "beta", "gamma_pay", "theta_pay"; states serialize as arrays of
// [re, im] pairs and probability vectors as arrays of four numbers.

namespace qgame {

void to_json(nlohmann::json& j, const GameMatrix& game);
void from_json(const nlohmann::json& j, GameMatrix& game);

void to_json(nlohmann::json& j, const MixedProfile& profile);
void from_json(const nlohmann::json& j, MixedProfile& profile);

void to_json(nlohmann::json& j, const PayoffPair& payoffs);

void to_json(nlohmann::json& j, const ProbVector4& eps);
void from_json(const nlohmann::json& j, ProbVector4& eps);

void to_json(nlohmann::json& j, const State4& state);

void to_json(nlohmann::json& j, const Equilibrium& eq);
void to_json(nlohmann::json& j, const NashReport& report);

void to_json(nlohmann::json& j, const FactorizationResult& result);

void to_json(nlohmann::json& j, const Eps1Admissibility& adm);

void to_json(nlohmann::json& j, const GridSpec& grid);
void from_json(const nlohmann::json& j, GridSpec& grid);

void to_json(nlohmann::json& j, const Unitary2& u);
void to_json(nlohmann::json& j, const ApproxNE& ne);

}  // namespace qgame
