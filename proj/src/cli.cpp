#include "qgame/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qgame/factorize.hpp"
#include "qgame/nonfactorizable.hpp"
#include "qgame/serialize.hpp"

namespace qgame::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kSearchTol = 1e-6;

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

// Everything the command line and the config file can supply, with presence
// tracked so flags can override file values.
struct RawConfig {
  std::optional<std::string> model;
  std::optional<double> alpha, beta, gamma_pay, theta_pay;
  std::optional<double> gamma_ent, k, eps1, tol, from, to;
  std::optional<int> samples;
  std::vector<double> eps;
  std::optional<std::string> grid;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
};

GridSpec parse_grid(const std::string& text) {
  int theta_steps = 0;
  int phi_steps = 0;
  char trailing = '\0';
  if (std::sscanf(text.c_str(), "%dx%d%c", &theta_steps, &phi_steps,
                  &trailing) != 2) {
    throw ConfigError("grid", "grid must have the form NxM, e.g. 101x51");
  }
  if (theta_steps < 1 || phi_steps < 1) {
    throw ConfigError("grid", "grid step counts must be >= 1");
  }
  return {theta_steps, phi_steps};
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("config file is not valid JSON: ") + e.what());
  }
}

double number_field(const json& j, const std::string& key) {
  if (!j.is_number()) {
    throw ConfigError(key, "config key '" + key + "' must be a number");
  }
  return j.get<double>();
}

void merge_config_file(RawConfig& raw, const json& file) {
  if (!file.is_object()) {
    throw ConfigError("config", "config file must hold a JSON object");
  }
  for (const auto& [key, value] : file.items()) {
    if (key == "alpha") {
      if (!raw.alpha) raw.alpha = number_field(value, key);
    } else if (key == "beta") {
      if (!raw.beta) raw.beta = number_field(value, key);
    } else if (key == "gamma_pay") {
      if (!raw.gamma_pay) raw.gamma_pay = number_field(value, key);
    } else if (key == "theta_pay") {
      if (!raw.theta_pay) raw.theta_pay = number_field(value, key);
    } else if (key == "model") {
      if (!raw.model) raw.model = value.get<std::string>();
    } else if (key == "gamma_ent") {
      if (!raw.gamma_ent) raw.gamma_ent = number_field(value, key);
    } else if (key == "k") {
      if (!raw.k) raw.k = number_field(value, key);
    } else if (key == "eps1") {
      if (!raw.eps1) raw.eps1 = number_field(value, key);
    } else if (key == "eps") {
      if (raw.eps.empty()) {
        if (!value.is_array() || value.size() != 4) {
          throw ConfigError("eps", "eps must be an array of four numbers");
        }
        for (const auto& entry : value) raw.eps.push_back(number_field(entry, key));
      }
    } else if (key == "grid") {
      if (!raw.grid) {
        if (value.is_string()) {
          raw.grid = value.get<std::string>();
        } else if (value.is_object()) {
          const GridSpec g = value.get<GridSpec>();
          raw.grid = std::to_string(g.theta_steps) + "x" + std::to_string(g.phi_steps);
        } else {
          throw ConfigError("grid", "grid must be \"NxM\" or an object");
        }
      }
    } else if (key == "tol") {
      if (!raw.tol) raw.tol = number_field(value, key);
    } else if (key == "from") {
      if (!raw.from) raw.from = number_field(value, key);
    } else if (key == "to") {
      if (!raw.to) raw.to = number_field(value, key);
    } else if (key == "samples") {
      if (!raw.samples) raw.samples = value.get<int>();
    } else if (key == "seed") {
      if (!raw.seed) raw.seed = value.get<std::uint64_t>();
    } else if (key == "out") {
      if (!raw.out) raw.out = value.get<std::string>();
    } else {
      throw ConfigError(key, "unknown config key '" + key + "'");
    }
  }
}

GameMatrix game_from_raw(const RawConfig& raw) {
  const auto require = [&](const std::optional<double>& v, const char* name) {
    if (!v) {
      throw ConfigError(name, std::string("missing required parameter --") + name);
    }
    if (!std::isfinite(*v)) {
      throw ConfigError(name, std::string("--") + name + " must be finite");
    }
    return *v;
  };
  return {require(raw.alpha, "alpha"), require(raw.beta, "beta"),
          require(raw.gamma_pay, "gamma-pay"), require(raw.theta_pay, "theta-pay")};
}

// Flags that were given on the command line must belong to the chosen model.
void reject_mismatched_flags(const RawConfig& cli_only, Model model,
                             Command command) {
  const auto forbid = [&](bool present, const char* name) {
    if (present) {
      throw ConfigError(name, std::string("parameter --") + name +
                                  " does not apply to model " +
                                  to_string(model) +
                                  (command == Command::sweep ? " in a sweep" : ""));
    }
  };
  const bool sweeping = command == Command::sweep;
  forbid(cli_only.gamma_ent.has_value() && (model != Model::quantum || sweeping),
         "gamma-ent");
  forbid(cli_only.k.has_value() && (model != Model::approach1 || sweeping), "k");
  forbid(cli_only.eps1.has_value() && (model != Model::approach2 || sweeping),
         "eps1");
  forbid(!cli_only.eps.empty() && model != Model::factorize, "eps");
  forbid(cli_only.grid.has_value() && model != Model::quantum, "grid");
  forbid(cli_only.tol.has_value() && model != Model::quantum &&
             model != Model::factorize,
         "tol");
}

json config_json(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command == Command::analyze
                     ? "analyze"
                     : (cfg.command == Command::sweep ? "sweep" : "factorize");
  j["model"] = to_string(cfg.model);
  if (cfg.game) j["game"] = *cfg.game;
  if (cfg.model == Model::quantum && cfg.command == Command::analyze) {
    j["gamma_ent"] = cfg.gamma_ent;
  }
  if (cfg.k) j["k"] = *cfg.k;
  if (cfg.eps1) j["eps1"] = *cfg.eps1;
  if (cfg.eps) j["eps"] = *cfg.eps;
  if (cfg.model == Model::quantum) j["grid"] = cfg.grid;
  if (cfg.model == Model::quantum || cfg.model == Model::factorize) {
    j["tol"] = cfg.tol;
  }
  if (cfg.sweep) {
    j["sweep"] = {{"from", cfg.sweep->from},
                  {"to", cfg.sweep->to},
                  {"samples", cfg.sweep->samples}};
  }
  j["seed"] = cfg.seed;
  return j;
}

double sample_value(const SweepRange& range, int i) {
  if (i == 0) return range.from;
  if (i == range.samples - 1) return range.to;
  return range.from + (range.to - range.from) * i / (range.samples - 1);
}

const char* sweep_parameter(Model model) {
  switch (model) {
    case Model::approach1:
      return "k";
    case Model::approach2:
      return "eps1";
    case Model::quantum:
      return "gamma_ent";
    default:
      return "";
  }
}

void append_nash_csv(std::string& csv, double value, const NashReport& nash) {
  for (const Equilibrium& eq : nash.equilibria) {
    csv += format_number(value);
    csv += ',';
    csv += to_string(eq.kind);
    for (double v : {eq.profile.p, eq.profile.q, eq.payoffs.pi_a,
                     eq.payoffs.pi_b}) {
      csv += ',';
      csv += format_number(v);
    }
    csv += '\n';
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
  if (!out) throw IoError("failed while writing: " + path);
}

}  // namespace

Model model_from_string(const std::string& name) {
  if (name == "classical") return Model::classical;
  if (name == "quantum") return Model::quantum;
  if (name == "approach1") return Model::approach1;
  if (name == "approach2") return Model::approach2;
  if (name == "factorize") return Model::factorize;
  throw ConfigError("model", "unknown model '" + name +
                                 "' (expected classical, quantum, approach1, "
                                 "approach2, or factorize)");
}

const char* to_string(Model model) {
  switch (model) {
    case Model::classical:
      return "classical";
    case Model::quantum:
      return "quantum";
    case Model::approach1:
      return "approach1";
    case Model::approach2:
      return "approach2";
    case Model::factorize:
      return "factorize";
  }
  return "unknown";
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RawConfig raw;
  std::optional<std::string> config_path;

  CLI::App app{"Symmetric 2x2 game analysis under classical, quantum, and "
               "non-factorizable probability models"};
  app.require_subcommand(1);

  const auto add_game_options = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", raw.alpha, "payoff entry alpha");
    cmd->add_option("--beta", raw.beta, "payoff entry beta");
    cmd->add_option("--gamma-pay", raw.gamma_pay, "payoff entry gamma");
    cmd->add_option("--theta-pay", raw.theta_pay, "payoff entry theta");
  };
  const auto add_shared_options = [&](CLI::App* cmd) {
    cmd->add_option("model,--model", raw.model,
                    "classical|quantum|approach1|approach2|factorize");
    add_game_options(cmd);
    cmd->add_option("--grid", raw.grid, "strategy grid as NxM (default 101x51)");
    cmd->add_option("--tol", raw.tol, "tolerance");
    cmd->add_option("--out", raw.out, "output path");
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--seed", raw.seed, "seed echoed into reports");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "solve one configuration");
  add_shared_options(analyze);
  analyze->add_option("--gamma-ent", raw.gamma_ent,
                      "entanglement in [0, pi/2] (default pi/2)");
  analyze->add_option("--k", raw.k, "approach1 parameter in [0, 1]");
  analyze->add_option("--eps1", raw.eps1, "approach2 constant eps1");
  analyze->add_option("--eps", raw.eps, "four outcome probabilities")
      ->expected(4);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "sweep k, eps1, or gamma_ent and emit CSV rows");
  add_shared_options(sweep);
  sweep->add_option("--from", raw.from, "sweep start");
  sweep->add_option("--to", raw.to, "sweep end");
  sweep->add_option("--samples", raw.samples, "sample count (default 101)");

  CLI::App* factorize =
      app.add_subcommand("factorize", "test four probabilities for factorizability");
  factorize->add_option("eps", raw.eps, "eps1 eps2 eps3 eps4")
      ->expected(4)
      ->required();
  factorize->add_option("--tol", raw.tol, "residual tolerance (default 1e-9)");
  factorize->add_option("--out", raw.out, "output path");

  std::vector<const char*> argv;
  argv.push_back("qgame");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    CLI::App* active = app.get_subcommands().empty()
                           ? &app
                           : app.get_subcommands().front();
    throw HelpRequested{active->help()};
  } catch (const CLI::ParseError& e) {
    throw ConfigError("arguments", e.what());
  }

  RawConfig cli_only = raw;  // flag presence before the file merge
  if (config_path) merge_config_file(raw, load_config_file(*config_path));

  RunConfig cfg;
  if (factorize->parsed()) {
    cfg.command = Command::factorize;
    raw.model = "factorize";
    cli_only.model = "factorize";
  } else {
    cfg.command = sweep->parsed() ? Command::sweep : Command::analyze;
  }

  if (!raw.model) {
    throw ConfigError("model", "missing required parameter: model");
  }
  cfg.model = model_from_string(*raw.model);
  reject_mismatched_flags(cli_only, cfg.model, cfg.command);

  if (cfg.model != Model::factorize) {
    cfg.game = game_from_raw(raw);
  }

  switch (cfg.model) {
    case Model::classical:
      break;
    case Model::approach1:
      if (cfg.command == Command::analyze) {
        if (!raw.k) throw ConfigError("k", "missing required parameter --k");
        if (!(*raw.k >= 0.0 && *raw.k <= 1.0)) {
          throw ConfigError("k", "--k must lie in [0, 1]");
        }
        cfg.k = *raw.k;
      }
      break;
    case Model::approach2:
      if (cfg.command == Command::analyze) {
        if (!raw.eps1) {
          throw ConfigError("eps1", "missing required parameter --eps1");
        }
        if (!std::isfinite(*raw.eps1)) {
          throw ConfigError("eps1", "--eps1 must be finite");
        }
        cfg.eps1 = *raw.eps1;
      }
      break;
    case Model::quantum:
      cfg.gamma_ent = raw.gamma_ent.value_or(kPi / 2.0);
      if (!(cfg.gamma_ent >= 0.0 && cfg.gamma_ent <= kPi / 2.0)) {
        throw ConfigError("gamma-ent", "--gamma-ent must lie in [0, pi/2]");
      }
      break;
    case Model::factorize: {
      if (raw.eps.size() != 4) {
        throw ConfigError("eps", "missing required parameter --eps (four numbers)");
      }
      std::array<double, 4> eps{};
      for (int i = 0; i < 4; ++i) {
        if (!std::isfinite(raw.eps[i])) {
          throw ConfigError("eps", "eps entries must be finite");
        }
        eps[i] = raw.eps[i];
      }
      cfg.eps = eps;
      break;
    }
  }

  if (raw.grid) cfg.grid = parse_grid(*raw.grid);
  cfg.tol = raw.tol.value_or(cfg.model == Model::factorize ? kFactorizeTol
                                                           : kSearchTol);
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
    throw ConfigError("tol", "--tol must be a positive number");
  }

  if (cfg.command == Command::sweep) {
    if (cfg.model == Model::classical || cfg.model == Model::factorize) {
      throw ConfigError("model", std::string("model ") + to_string(cfg.model) +
                                     " has no sweep parameter");
    }
    SweepRange range;
    range.from = raw.from.value_or(0.0);
    range.to = raw.to.value_or(cfg.model == Model::quantum ? kPi / 2.0 : 1.0);
    range.samples = raw.samples.value_or(101);
    if (range.samples < 1) {
      throw ConfigError("samples", "--samples must be >= 1");
    }
    if (!(range.from <= range.to)) {
      throw ConfigError("from", "--from must not exceed --to");
    }
    if (range.samples == 1 && range.from != range.to) {
      throw ConfigError("samples", "a single-sample sweep needs --from equal to --to");
    }
    if (cfg.model == Model::approach1 &&
        !(range.from >= 0.0 && range.to <= 1.0)) {
      throw ConfigError("from", "k sweep range must stay within [0, 1]");
    }
    if (cfg.model == Model::quantum &&
        !(range.from >= 0.0 && range.to <= kPi / 2.0)) {
      throw ConfigError("from", "gamma_ent sweep range must stay within [0, pi/2]");
    }
    if (cfg.model == Model::approach2 &&
        (!std::isfinite(range.from) || !std::isfinite(range.to))) {
      throw ConfigError("from", "eps1 sweep range must be finite");
    }
    cfg.sweep = range;
  }

  if (raw.out) cfg.out_path = *raw.out;
  cfg.seed = raw.seed.value_or(0);
  return cfg;
}

Report run(const RunConfig& cfg) {
  Report report;
  report["schema"] = kReportSchema;
  report["config"] = config_json(cfg);

  json results;
  switch (cfg.model) {
    case Model::classical:
      results["nash"] = classical_nash(*cfg.game);
      break;
    case Model::approach1:
      results["nash"] = approach1_nash(*cfg.game, KParam(*cfg.k));
      break;
    case Model::approach2: {
      const Eps1Param eps1(*cfg.eps1);
      const NashReport nash = approach2_nash(*cfg.game, eps1);
      results["nash"] = nash;
      json adm = json::array();
      for (const Equilibrium& eq : nash.equilibria) {
        adm.push_back(approach2_admissibility(eq.profile, eps1));
      }
      results["admissibility"] = adm;
      break;
    }
    case Model::quantum: {
      const EntanglementParam gamma(cfg.gamma_ent);
      const std::vector<ApproxNE> found =
          find_quantum_ne(*cfg.game, gamma, cfg.grid, cfg.tol, 0);
      json arr = json::array();
      for (const ApproxNE& ne : found) {
        json entry = ne;
        const State4 state = evolve(ne.ua, ne.ub, gamma);
        entry["state"] = state;
        entry["eps"] = measure_probs(state);
        arr.push_back(std::move(entry));
      }
      results["equilibria"] = arr;
      break;
    }
    case Model::factorize: {
      const auto& e = *cfg.eps;
      const ProbVector4 eps{e[0], e[1], e[2], e[3]};
      if (!is_valid(eps, 1e-9)) {
        throw std::domain_error(
            "eps is not a probability vector (entries in [0,1], sum 1)");
      }
      results["factorization"] = check_factorizable(eps, cfg.tol);
      break;
    }
  }
  report["results"] = results;
  return report;
}

SweepOutput run_sweep(const RunConfig& cfg) {
  const SweepRange range = *cfg.sweep;
  SweepOutput output;
  std::string csv;
  json rows = json::array();

  if (cfg.model == Model::quantum) {
    const std::vector<SweepEntry> table =
        entanglement_sweep(*cfg.game, range.from, range.to, range.samples,
                           cfg.grid, cfg.tol, 0);
    csv = sweep_to_csv(table);
    for (const SweepEntry& entry : table) {
      rows.push_back(
          {{"gamma_ent", entry.gamma_ent}, {"equilibria", entry.equilibria}});
    }
  } else {
    const char* param = sweep_parameter(cfg.model);
    csv = std::string(param) + ",kind,p,q,pi_a,pi_b\n";
    for (int i = 0; i < range.samples; ++i) {
      const double value = sample_value(range, i);
      const NashReport nash =
          cfg.model == Model::approach1
              ? approach1_nash(*cfg.game, KParam(value))
              : approach2_nash(*cfg.game, Eps1Param(value));
      rows.push_back({{"value", value}, {"nash", nash}});
      append_nash_csv(csv, value, nash);
    }
  }

  output.report["schema"] = kReportSchema;
  output.report["config"] = config_json(cfg);
  output.report["results"] = {
      {"sweep",
       {{"parameter", sweep_parameter(cfg.model)}, {"rows", rows}}}};
  output.csv = std::move(csv);
  return output;
}

int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error [" << e.field() << "]: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }

  try {
    if (cfg.command == Command::sweep) {
      const SweepOutput result = run_sweep(cfg);
      if (cfg.out_path.empty()) {
        out << result.csv;
      } else {
        write_file(cfg.out_path, result.csv);
        out << result.report.dump(2) << '\n';
      }
    } else {
      const Report report = run(cfg);
      const std::string text = report.dump(2) + "\n";
      if (cfg.out_path.empty()) {
        out << text;
      } else {
        write_file(cfg.out_path, text);
      }
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    Report report;
    report["schema"] = kReportSchema;
    report["config"] = config_json(cfg);
    report["error"] = e.what();
    out << report.dump(2) << '\n';
    return kExitDomain;
  }
}

}  // namespace qgame::cli
